// Independent reference computations shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pernloci/curves.hpp"
#include "pernloci/linalg.hpp"

namespace oracle {

using pernloci::cplx;
using pernloci::Rational;

// Even-odd ray casting; independent of the library's crossing code.
inline bool point_in_polygon(const std::vector<cplx>& poly, const cplx& p) {
    bool in = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const cplx a = poly[i], b = poly[j];
        if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
            const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
            if (p.real() < x) in = !in;
        }
    }
    return in;
}

inline std::vector<std::string> enclosed_labels(const std::vector<cplx>& poly, const pernloci::MarkedSet& marks) {
    std::vector<std::string> out;
    for (const auto& p : marks.points()) {
        if (!p.pos.is_inf() && point_in_polygon(poly, p.pos.value())) out.push_back(p.label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Smallest m in {1..bound}^k with (T - I) m = 0, by exhaustive search.
inline std::optional<std::vector<int>> brute_force_equalizing(const pernloci::RationalMatrix& T,
                                                              const pernloci::RationalMatrix& I, int bound) {
    const std::size_t k = T.cols();
    std::vector<int> m(k, 1);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < T.rows() && ok; ++i) {
            Rational s;
            for (std::size_t j = 0; j < k; ++j) s += (T(i, j) - I(i, j)) * Rational(m[j]);
            ok = s.is_zero();
        }
        if (ok) return m;
        std::size_t j = 0;
        while (j < k && m[j] == bound) m[j++] = 1;
        if (j == k) return std::nullopt;
        ++m[j];
    }
}

// Minimal XML well-formedness check: balanced tags, quoted attributes, known entities.
inline bool xml_well_formed(const std::string& s, std::string* why = nullptr) {
    auto fail = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    auto check_text = [](const std::string& s, std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k) {
            if (s[k] == '<') return false;
            if (s[k] == '&') {
                const auto semi = s.find(';', k);
                if (semi == std::string::npos || semi > to) return false;
                const std::string ent = s.substr(k + 1, semi - k - 1);
                if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos" && (ent.empty() || ent[0] != '#'))
                    return false;
            }
        }
        return true;
    };
    while (i < s.size()) {
        const auto lt = s.find('<', i);
        if (lt == std::string::npos) {
            if (!check_text(s, i, s.size())) return fail("bad trailing text");
            break;
        }
        if (!check_text(s, i, lt)) return fail("bad text");
        if (s.compare(lt, 4, "<!--") == 0) {
            const auto end = s.find("-->", lt);
            if (end == std::string::npos) return fail("open comment");
            i = end + 3;
            continue;
        }
        if (s.compare(lt, 2, "<?") == 0) {
            const auto end = s.find("?>", lt);
            if (end == std::string::npos) return fail("open declaration");
            i = end + 2;
            continue;
        }
        // Find the closing '>' outside attribute quotes.
        std::size_t k = lt + 1;
        char quote = 0;
        while (k < s.size() && (quote || s[k] != '>')) {
            if (quote) {
                if (s[k] == quote) quote = 0;
                else if (s[k] == '<') return fail("'<' in attribute");
            } else if (s[k] == '"' || s[k] == '\'') {
                quote = s[k];
            }
            ++k;
        }
        if (k >= s.size()) return fail("unterminated tag");
        std::string tag = s.substr(lt + 1, k - lt - 1);
        i = k + 1;
        if (!tag.empty() && tag[0] == '/') {
            std::string name = tag.substr(1);
            while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
            if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
            stack.pop_back();
            continue;
        }
        const bool self_closing = !tag.empty() && tag.back() == '/';
        if (self_closing) tag.pop_back();
        std::size_t p = 0;
        while (p < tag.size() && !std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
        const std::string name = tag.substr(0, p);
        if (name.empty()) return fail("empty tag name");
        if (stack.empty()) {
            if (root_seen) return fail("second root element");
            root_seen = true;
        }
        // attributes: name="value"
        while (p < tag.size()) {
            while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
            if (p >= tag.size()) break;
            const auto eq = tag.find('=', p);
            if (eq == std::string::npos) return fail("attribute without value in <" + name + ">");
            std::size_t q = eq + 1;
            if (q >= tag.size() || (tag[q] != '"' && tag[q] != '\'')) return fail("unquoted attribute in <" + name + ">");
            const auto close = tag.find(tag[q], q + 1);
            if (close == std::string::npos) return fail("unterminated attribute");
            if (!check_text(tag, q + 1, close)) return fail("bad attribute text");
            p = close + 1;
        }
        if (!self_closing) stack.push_back(name);
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (!root_seen) return fail("no root element");
    return true;
}

}  // namespace oracle
