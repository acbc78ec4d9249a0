#include "pernloci/pullback.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pernloci {

namespace {

std::array<cplx, 2> finite_roots(const QuadMap<cplx>& f, const cplx& z) {
    const Preimages p = preimage_roots(f, ComplexVal(z));
    for (const auto& r : p.roots) {
        if (r.is_inf() || !std::isfinite(std::abs(r.value())))
            throw Error(ErrorCode::Clearance, "curve passes through 1 = f(inf); a preimage runs through infinity");
    }
    return {p.roots[0].value(), p.roots[1].value()};
}

double guard_distance(const cplx& w, const std::vector<cplx>& guards) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& g : guards) d = std::min(d, std::abs(w - g));
    return d;
}

}  // namespace

PreimageResult trace_preimage(const QuadMap<cplx>& f, const PolyCurve& curve, const MarkedSet& A, const MarkedSet& B,
                              const TraceOptions& opts) {
    const ComplexVal v = f.critical_value();
    const bool has_v = std::any_of(B.points().begin(), B.points().end(),
                                   [&](const MarkedPoint& p) { return same_position(p.pos, v, 1e-9); });
    if (!B.has_infinity() || !has_v)
        throw Error(ErrorCode::NotReduced, "B must contain both critical values, infinity and v");
    const PolyCurve checked = validate(curve, B, opts.clearance_rel);

    std::vector<cplx> guards;
    for (const auto& p : A.points()) {
        if (p.pos.is_finite()) guards.push_back(p.pos.value());
    }
    const ComplexVal c2 = f.crit2();
    if (c2.is_finite()) guards.push_back(c2.value());

    const auto& zs = checked.vertices();
    const std::size_t N = zs.size();
    std::array<std::vector<cplx>, 2> branch;
    const auto start = finite_roots(f, zs[0]);
    branch[0].push_back(start[0]);
    branch[1].push_back(start[1]);

    PreimageResult result;
    for (std::size_t e = 0; e < N; ++e) {
        const cplx a = zs[e];
        const cplx b = zs[(e + 1) % N];
        double t = 0.0;
        int depth = 0;
        while (t < 1.0) {
            const double h = std::ldexp(1.0, -depth);
            const bool last = t + h >= 1.0;
            const double t_next = last ? 1.0 : t + h;
            const cplx z = last ? b : a + t_next * (b - a);
            const auto roots = finite_roots(f, z);
            const cplx w0 = branch[0].back();
            const cplx w1 = branch[1].back();
            std::array<cplx, 2> next = roots;
            if (std::abs(w0 - roots[1]) + std::abs(w1 - roots[0]) < std::abs(w0 - roots[0]) + std::abs(w1 - roots[1]))
                std::swap(next[0], next[1]);
            const double d0 = std::abs(next[0] - w0);
            const double d1 = std::abs(next[1] - w1);
            const bool ok = d0 <= opts.step_fraction * guard_distance(w0, guards) &&
                            d1 <= opts.step_fraction * guard_distance(w1, guards) &&
                            std::abs(roots[0] - roots[1]) >= opts.separation_factor * std::max(d0, d1);
            if (!ok) {
                if (++depth > opts.max_bisections)
                    throw Error(ErrorCode::StepUnderflow, "tracing step underflow on edge " + std::to_string(e) +
                                                              " (curve too close to a critical value or to A)");
                result.max_bisection_depth = std::max(result.max_bisection_depth, depth);
                continue;
            }
            branch[0].push_back(next[0]);
            branch[1].push_back(next[1]);
            ++result.steps;
            t = t_next;
            // Only step back up once the fine step sits on a coarser grid point.
            if (depth > 0 && std::fmod(t, std::ldexp(1.0, -(depth - 1))) == 0.0) --depth;
        }
    }

    const cplx end0 = branch[0].back();
    result.swap = std::abs(end0 - start[1]) < std::abs(end0 - start[0]);
    branch[0].pop_back();
    branch[1].pop_back();

    auto make = [&](std::vector<cplx> pts, int degree) {
        PolyCurve pc = validate(PolyCurve(std::move(pts)), A, opts.clearance_rel);
        CurveClass cls = curve_word(pc, A, opts.clearance_rel);
        result.components.push_back({std::move(pc), degree, std::move(cls)});
    };
    if (result.swap) {
        std::vector<cplx> all = branch[0];
        all.insert(all.end(), branch[1].begin(), branch[1].end());
        make(std::move(all), 2);
    } else {
        make(std::move(branch[0]), 1);
        make(std::move(branch[1]), 1);
    }
    return result;
}

double composition_error(const QuadMap<cplx>& f, const PreimageResult& r, const PolyCurve& curve) {
    const auto& zs = curve.vertices();
    double worst = 0.0;
    for (const auto& comp : r.components) {
        for (const auto& w : comp.curve.vertices()) {
            const ComplexVal fw = f(ComplexVal(w));
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < zs.size(); ++i) {
                const cplx a = zs[i];
                const cplx d = zs[(i + 1) % zs.size()] - a;
                cplx nearest = a;
                if (fw.is_finite() && std::norm(d) > 0.0) {
                    const double t = std::clamp(((fw.value() - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
                    nearest = a + t * d;
                }
                best = std::min(best, chordal(fw, ComplexVal(nearest)));
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

// ---------------------------------------------------------------- matrices

ThurstonData assemble_thurston(const Multicurve& gamma, std::vector<PreimageResult> preimages, const MarkedSet& A) {
    if (preimages.size() != gamma.size()) throw Error(ErrorCode::InvalidArgument, "one preimage result per curve expected");
    ThurstonData d;
    auto find_or_add = [&](const CurveClass& c) {
        for (std::size_t i = 0; i < d.delta_classes.size(); ++i) {
            if (class_equal(d.delta_classes[i], c)) return i;
        }
        d.delta_classes.push_back(c);
        return d.delta_classes.size() - 1;
    };

    struct Entry {
        std::size_t row, col;
        Rational value;
    };
    std::vector<Entry> t_entries, i_entries, c_entries;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        const auto& g = gamma.curves()[j];
        d.gamma_labels.push_back(g.label);
        d.gamma_classes.push_back(g.cls);
        std::vector<int> degs;
        for (const auto& comp : preimages[j].components) {
            degs.push_back(comp.degree);
            if (!comp.essential()) continue;
            const std::size_t row = find_or_add(comp.cls);
            t_entries.push_back({row, j, Rational(1) / Rational(comp.degree)});
            c_entries.push_back({row, j, Rational(1)});
        }
        d.component_degrees.push_back(std::move(degs));
        const CurveClass image = forget(g.cls, A);
        if (image.is_essential()) i_entries.push_back({find_or_add(image), j, Rational(1)});
    }
    d.T = RationalMatrix(d.delta_classes.size(), gamma.size());
    d.I = RationalMatrix(d.delta_classes.size(), gamma.size());
    d.counts = RationalMatrix(d.delta_classes.size(), gamma.size());
    for (const auto& e : t_entries) d.T(e.row, e.col) += e.value;
    for (const auto& e : c_entries) d.counts(e.row, e.col) += e.value;
    for (const auto& e : i_entries) d.I(e.row, e.col) = e.value;
    d.preimages = std::move(preimages);
    return d;
}

ThurstonData thurston_matrices(const QuadMap<cplx>& f, const Multicurve& gamma, const MarkedSet& A, const MarkedSet& B,
                               const TraceOptions& opts) {
    std::vector<PreimageResult> pre;
    for (const auto& g : gamma.curves()) pre.push_back(trace_preimage(f, g.curve, A, B, opts));
    return assemble_thurston(gamma, std::move(pre), A);
}

// ---------------------------------------------------------------- equalizing weights

namespace {

bool multisets_agree(const RationalMatrix& I, const std::optional<RationalMatrix>& counts) {
    if (I.rows() == 0) return true;
    if (!counts) return false;
    for (std::size_t i = 0; i < I.rows(); ++i) {
        Rational a, b;
        for (std::size_t j = 0; j < I.cols(); ++j) {
            a += (*counts)(i, j);
            b += I(i, j);
        }
        if (a != b) return false;
    }
    return true;
}

EqualizeOutcome solve_full(const RationalMatrix& T, const RationalMatrix& I, const std::vector<std::string>& labels,
                           const std::optional<RationalMatrix>& counts) {
    EqualizeOutcome out;
    const std::size_t k = T.cols();
    if (k == 0) return out;
    const RationalMatrix M = T - I;
    out.nullspace_basis = nullspace(M);
    const std::size_t d = out.nullspace_basis.size();
    if (d == 0) return out;

    auto combine = [&](const std::vector<Rational>& y) {
        std::vector<Rational> m(k);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < k; ++i) m[i] += out.nullspace_basis[j][i] * y[j];
        }
        return m;
    };
    auto row_of = [&](std::size_t i) {
        Inequality q;
        for (std::size_t j = 0; j < d; ++j) q.a.push_back(out.nullspace_basis[j][i]);
        return q;
    };

    std::vector<Inequality> positive;
    for (std::size_t i = 0; i < k; ++i) {
        Inequality q = row_of(i);
        q.rhs = Rational(1);
        positive.push_back(std::move(q));
    }
    if (auto y = fourier_motzkin(positive, d)) {
        EqualizingCertificate cert;
        cert.labels = labels;
        cert.m = to_coprime_integers(combine(*y));
        cert.T = T;
        cert.I = I;
        cert.kind = multisets_agree(I, counts) ? "equalizing" : "arithmetically equalizing";
        const auto residual = M.apply(cert.m);
        cert.verified = std::all_of(residual.begin(), residual.end(), [](const Rational& r) { return r.is_zero(); }) &&
                        std::all_of(cert.m.begin(), cert.m.end(), [](const Rational& r) { return r.sign() > 0; });
        out.positive_solution = cert.verified;
        if (cert.verified) out.certificate = std::move(cert);
    }

    std::vector<Inequality> nonneg;
    Inequality total;
    total.a.assign(d, Rational(0));
    total.rhs = Rational(1);
    for (std::size_t i = 0; i < k; ++i) {
        Inequality q = row_of(i);
        for (std::size_t j = 0; j < d; ++j) total.a[j] += q.a[j];
        nonneg.push_back(std::move(q));
    }
    nonneg.push_back(std::move(total));
    if (auto y = fourier_motzkin(nonneg, d)) {
        out.nonnegative_solution = true;
        out.nonnegative_m = to_coprime_integers(combine(*y));
    }
    return out;
}

}  // namespace

EqualizeOutcome equalizing_solve(const RationalMatrix& T, const RationalMatrix& I, const std::vector<std::string>& labels,
                                 bool try_subsets, const std::optional<RationalMatrix>& counts) {
    if (T.rows() != I.rows() || T.cols() != I.cols() || labels.size() != T.cols())
        throw Error(ErrorCode::InvalidArgument, "T, I and labels disagree in shape");
    if (counts && (counts->rows() != T.rows() || counts->cols() != T.cols()))
        throw Error(ErrorCode::InvalidArgument, "counts and T disagree in shape");
    EqualizeOutcome out = solve_full(T, I, labels, counts);
    const std::size_t k = T.cols();
    if (out.certificate || !try_subsets || k < 2) return out;
    if (k > 16) throw Error(ErrorCode::LimitExceeded, "subset search is limited to 16 curves");

    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) > __builtin_popcount(b); });
    for (unsigned mask : masks) {
        std::vector<std::size_t> cols;
        std::vector<std::string> sub_labels;
        for (std::size_t j = 0; j < k; ++j) {
            if (mask & (1u << j)) {
                cols.push_back(j);
                sub_labels.push_back(labels[j]);
            }
        }
        const RationalMatrix Tc = T.select_columns(cols);
        const RationalMatrix Ic = I.select_columns(cols);
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < T.rows(); ++i) {
            if (!Tc.row_is_zero(i) || !Ic.row_is_zero(i)) rows.push_back(i);
        }
        std::optional<RationalMatrix> sub_counts;
        if (counts) sub_counts = counts->select_columns(cols).select_rows(rows);
        EqualizeOutcome sub = solve_full(Tc.select_rows(rows), Ic.select_rows(rows), sub_labels, sub_counts);
        if (sub.certificate) {
            out.certificate = std::move(sub.certificate);
            out.from_subset = true;
            return out;
        }
    }
    return out;
}

EqualizeOutcome equalizing_solve(const ThurstonData& data, bool try_subsets) {
    return equalizing_solve(data.T, data.I, data.gamma_labels, try_subsets, data.counts);
}

// ---------------------------------------------------------------- twists

std::string TwistCertificate::str() const {
    std::string s;
    for (const auto& [label, e] : word) {
        if (!s.empty()) s += ' ';
        s += "T_" + label + "^" + e.get_str();
    }
    return s;
}

TwistCertificate twist_certificate(const EqualizingCertificate& cert, const std::vector<std::vector<int>>& degrees) {
    if (degrees.size() != cert.m.size()) throw Error(ErrorCode::InvalidArgument, "one degree list per curve expected");
    TwistCertificate tc;
    for (std::size_t i = 0; i < cert.m.size(); ++i) {
        if (!cert.m[i].is_integer() || cert.m[i].sign() <= 0)
            throw Error(ErrorCode::Insufficient, "weights must be positive integers");
        BigInt L = 1;
        for (int d : degrees[i]) {
            if (d < 1) throw Error(ErrorCode::InvalidArgument, "preimage degrees must be positive");
            mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(d));
        }
        BigInt g;
        mpz_gcd(g.get_mpz_t(), L.get_mpz_t(), cert.m[i].num().get_mpz_t());
        const BigInt need = L / g;
        mpz_lcm(tc.scale.get_mpz_t(), tc.scale.get_mpz_t(), need.get_mpz_t());
        tc.lcm_degrees.push_back(L);
    }
    for (std::size_t i = 0; i < cert.m.size(); ++i) tc.word.emplace_back(cert.labels[i], tc.scale * cert.m[i].num());
    return tc;
}

}  // namespace pernloci
