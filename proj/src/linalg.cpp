#include "pernloci/linalg.hpp"

#include "pernloci/error.hpp"

namespace pernloci {

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    }
    return y;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    RationalMatrix r(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
    }
    return r;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    RationalMatrix r(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(rows[i], j);
    }
    return r;
}

bool RationalMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
    for (std::size_t i = 0; i < R; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }

    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                BigInt t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                BigInt q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw Error(ErrorCode::InvalidArgument, "fraction-free elimination lost exactness");
                a[i][j] = q;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(C, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(C);
        x[f] = Rational(1);
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = pivot_cols[k];
            Rational s;
            for (std::size_t j = pc + 1; j < C; ++j) {
                if (a[k][j] != 0) s += Rational(a[k][j]) * x[j];
            }
            x[pc] = -s / Rational(a[k][pc]);
        }
        basis.push_back(to_coprime_integers(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> fourier_motzkin(const std::vector<Inequality>& system, std::size_t n_vars) {
    for (const auto& q : system) {
        if (q.a.size() != n_vars) throw Error(ErrorCode::InvalidArgument, "inequality has the wrong number of coefficients");
    }
    // stages[k] constrains y_k, ..., y_{n-1}.
    std::vector<std::vector<Inequality>> stages{system};
    for (std::size_t k = 0; k < n_vars; ++k) {
        const auto& cur = stages.back();
        std::vector<Inequality> next, lower, upper;
        for (const auto& q : cur) {
            const int s = q.a[k].sign();
            if (s > 0) {
                lower.push_back(q);
            } else if (s < 0) {
                upper.push_back(q);
            } else {
                next.push_back(q);
            }
        }
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                const Rational wl = -up.a[k];
                const Rational wu = lo.a[k];
                Inequality comb;
                comb.a.resize(n_vars);
                for (std::size_t j = 0; j < n_vars; ++j) comb.a[j] = wl * lo.a[j] + wu * up.a[j];
                comb.a[k] = Rational(0);
                comb.rhs = wl * lo.rhs + wu * up.rhs;
                next.push_back(std::move(comb));
            }
        }
        stages.push_back(std::move(next));
    }
    for (const auto& q : stages.back()) {
        if (q.rhs.sign() > 0) return std::nullopt;
    }

    std::vector<Rational> y(n_vars);
    for (std::size_t k = n_vars; k-- > 0;) {
        std::optional<Rational> lo, hi;
        for (const auto& q : stages[k]) {
            if (q.a[k].is_zero()) continue;
            Rational rest = q.rhs;
            for (std::size_t j = k + 1; j < n_vars; ++j) rest -= q.a[j] * y[j];
            const Rational bound = rest / q.a[k];
            if (q.a[k].sign() > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        if (lo && hi && *lo > *hi) return std::nullopt;
        y[k] = lo ? *lo : (hi ? *hi : Rational(0));
    }
    return y;
}

std::vector<Rational> to_coprime_integers(const std::vector<Rational>& v) {
    BigInt l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& x : v) {
        ints.push_back(x.num() * (l / x.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (g == 0) return v;
    std::vector<Rational> out;
    for (const auto& k : ints) out.emplace_back(BigInt(k / g));
    return out;
}

}  // namespace pernloci
