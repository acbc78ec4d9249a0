#pragma once

#include <optional>
#include <vector>

#include "pernloci/exact.hpp"

namespace pernloci {

/// Dense rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix select_columns(const std::vector<std::size_t>& cols) const;
    RationalMatrix select_rows(const std::vector<std::size_t>& rows) const;
    bool row_is_zero(std::size_t i) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Basis of {x : M x = 0}, from fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Basis vectors have integer entries.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// One inequality sum_j a_j y_j >= rhs.
struct Inequality {
    std::vector<Rational> a;
    Rational rhs;
};

/// A point satisfying every inequality, by Fourier-Motzkin elimination with
/// back-substitution; nullopt when the system is infeasible.
std::optional<std::vector<Rational>> fourier_motzkin(const std::vector<Inequality>& system, std::size_t n_vars);

/// Scales a nonzero rational vector to coprime integers (sign kept).
std::vector<Rational> to_coprime_integers(const std::vector<Rational>& v);

}  // namespace pernloci
