#pragma once

#include <vector>

#include "pernloci/poly.hpp"

namespace pernloci {

struct RootFinderOptions {
    int max_iterations = 500;
    /// Newton polishing stops once |p(t)| <= residual_tol * sum |a_i| |t|^i.
    double residual_tol = 1e-12;
};

/// All complex roots of a square-free polynomial by Aberth-Ehrlich simultaneous
/// iteration, each polished by Newton steps.
std::vector<cplx> simple_roots(const UniPoly& p, const RootFinderOptions& opts = {});

struct RootWithMultiplicity {
    cplx value;
    int multiplicity = 1;
    double residual = 0.0;  ///< relative residual of the square-free factor at value
};

/// Roots of an arbitrary integer polynomial, grouped by multiplicity through an
/// exact square-free decomposition.
std::vector<RootWithMultiplicity> roots_with_multiplicity(const UniPoly& p, const RootFinderOptions& opts = {});

/// |p(t)| / sum |a_i| |t|^i
double relative_residual(const UniPoly& p, const cplx& t);

}  // namespace pernloci
