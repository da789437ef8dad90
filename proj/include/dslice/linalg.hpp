#pragma once

#include <optional>
#include <vector>

#include "dslice/matrix.hpp"

namespace dslice::linalg {

/// U * M * W = D with U, W unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SnfResult {
    IntMatrix U, D, W;
    std::vector<Int> diagonal() const;
};

/// Deterministic Smith normal form: pivot is the smallest nonzero absolute
/// value in the active submatrix, ties broken by leftmost column then topmost row.
SnfResult smith_normal_form(const IntMatrix& m);

Int det(const IntMatrix& m);   // exact, Bareiss; throws NonSquareMatrix
Rat det(const RatMatrix& m);   // exact Gaussian elimination

RatMatrix rational_inverse(const IntMatrix& m);  // throws SingularMatrix
RatMatrix rational_inverse(const RatMatrix& m);

/// Integer solution of M x = b if one exists (decided via SNF).
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

/// Row-style Hermite normal form basis of the lattice spanned by the rows of a.
/// Returns an r x cols matrix (r = rank), echelon with positive pivots and
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_row_basis(const IntMatrix& a);

}  // namespace dslice::linalg
