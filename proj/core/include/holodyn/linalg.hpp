#pragma once

#include <vector>

#include "holodyn/types.hpp"

namespace holodyn {

/// Eigenvalues of a dense complex matrix (complex Schur / Hessenberg-QR).
std::vector<Complex> eigenvalues(const Matrix& m);

/// Singular values, descending.
std::vector<double> singular_values(const Matrix& m);

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Matrix& m);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const Matrix& m, double rel_tol);

/// Orthonormal basis (columns) of {x : m x = 0}, cutoff rel_tol * sigma_max.
Matrix null_space(const Matrix& m, double rel_tol);

/// 2-norm condition number sigma_max / sigma_min (infinite if rank deficient).
double condition_number(const Matrix& m);

/// Greedy nearest pairing of two multisets. Returns the largest pairing
/// distance, each measured relative to max(1, |b_j|); infinity when the
/// sizes differ.
double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

inline bool multisets_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double rel_tol) {
    return multiset_distance(a, b) <= rel_tol;
}

}  // namespace holodyn
