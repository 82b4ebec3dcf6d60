#pragma once

#include <vector>

#include "holodyn/jet.hpp"
#include "holodyn/multi_index.hpp"
#include "holodyn/types.hpp"

namespace holodyn {

/// Matrix of the induced map on homogeneous degree-n jets,
/// m_{f(p)}^n / m_{f(p)}^{n+1} -> m_p^n / m_p^{n+1}, in the graded-lex
/// monomial basis. Column j is the image of basis[j].
struct GradedOperatorMatrix {
    int n = 0;
    int d = 0;
    Matrix entries;
    std::vector<MultiIndex> basis;
};

/// P -> u(p) * P(A z) on homogeneous polynomials of degree n.
/// Expands the substitution directly; does not go through the jet algebra.
GradedOperatorMatrix graded_matrix_formula(Complex u_at_p, const Matrix& A, int n);

/// Degree-n part of u * (h o f) for every degree-n monomial h based at f(p).
/// Both jets must carry at least degree n. At a non-fixed point the columns
/// are expressed at f(p) and the rows at p.
GradedOperatorMatrix graded_matrix_bruteforce(const Jet& u, const JetMap& f, int n,
                                              double tol_base = Tolerances{}.base);

/// Eigenvalue multiset of a square graded matrix.
std::vector<Complex> graded_eigenvalues(const GradedOperatorMatrix& m);

/// The multiset {u(p) * prod lambda_i^{alpha_i} : |alpha| = n} predicted for
/// the graded action given the eigenvalues of the linear part.
std::vector<Complex> graded_eigenvalue_law(Complex u_at_p, const std::vector<Complex>& lambdas, int n);

}  // namespace holodyn
