#pragma once

#include <span>
#include <vector>

#include "holodyn/types.hpp"

namespace holodyn {

/// Roots of sum_k a_k z^k (ascending coefficients, leading zeros trimmed) as
/// eigenvalues of the companion matrix. Multiple roots are repeated.
std::vector<Complex> companion_roots(std::span<const Complex> ascending);

struct DurandKernerResult {
    std::vector<Complex> roots;
    int iterations = 0;
    bool converged = false;
};

/// Weierstrass / Durand-Kerner simultaneous iteration. Independent of the
/// companion route; used to cross-check it.
DurandKernerResult durand_kerner_roots(std::span<const Complex> ascending, int max_iterations = 20000,
                                       double tol = 1e-14);

/// Horner evaluation of the polynomial and its derivative.
Complex horner(std::span<const Complex> ascending, Complex z, Complex* derivative = nullptr);

}  // namespace holodyn
