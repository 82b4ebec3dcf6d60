#pragma once

#include <cstdint>
#include <vector>

#include "holodyn/polynomial.hpp"
#include "holodyn/types.hpp"

namespace holodyn {

struct SphereBudget {
    int starts = 200;
    int max_iterations = 2000;
    double grad_tol = 1e-10;  // relative tangent gradient norm at which ascent stops
    std::uint64_t seed = 0;
    int threads = 1;
};

struct SphereMax {
    double value = 0.0;  // lower bound for M(r)
    Vector argmax;
    double tangent_gradient = 0.0;  // relative, at argmax
};

/// Multistart projected gradient ascent of |f(z)|^2 on the sphere |z| = r.
/// With a warm start the ascent begins there and the random starts follow.
SphereMax sphere_max(const PolyMap& f, double r, const SphereBudget& budget, const Vector* warm_start = nullptr);

struct HadamardSample {
    double s = 0.0;
    double r = 0.0;
    double M = 0.0;
    Vector q;
    double H = 0.0;
    double dH = 0.0;  // central difference; one-sided at the grid ends
    double left = 0.0;
    double right = 0.0;
};

struct SphereMaxProfile {
    std::vector<HadamardSample> samples;
    int chosen = -1;  // index of the selected s, -1 when none qualifies
    double min_second_difference = 0.0;
};

/// H(s) = log(M(e^s)/e^s) sampled on `steps` grid points of [s_lo, s_hi].
/// Throws RecoverableSearchError("extend s_range") if no grid point has
/// H > 10 tol and H' > 10 tol away from a kink.
SphereMaxProfile hadamard_profile(const PolyMap& f, double s_lo, double s_hi, int steps, const SphereBudget& budget,
                                  double tol = 1e-6);

struct RepellingConstruction {
    double s = 0.0;
    double r = 0.0;
    double M = 0.0;
    double M_prime = 0.0;
    double a = 0.0;
    Matrix U;
    Vector q;
    Vector p;
    double eta = 0.0;
    double lambda = 0.0;  // Re <B^H p, q> / r^2, with B = Df(q)
    double lambda_identity_error = 0.0;  // |lambda - M M'/r| / |lambda|
    Matrix A;  // D(f o (aU))(p)
    std::vector<Complex> eigenvalues;
    Complex realized_eigenvalue;
    double residual_fix = 0.0;
    double residual_eigvec = 0.0;
    double unitarity_error = 0.0;
    double det_error = 0.0;
    SphereMaxProfile profile;
};

struct RepellingOptions {
    double s_lo = -2.0;
    double s_hi = 4.0;
    int steps = 25;
    double tol_fix = 1e-6;
    double tol_vec = 1e-6;
    double tol_eta = 1e-3;
    double tol_lambda = 1e-3;
    SphereBudget budget;
};

/// U in SU(d) with U x = y for |x| = |y| > 0; acts only on span{x, y}.
Matrix special_unitary_mapping(const Vector& x, const Vector& y);

/// Builds (a, U, p) with f(aUp) = p and D(f o (aU))(p) expanding along the
/// adjoint eigenvector p. Requires d >= 2 and non-affine f.
RepellingConstruction construct_repelling(const PolyMap& f, const RepellingOptions& options = {});

}  // namespace holodyn
