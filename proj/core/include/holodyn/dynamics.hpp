#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "holodyn/polynomial.hpp"
#include "holodyn/types.hpp"
#include "holodyn/weight.hpp"

namespace holodyn {

/// f o ... o f (r times), expanded. Throws TermOverflowError past max_terms.
PolyMap iterate(const PolyMap& f, int r, std::size_t max_terms = kDefaultTermCap);

/// f^r(z) by repeated evaluation.
Vector iterate_point(const PolyMap& f, const Vector& z, int r);

/// Df(f^{r-1} p) ... Df(f p) Df(p), the Jacobian of f^r at p by the chain rule.
Matrix orbit_jacobian(const PolyMap& f, const Vector& p, int r);

/// Relative periodicity residual |f^r(p) - p| / (1 + |p|).
double periodicity_residual(const PolyMap& f, const Vector& p, int r);

enum class RootMethod { Companion, DurandKerner };

struct PeriodicPointSet {
    bool all_points = false;  // f^r is the identity, every point is periodic
    bool complete = false;    // the list provably contains all of P_r(f)
    std::vector<Vector> points;
    std::vector<double> residuals;
    // One variable: algebraic multiplicity of each root of f^r(z) - z.
    // Two variables: number of Newton starts that landed on the point.
    std::vector<int> multiplicity;

    // Search metadata for the multistart route.
    std::uint64_t seed = 0;
    int starts = 0;
    int converged = 0;
};

/// All distinct roots of f^r(z) - z for a one-variable polynomial f.
PeriodicPointSet periodic_points_1d(const PolyMap& f, int r, const Tolerances& tol = {},
                                    RootMethod method = RootMethod::Companion);

struct SearchConfig {
    int starts = 2000;
    double radius = 5.0;
    int max_newton = 100;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Multistart Newton on f^r(z) - z in C^2. Completeness is not guaranteed.
PeriodicPointSet periodic_points_2d(const PolyMap& f, int r, const SearchConfig& config,
                                    const Tolerances& tol = {});

/// Eigenvalues of d(f^r)_p. Throws NotPeriodicError if p is not in P_r(f).
std::vector<Complex> multipliers(const PolyMap& f, const Vector& p, int r, const Tolerances& tol = {});

enum class Stability { Attracting, Repelling, Saddle, Indifferent, Superattracting, Inconclusive };

std::string to_string(Stability s);

Stability classify(const std::vector<Complex>& multipliers, double tol_class = Tolerances{}.classify);

/// prod_j u(orbit[j]).
Complex weight_cocycle(const Weight& u, std::span<const Vector> orbit);

/// Smallest divisor r' of r with f^{r'}(p) = p.
int exact_period(const PolyMap& f, const Vector& p, int r, const Tolerances& tol = {});

struct PeriodicOrbit {
    std::vector<Vector> points;  // p, f(p), ..., f^{period-1}(p)
    int period = 0;
    Complex u_r;
    std::vector<Complex> multipliers;
    Stability stability = Stability::Inconclusive;
    double residual = 0.0;  // max_j |f(points[j]) - points[j+1]| / (1 + |points[j+1]|)
};

/// Orbit of a point of P_r(f), trimmed to its exact period.
PeriodicOrbit make_orbit(const PolyMap& f, const Vector& p, int r, const Weight& u, const Tolerances& tol = {});

/// Orbit residual of externally supplied orbit data against f.
double orbit_residual(const PolyMap& f, std::span<const Vector> points);

}  // namespace holodyn
