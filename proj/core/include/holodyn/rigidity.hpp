#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holodyn/dynamics.hpp"
#include "holodyn/jet.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/types.hpp"
#include "holodyn/weight.hpp"

namespace holodyn {

enum class Verdict { Unbounded, NonCompact, NotCyclic, NotSupercyclic, NotHypercyclic, NoObstruction, Inapplicable };

std::string to_string(Verdict v);

struct Witness {
    std::optional<PeriodicOrbit> orbit;
    std::optional<Complex> alpha;  // offending multiplier
    std::optional<Complex> u_r;
    std::optional<Complex> lambda;  // level of u_r
    std::optional<long long> count;
    bool count_infinite = false;
    std::optional<int> period_bound;  // r in #(P_r cap u_r^{-1}(lambda)) <= r
    std::vector<Vector> level_points;
    std::vector<int> level_multiplicities;
};

/// A further verdict implied by the same witness under an extra hypothesis.
struct ImpliedVerdict {
    Verdict verdict;
    std::string assumption;
};

/// An impossibility statement about uC_f, valid only under `assumptions`.
struct ObstructionCertificate {
    Verdict verdict = Verdict::NoObstruction;
    Witness witness;
    std::vector<std::string> assumptions;
    std::vector<ImpliedVerdict> implied;
    std::vector<std::string> notes;
    bool search_complete = true;
    Tolerances tolerances;
};

namespace assumption {
std::string graded_image_condition();
std::string quasi_banach_space();
std::string topological_space();
std::string dim_at_least(int k);
std::string evaluations_independent();
std::string infinite_dimensional();
}  // namespace assumption

/// Local boundedness obstruction: a multiplier of modulus > 1 at a periodic
/// orbit with u_r(p) != 0 rules out boundedness.
ObstructionCertificate certify_bounded(const PolyMap& f, const Weight& u, const PeriodicOrbit& orbit,
                                       const Tolerances& tol = {});

/// Same with |alpha| >= 1 ruling out compactness.
ObstructionCertificate certify_compact(const PolyMap& f, const Weight& u, const PeriodicOrbit& orbit,
                                       const Tolerances& tol = {});

/// Any periodic orbit rules out hypercyclicity (dim V >= 1) and
/// supercyclicity (dim V >= 2).
ObstructionCertificate certify_hypercyclic(const PolyMap& f, std::span<const PeriodicOrbit> found,
                                           bool search_complete, const Tolerances& tol = {});

/// Periodic orbits of periods 1..r_max; exhaustive for d = 1, Newton
/// multistart for d = 2. `complete` reports which.
struct OrbitSearch {
    std::vector<PeriodicOrbit> orbits;
    bool complete = false;
    bool all_points = false;
};
OrbitSearch find_periodic_orbits(const PolyMap& f, const Weight& u, int r_max, const SearchConfig& config,
                                 const Tolerances& tol = {});

/// Level-set count of u_r over P_r(f) for a one-variable polynomial f.
/// With no levels given, every value taken by u_r on P_r(f) is a level.
ObstructionCertificate certify_cyclic(const PolyMap& f, const Weight& u, int r,
                                      const std::vector<Complex>& levels = {}, const Tolerances& tol = {});

/// Same count over an externally supplied list of points of P_r(f) with
/// their u_r values.
ObstructionCertificate certify_cyclic_points(std::span<const Vector> points, std::span<const Complex> u_r_values,
                                             int r, bool list_complete, const std::vector<Complex>& levels = {},
                                             const Tolerances& tol = {});

struct AffineVerdict {
    bool affine = false;
    bool consistent_with_boundedness = false;
    std::string message;
    std::optional<PeriodicOrbit> witness;
    std::optional<Complex> alpha;
};

/// One-variable rigidity: a bounded nonzero-weight operator on an
/// infinite-dimensional space forces f(z) = az + b with |a| <= 1.
AffineVerdict affine_verdict_1d(const PolyMap& f, int r_max = 8, const Tolerances& tol = {});

struct GrowthDiagnostic {
    int m = 0;   // order of vanishing of u at p
    int n0 = 0;  // first graded level with nonzero image
    Complex u_m;
    Complex f_prime;
    double quad_coeff = 0.0;  // (m/2) log|f'(p)|
    bool obstruction = false;
    std::string note;
};

/// Vanishing-weight growth test at a fixed point of a one-variable map.
GrowthDiagnostic growth_diagnostic_1d(const PolyMap& f, const Jet& u_at_p, Complex p, int n0 = 0,
                                      const Tolerances& tol = {});

/// log of |u_m|^k |f'(p)|^{kn + m k(k-1)/2}: the size of the k-fold graded
/// transfer from level n to level n + km.
double graded_transfer_log_norm(Complex u_m, Complex f_prime, int m, int n, int k);

struct DualityResult {
    bool image_cond = false;   // column space of L inside span B
    bool kernel_cond = false;  // B^perp inside ker L^T (coefficient pairing)
    int rank_b = 0;
    int rank_b_with_l = 0;
    double kernel_residual = 0.0;
};

/// Image condition vs. its dual kernel formulation for the graded map L
/// (columns indexed by the source basis) and a subspace basis B.
DualityResult duality_check(const Matrix& L, const Matrix& B, double tol_rank = Tolerances{}.rank);

}  // namespace holodyn
