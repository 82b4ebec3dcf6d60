#include "holodyn/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holodyn/error.hpp"
#include "holodyn/linalg.hpp"
#include "holodyn/roots.hpp"

namespace holodyn {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Unbounded: return "Unbounded";
        case Verdict::NonCompact: return "NonCompact";
        case Verdict::NotCyclic: return "NotCyclic";
        case Verdict::NotSupercyclic: return "NotSupercyclic";
        case Verdict::NotHypercyclic: return "NotHypercyclic";
        case Verdict::NoObstruction: return "NoObstruction";
        case Verdict::Inapplicable: return "Inapplicable";
    }
    return "Inapplicable";
}

namespace assumption {

std::string graded_image_condition() {
    return "graded image condition for (V, f^r, u_r, p): Im gr_p^n(u_r (f^r)^*) is contained in "
           "V_{p,n}/V_{p,n+1} for infinitely many n >= 1";
}
std::string quasi_banach_space() {
    return "V is a quasi-Banach space continuously included in O(C^d)";
}
std::string topological_space() {
    return "V is a complex topological vector space continuously included in O(C^d)";
}
std::string dim_at_least(int k) { return "dim V >= " + std::to_string(k); }
std::string evaluations_independent() {
    return "point evaluations {delta_p|_V : p in C^d} are linearly independent in V'";
}
std::string infinite_dimensional() { return "V is infinite-dimensional"; }

}  // namespace assumption

namespace {

void verify_orbit(const PolyMap& f, const PeriodicOrbit& orbit, const Tolerances& tol) {
    if (orbit.points.empty()) throw NotPeriodicError("unverified orbit: no points", 0.0);
    const double residual = orbit_residual(f, orbit.points);
    if (!(residual <= tol.orbit))
        throw NotPeriodicError("unverified orbit: relative residual " + std::to_string(residual), residual);
}

// Recomputes the orbit data from f and u so a certificate never trusts
// caller-supplied multipliers.
PeriodicOrbit refreshed(const PolyMap& f, const Weight& u, const PeriodicOrbit& orbit, const Tolerances& tol) {
    verify_orbit(f, orbit, tol);
    PeriodicOrbit out = orbit;
    out.period = static_cast<int>(orbit.points.size());
    out.u_r = weight_cocycle(u, orbit.points);
    out.multipliers = eigenvalues(orbit_jacobian(f, orbit.points.front(), out.period));
    out.stability = classify(out.multipliers, tol.classify);
    out.residual = orbit_residual(f, orbit.points);
    return out;
}

ObstructionCertificate certify_local(const PolyMap& f, const Weight& u, const PeriodicOrbit& input,
                                     const Tolerances& tol, bool compact) {
    ObstructionCertificate cert;
    cert.tolerances = tol;
    cert.assumptions = {assumption::quasi_banach_space(), assumption::graded_image_condition()};

    const PeriodicOrbit orbit = refreshed(f, u, input, tol);
    cert.witness.u_r = orbit.u_r;

    if (std::abs(orbit.u_r) <= tol.vanish) {
        cert.verdict = Verdict::Inapplicable;
        cert.notes.push_back(
            f.dim() == 1 ? "u_r(p) = 0: the eigenvalue bound gives nothing here; use the vanishing-weight "
                           "growth diagnostic at this point instead"
                         : "u_r(p) = 0: no local obstruction is available at this orbit");
        cert.witness.orbit = orbit;
        return cert;
    }

    const auto worst = std::max_element(orbit.multipliers.begin(), orbit.multipliers.end(),
                                        [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    const double modulus = std::abs(*worst);
    const bool hit = compact ? modulus >= 1.0 - tol.classify : modulus > 1.0 + tol.classify;
    cert.witness.orbit = orbit;
    if (hit) {
        cert.verdict = compact ? Verdict::NonCompact : Verdict::Unbounded;
        cert.witness.alpha = *worst;
        cert.notes.push_back(std::string("multiplier of modulus ") + (compact ? ">= 1" : "> 1") +
                             " with u_r(p) != 0: |u_r(p)| |alpha|^n lower-bounds the norm on V_{p,n}");
    } else {
        cert.verdict = Verdict::NoObstruction;
        cert.notes.push_back("this certificate only states necessary conditions; NoObstruction is not a "
                             "proof of boundedness or compactness");
    }
    return cert;
}

bool contains_point(const std::vector<PeriodicOrbit>& orbits, const Vector& p, double radius) {
    for (const auto& o : orbits) {
        for (const auto& q : o.points) {
            if ((q - p).norm() <= radius * rel_scale(q.norm())) return true;
        }
    }
    return false;
}

Complex u_r_at(const Weight& u, const PolyMap& f, const Vector& p, int r) {
    Complex prod = 1.0;
    Vector z = p;
    for (int j = 0; j < r; ++j) {
        prod *= u(z);
        z = f(z);
    }
    return prod;
}

// Distinct solutions of W(z) = lambda for a one-variable polynomial W.
std::vector<Complex> level_solutions(const Polynomial& w, Complex lambda, double cluster) {
    auto coeffs = w.univariate_coefficients();
    coeffs[0] -= lambda;
    std::vector<Complex> distinct;
    for (const Complex z : companion_roots(coeffs)) {
        const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](Complex q) {
            return std::abs(q - z) <= cluster * (1.0 + std::abs(q));
        });
        if (!seen) distinct.push_back(z);
    }
    return distinct;
}

ObstructionCertificate cyclic_all_points(const PolyMap& f, const Weight& u, int r, const std::vector<Complex>& levels,
                                         const Tolerances& tol) {
    ObstructionCertificate cert;
    cert.tolerances = tol;
    cert.assumptions = {assumption::topological_space(), assumption::evaluations_independent()};
    cert.witness.period_bound = r;
    cert.notes.push_back("f^r is the identity: every point of C is in P_r(f)");

    if (u.kind() == Weight::Kind::Evaluator) {
        cert.verdict = Verdict::Inapplicable;
        cert.notes.push_back("level sets of u_r cannot be analysed for an evaluator weight");
        return cert;
    }
    const Weight ur = cocycle_weight(u, f, r);
    const auto level_ok = [&](Complex target, Complex lambda) {
        return std::abs(target - lambda) <= tol.level * (1.0 + std::abs(lambda));
    };

    if (ur.is_constant()) {
        const Complex value = ur(Vector::Zero(1));
        const bool requested = levels.empty() || std::any_of(levels.begin(), levels.end(), [&](Complex l) {
                                   return level_ok(value, l);
                               });
        cert.witness.lambda = value;
        if (requested) {
            cert.verdict = Verdict::NotCyclic;
            cert.witness.count_infinite = true;
            cert.notes.push_back("u_r is constant, so its level set is all of C");
        } else {
            cert.verdict = Verdict::NoObstruction;
            cert.witness.count = 0;
        }
        return cert;
    }

    if (ur.kind() == Weight::Kind::ExpPolynomial) {
        // exp(Q) = lambda has infinitely many solutions for nonconstant Q and lambda != 0.
        Complex lambda = 1.0;
        if (!levels.empty()) {
            auto it = std::find_if(levels.begin(), levels.end(), [](Complex l) { return l != Complex{}; });
            if (it == levels.end()) {
                cert.verdict = Verdict::NoObstruction;
                cert.witness.lambda = Complex{};
                cert.witness.count = 0;
                return cert;
            }
            lambda = *it;
        }
        cert.verdict = Verdict::NotCyclic;
        cert.witness.lambda = lambda;
        cert.witness.count_infinite = true;
        cert.notes.push_back("u_r = exp(Q) with Q nonconstant takes every nonzero value infinitely often");
        return cert;
    }

    std::vector<Complex> candidates = levels;
    if (candidates.empty()) {
        const Complex base = ur(Vector::Zero(1));
        candidates = {base + 1.0, Complex(1.0, 0.0), Complex(2.0, 1.0)};
    }
    std::size_t best = 0;
    std::vector<Complex> best_points;
    Complex best_lambda = candidates.front();
    for (const Complex lambda : candidates) {
        auto sols = level_solutions(ur.polynomial(), lambda, tol.cluster);
        if (sols.size() > best || best_points.empty()) {
            best = sols.size();
            best_points = std::move(sols);
            best_lambda = lambda;
        }
    }
    cert.witness.lambda = best_lambda;
    cert.witness.count = static_cast<long long>(best);
    for (const Complex z : best_points) {
        Vector v(1);
        v[0] = z;
        cert.witness.level_points.push_back(v);
    }
    cert.verdict = static_cast<int>(best) > r ? Verdict::NotCyclic : Verdict::NoObstruction;
    return cert;
}

}  // namespace

ObstructionCertificate certify_bounded(const PolyMap& f, const Weight& u, const PeriodicOrbit& orbit,
                                       const Tolerances& tol) {
    return certify_local(f, u, orbit, tol, /*compact=*/false);
}

ObstructionCertificate certify_compact(const PolyMap& f, const Weight& u, const PeriodicOrbit& orbit,
                                       const Tolerances& tol) {
    return certify_local(f, u, orbit, tol, /*compact=*/true);
}

OrbitSearch find_periodic_orbits(const PolyMap& f, const Weight& u, int r_max, const SearchConfig& config,
                                 const Tolerances& tol) {
    if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    OrbitSearch out;
    if (f.dim() == 1) {
        out.complete = true;
        for (int r = 1; r <= r_max; ++r) {
            const auto set = periodic_points_1d(f, r, tol);
            if (set.all_points) {
                out.all_points = true;
                out.orbits.push_back(make_orbit(f, Vector::Zero(1), r, u, tol));
                break;
            }
            for (const auto& p : set.points) {
                if (contains_point(out.orbits, p, tol.cluster)) continue;
                out.orbits.push_back(make_orbit(f, p, r, u, tol));
            }
        }
        return out;
    }
    if (f.dim() != 2) throw PreconditionError("periodic orbit search supports d = 1 and d = 2");
    for (int r = 1; r <= r_max; ++r) {
        SearchConfig cfg = config;
        cfg.seed = config.seed + static_cast<std::uint64_t>(r - 1);
        const auto set = periodic_points_2d(f, r, cfg, tol);
        for (const auto& p : set.points) {
            if (contains_point(out.orbits, p, tol.cluster)) continue;
            out.orbits.push_back(make_orbit(f, p, r, u, tol));
        }
    }
    return out;
}

ObstructionCertificate certify_hypercyclic(const PolyMap& f, std::span<const PeriodicOrbit> found,
                                           bool search_complete, const Tolerances& tol) {
    ObstructionCertificate cert;
    cert.tolerances = tol;
    cert.search_complete = search_complete;
    cert.assumptions = {assumption::topological_space()};
    if (!found.empty()) {
        const PeriodicOrbit& orbit = found.front();
        verify_orbit(f, orbit, tol);
        cert.verdict = Verdict::NotHypercyclic;
        cert.assumptions.push_back(assumption::dim_at_least(1));
        cert.implied.push_back({Verdict::NotSupercyclic, assumption::dim_at_least(2)});
        cert.witness.orbit = orbit;
        cert.notes.push_back("f has a periodic point; a hypercyclic (resp. supercyclic) operator would induce one "
                             "on a nonzero finite-dimensional quotient, which is impossible");
        return cert;
    }
    cert.verdict = Verdict::NoObstruction;
    if (search_complete && f.dim() == 1) {
        cert.notes.push_back("f has no periodic points; for a one-variable polynomial this is a translation "
                             "z -> z + b, whose composition operator is hypercyclic on O(C) for b != 0 "
                             "(Birkhoff)");
    } else {
        cert.notes.push_back("no periodic orbit was found; absence of found orbits is not proof of absence "
                             "(search incomplete)");
    }
    return cert;
}

ObstructionCertificate certify_cyclic_points(std::span<const Vector> points, std::span<const Complex> u_r_values,
                                             int r, bool list_complete, const std::vector<Complex>& levels,
                                             const Tolerances& tol) {
    if (points.size() != u_r_values.size()) throw std::invalid_argument("one u_r value per point is required");
    ObstructionCertificate cert;
    cert.tolerances = tol;
    cert.search_complete = list_complete;
    cert.assumptions = {assumption::topological_space(), assumption::evaluations_independent()};
    cert.witness.period_bound = r;

    const auto near = [&](Complex v, Complex lambda) {
        return std::abs(v - lambda) <= tol.level * (1.0 + std::abs(lambda));
    };
    struct Group {
        Complex lambda;
        std::vector<std::size_t> members;
    };
    std::vector<Group> groups;
    if (!levels.empty()) {
        for (const Complex lambda : levels) {
            Group g{lambda, {}};
            for (std::size_t i = 0; i < u_r_values.size(); ++i) {
                if (near(u_r_values[i], lambda)) g.members.push_back(i);
            }
            groups.push_back(std::move(g));
        }
    } else {
        for (std::size_t i = 0; i < u_r_values.size(); ++i) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const Group& g) { return near(u_r_values[i], g.lambda); });
            if (it == groups.end()) {
                groups.push_back({u_r_values[i], {i}});
            } else {
                it->members.push_back(i);
            }
        }
    }

    if (groups.empty()) {
        cert.verdict = Verdict::NoObstruction;
        cert.witness.count = 0;
        cert.notes.push_back("P_r(f) is empty");
        return cert;
    }
    const auto best = std::max_element(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        return a.members.size() < b.members.size();
    });
    cert.witness.lambda = best->lambda;
    cert.witness.count = static_cast<long long>(best->members.size());
    for (std::size_t i : best->members) cert.witness.level_points.push_back(points[i]);

    if (static_cast<int>(best->members.size()) > r) {
        cert.verdict = Verdict::NotCyclic;
        cert.notes.push_back("more than r periodic points share the same value of u_r");
    } else {
        cert.verdict = Verdict::NoObstruction;
        if (!list_complete) cert.notes.push_back("point list may be incomplete");
    }
    return cert;
}

ObstructionCertificate certify_cyclic(const PolyMap& f, const Weight& u, int r, const std::vector<Complex>& levels,
                                      const Tolerances& tol) {
    if (f.dim() != 1) throw PreconditionError("certify_cyclic enumerates P_r(f) only for d = 1; supply points");
    const auto set = periodic_points_1d(f, r, tol);
    if (set.all_points) return cyclic_all_points(f, u, r, levels, tol);

    std::vector<Complex> values;
    for (const auto& p : set.points) values.push_back(u_r_at(u, f, p, r));
    auto cert = certify_cyclic_points(set.points, values, r, true, levels, tol);

    // Multiplicities are reported, not interpreted: P_r counts distinct points.
    for (const auto& q : cert.witness.level_points) {
        for (std::size_t i = 0; i < set.points.size(); ++i) {
            if ((set.points[i] - q).norm() == 0.0) cert.witness.level_multiplicities.push_back(set.multiplicity[i]);
        }
    }
    if (std::any_of(set.multiplicity.begin(), set.multiplicity.end(), [](int m) { return m > 1; }))
        cert.notes.push_back("some points of P_r(f) are multiple roots of f^r(z) - z; counted once");
    return cert;
}

AffineVerdict affine_verdict_1d(const PolyMap& f, int r_max, const Tolerances& tol) {
    if (f.dim() != 1) throw PreconditionError("affine_verdict_1d needs a one-variable map");
    static const std::string kNoBounded =
        "no nonzero-weight bounded weighted composition operator exists on any infinite-dimensional "
        "quasi-Banach V continuously included in O(C)";
    AffineVerdict out;
    const Weight one = Weight::one(1);

    if (f.degree() >= 2) {
        out.affine = false;
        out.message = kNoBounded;
        for (int r = 1; r <= r_max && !out.witness; ++r) {
            const auto set = periodic_points_1d(f, r, tol);
            for (const auto& p : set.points) {
                const auto orbit = make_orbit(f, p, r, one, tol);
                if (orbit.stability != Stability::Repelling) continue;
                out.witness = orbit;
                out.alpha = orbit.multipliers.front();
                break;
            }
        }
        if (!out.witness)
            out.message += " (no repelling orbit found up to period " + std::to_string(r_max) +
                           "; one exists at some period)";
        return out;
    }

    out.affine = true;
    const Complex a = f[0].coeff(MultiIndex{1});
    const Complex b = f[0].coeff(MultiIndex{0});
    if (std::abs(a) > 1.0 + tol.classify) {
        out.message = kNoBounded;
        Vector p(1);
        p[0] = b / (1.0 - a);
        out.witness = make_orbit(f, p, 1, one, tol);
        out.alpha = a;
    } else {
        out.consistent_with_boundedness = true;
        out.message = "consistent with boundedness: f(z) = az + b with |a| <= 1";
    }
    return out;
}

GrowthDiagnostic growth_diagnostic_1d(const PolyMap& f, const Jet& u_at_p, Complex p, int n0, const Tolerances& tol) {
    if (f.dim() != 1 || u_at_p.dim() != 1) throw PreconditionError("growth diagnostic needs d = 1");
    Vector pv(1);
    pv[0] = p;
    const double residual = periodicity_residual(f, pv, 1);
    if (!(residual <= tol.orbit)) throw NotPeriodicError("growth diagnostic needs f(p) = p", residual);
    if (std::abs(u_at_p.base()[0] - p) > tol.base * (1.0 + std::abs(p)))
        throw StructuralError("weight jet is not based at p");

    const auto order = u_at_p.order();
    if (!order) throw Error("order undetermined at cap");

    GrowthDiagnostic out;
    out.m = *order;
    out.n0 = n0;
    out.u_m = u_at_p.coefficients()[static_cast<std::size_t>(*order)];
    out.f_prime = f.jacobian(pv)(0, 0);
    if (out.m == 0) {
        out.quad_coeff = 0.0;
        out.obstruction = false;
        out.note = "u(p) != 0: the eigenvalue bound of certify_bounded applies instead";
        return out;
    }
    out.quad_coeff = 0.5 * out.m * std::log(std::abs(out.f_prime));
    out.obstruction = out.quad_coeff > 0.0;
    out.note = out.obstruction
                   ? "graded transfer grows like |f'(p)|^{m k^2 / 2}, faster than the exponential Cauchy bound"
                   : "|f'(p)| <= 1: no growth obstruction";
    return out;
}

double graded_transfer_log_norm(Complex u_m, Complex f_prime, int m, int n, int k) {
    const double exponent = static_cast<double>(k) * n + 0.5 * m * static_cast<double>(k) * (k - 1);
    return k * std::log(std::abs(u_m)) + exponent * std::log(std::abs(f_prime));
}

DualityResult duality_check(const Matrix& L, const Matrix& B, double tol_rank) {
    if (L.rows() != B.rows()) throw std::invalid_argument("L and B must live in the same target space");
    DualityResult out;

    // Image side: does appending the (normalised) columns of L raise the rank of B?
    const double l_norm = spectral_norm(L);
    out.rank_b = numerical_rank(B, tol_rank);
    if (l_norm == 0.0) {
        out.rank_b_with_l = out.rank_b;
    } else {
        Eigen::BDCSVD<Matrix> svd(B, Eigen::ComputeThinU);
        const Matrix Q = svd.matrixU().leftCols(out.rank_b);
        Matrix stacked(L.rows(), Q.cols() + L.cols());
        stacked << Q, L / l_norm;
        out.rank_b_with_l = numerical_rank(stacked, tol_rank);
    }
    out.image_cond = out.rank_b_with_l == out.rank_b;

    // Kernel side: B^perp under the coefficient pairing <l, a> = sum l_i a_i is
    // the null space of B^T; the dual of L is L^T.
    const Matrix perp = null_space(B.transpose(), tol_rank);
    if (perp.cols() == 0 || l_norm == 0.0) {
        out.kernel_residual = 0.0;
    } else {
        out.kernel_residual = spectral_norm(L.transpose() * perp) / l_norm;
    }
    out.kernel_cond = out.kernel_residual <= std::sqrt(tol_rank);
    return out;
}

}  // namespace holodyn
