#include "holodyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "holodyn/error.hpp"
#include "holodyn/linalg.hpp"
#include "holodyn/roots.hpp"

namespace holodyn {

namespace {

bool lex_less(const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

// Newton on F(z) = f^r(z) - z. Returns the final point and its residual.
std::pair<Vector, double> newton_periodic(const PolyMap& f, Vector z, int r, int max_steps, double target) {
    const auto identity = Matrix::Identity(f.dim(), f.dim());
    double residual = periodicity_residual(f, z, r);
    for (int step = 0; step < max_steps && residual > target; ++step) {
        const Vector F = iterate_point(f, z, r) - z;
        const Matrix J = orbit_jacobian(f, z, r) - identity;
        Eigen::FullPivLU<Matrix> lu(J);
        if (!lu.isInvertible()) break;
        const Vector next = z - lu.solve(F);
        if (!next.allFinite() || next.norm() > 1e8) break;
        z = next;
        residual = periodicity_residual(f, z, r);
    }
    return {z, residual};
}

struct Cluster {
    Vector point;
    double residual;
    int count;
};

void add_to_clusters(std::vector<Cluster>& clusters, const Vector& z, double residual, double radius) {
    for (auto& c : clusters) {
        if ((c.point - z).norm() <= radius * rel_scale(c.point.norm())) {
            ++c.count;
            if (residual < c.residual) {
                c.point = z;
                c.residual = residual;
            }
            return;
        }
    }
    clusters.push_back({z, residual, 1});
}

PeriodicPointSet finish(std::vector<Cluster> clusters) {
    std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
        return lex_less(a.point, b.point);
    });
    PeriodicPointSet out;
    for (auto& c : clusters) {
        out.points.push_back(std::move(c.point));
        out.residuals.push_back(c.residual);
        out.multiplicity.push_back(c.count);
    }
    return out;
}

}  // namespace

PolyMap iterate(const PolyMap& f, int r, std::size_t max_terms) {
    if (r < 1) throw std::invalid_argument("iteration count must be >= 1");
    PolyMap out = f;
    for (int k = 1; k < r; ++k) out = f.compose(out, max_terms);
    return out;
}

Vector iterate_point(const PolyMap& f, const Vector& z, int r) {
    Vector w = z;
    for (int k = 0; k < r; ++k) w = f(w);
    return w;
}

Matrix orbit_jacobian(const PolyMap& f, const Vector& p, int r) {
    Matrix J = Matrix::Identity(f.dim(), f.dim());
    Vector z = p;
    for (int k = 0; k < r; ++k) {
        J = f.jacobian(z) * J;
        z = f(z);
    }
    return J;
}

double periodicity_residual(const PolyMap& f, const Vector& p, int r) {
    return (iterate_point(f, p, r) - p).norm() / rel_scale(p.norm());
}

PeriodicPointSet periodic_points_1d(const PolyMap& f, int r, const Tolerances& tol, RootMethod method) {
    if (f.dim() != 1) throw PreconditionError("periodic_points_1d needs a one-variable map");
    if (f.degree() < 1) throw PreconditionError("periodic_points_1d needs deg f >= 1");

    const PolyMap fr = iterate(f, r);
    auto coeffs = fr[0].univariate_coefficients();
    if (coeffs.size() < 2) coeffs.resize(2);
    coeffs[1] -= 1.0;

    double largest = 0.0;
    for (const auto& c : coeffs) largest = std::max(largest, std::abs(c));
    if (largest <= 1e-12) {
        PeriodicPointSet out;
        out.all_points = true;
        out.complete = true;
        return out;
    }

    std::vector<Complex> roots;
    if (method == RootMethod::Companion) {
        roots = companion_roots(coeffs);
    } else {
        roots = durand_kerner_roots(coeffs).roots;
    }

    std::vector<Cluster> clusters;
    for (const Complex& z0 : roots) {
        Vector z(1);
        z[0] = z0;
        auto [polished, residual] = newton_periodic(f, z, r, 8, 1e-15);
        // Keep the raw root when Newton wanders off (e.g. near multiple roots).
        if ((polished - z).norm() > tol.cluster * rel_scale(z.norm())) {
            polished = z;
            residual = periodicity_residual(f, z, r);
        }
        add_to_clusters(clusters, polished, residual, tol.cluster);
    }
    PeriodicPointSet out = finish(std::move(clusters));
    out.complete = true;
    return out;
}

PeriodicPointSet periodic_points_2d(const PolyMap& f, int r, const SearchConfig& config, const Tolerances& tol) {
    if (f.dim() != 2) throw PreconditionError("periodic_points_2d needs a map of C^2");
    if (config.starts < 0) throw std::invalid_argument("number of starts must be non-negative");

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vector> starts(config.starts, Vector(2));
    for (auto& s : starts) {
        for (int i = 0; i < 2; ++i) {
            const double rad = config.radius * std::sqrt(unit(rng));
            s[i] = std::polar(rad, 2.0 * std::numbers::pi * unit(rng));
        }
    }

    std::vector<std::pair<Vector, double>> results(starts.size());
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            results[k] = newton_periodic(f, starts[k], r, config.max_newton, 1e-12);
        }
    };
    const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(starts.size())));
    if (threads == 1) {
        work(0, starts.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (starts.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(starts.size(), b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
    }

    std::vector<Cluster> clusters;
    int converged = 0;
    for (const auto& [z, residual] : results) {
        if (!z.allFinite() || !(residual <= tol.orbit)) continue;
        ++converged;
        add_to_clusters(clusters, z, residual, tol.cluster);
    }
    PeriodicPointSet out = finish(std::move(clusters));
    out.complete = false;
    out.seed = config.seed;
    out.starts = config.starts;
    out.converged = converged;
    return out;
}

std::vector<Complex> multipliers(const PolyMap& f, const Vector& p, int r, const Tolerances& tol) {
    const double residual = periodicity_residual(f, p, r);
    if (residual > tol.orbit)
        throw NotPeriodicError("point is not periodic with the given period (relative residual " +
                                   std::to_string(residual) + ")",
                               residual);
    return eigenvalues(orbit_jacobian(f, p, r));
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::Attracting: return "attracting";
        case Stability::Repelling: return "repelling";
        case Stability::Saddle: return "saddle";
        case Stability::Indifferent: return "indifferent";
        case Stability::Superattracting: return "superattracting";
        case Stability::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Stability classify(const std::vector<Complex>& multipliers, double tol_class) {
    if (multipliers.empty()) return Stability::Inconclusive;
    int small = 0, inside = 0, outside = 0, near_unit = 0;
    for (const auto& m : multipliers) {
        const double a = std::abs(m);
        if (a < tol_class) ++small;
        if (a < 1.0 - tol_class) ++inside;
        else if (a > 1.0 + tol_class) ++outside;
        else ++near_unit;
    }
    const int n = static_cast<int>(multipliers.size());
    if (small == n) return Stability::Superattracting;
    if (inside == n) return Stability::Attracting;
    if (outside == n) return Stability::Repelling;
    if (near_unit == n) return Stability::Indifferent;
    if (near_unit == 0 && inside > 0 && outside > 0) return Stability::Saddle;
    return Stability::Inconclusive;
}

Complex weight_cocycle(const Weight& u, std::span<const Vector> orbit) {
    if (orbit.empty()) throw std::invalid_argument("weight cocycle needs a nonempty orbit");
    Complex prod = 1.0;
    for (const auto& z : orbit) prod *= u(z);
    return prod;
}

int exact_period(const PolyMap& f, const Vector& p, int r, const Tolerances& tol) {
    for (int d = 1; d <= r; ++d) {
        if (r % d == 0 && periodicity_residual(f, p, d) <= tol.orbit) return d;
    }
    throw NotPeriodicError("point is not periodic with the given period", periodicity_residual(f, p, r));
}

double orbit_residual(const PolyMap& f, std::span<const Vector> points) {
    double worst = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        const Vector& next = points[(j + 1) % points.size()];
        worst = std::max(worst, (f(points[j]) - next).norm() / rel_scale(next.norm()));
    }
    return worst;
}

PeriodicOrbit make_orbit(const PolyMap& f, const Vector& p, int r, const Weight& u, const Tolerances& tol) {
    PeriodicOrbit orbit;
    orbit.period = exact_period(f, p, r, tol);
    Vector z = p;
    for (int j = 0; j < orbit.period; ++j) {
        orbit.points.push_back(z);
        z = f(z);
    }
    orbit.u_r = weight_cocycle(u, orbit.points);
    orbit.multipliers = multipliers(f, p, orbit.period, tol);
    orbit.stability = classify(orbit.multipliers, tol.classify);
    orbit.residual = orbit_residual(f, orbit.points);
    return orbit;
}

}  // namespace holodyn
