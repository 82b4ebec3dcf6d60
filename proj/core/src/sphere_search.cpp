#include "holodyn/sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "holodyn/error.hpp"
#include "holodyn/jet.hpp"
#include "holodyn/linalg.hpp"

namespace holodyn {

namespace {

struct Ascent {
    Vector z;
    double value = 0.0;  // |f(z)|^2
    double tangent = 0.0;
};

// Gradient of |f|^2 in the real sense, written as a complex vector: 2 J^H f.
Vector tangent_gradient(const PolyMap& f, const Vector& z, double r, double* value, double* relative) {
    const Vector fz = f(z);
    const Vector G = 2.0 * f.jacobian(z).adjoint() * fz;
    const double radial = std::real(z.dot(G)) / (r * r);
    const Vector Gt = G - radial * z;
    *value = fz.squaredNorm();
    const double gn = G.norm();
    *relative = gn > 0.0 ? Gt.norm() / gn : 0.0;
    return Gt;
}

Vector project(const Vector& z, double r) {
    const double n = z.norm();
    return n > 0.0 ? Vector(z * (r / n)) : z;
}

Ascent ascend(const PolyMap& f, double r, const Vector& start, int max_iterations, double grad_tol) {
    Ascent a;
    a.z = project(start, r);
    double rel = 0.0;
    Vector Gt = tangent_gradient(f, a.z, r, &a.value, &rel);
    double step = 0.1 * r / std::max(Gt.norm(), 1e-300);
    bool polishing = false;

    for (int it = 0; it < max_iterations && rel > grad_tol && std::isfinite(a.value); ++it) {
        bool moved = false;
        double trial = step;
        for (int k = 0; k < 60; ++k, trial *= 0.5) {
            const Vector cand = project(a.z + trial * Gt, r);
            double v = 0.0, cand_rel = 0.0;
            const Vector cand_Gt = tangent_gradient(f, cand, r, &v, &cand_rel);
            // Near the top |f|^2 stops resolving the gain, so the tangent
            // gradient becomes the merit function.
            const bool better = polishing ? (cand_rel < rel && v >= a.value * (1.0 - 1e-14)) : v > a.value;
            if (better && std::isfinite(v)) {
                a.z = cand;
                a.value = v;
                rel = cand_rel;
                Gt = cand_Gt;
                step = 2.0 * trial;
                moved = true;
                break;
            }
        }
        if (!moved) {
            if (polishing) break;
            polishing = true;
        }
    }
    a.tangent = rel;
    return a;
}

}  // namespace

SphereMax sphere_max(const PolyMap& f, double r, const SphereBudget& budget, const Vector* warm_start) {
    if (!(r > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    const int d = f.dim();

    std::vector<Vector> starts;
    if (warm_start != nullptr && warm_start->size() == d && warm_start->norm() > 0.0) starts.push_back(*warm_start);
    std::mt19937_64 rng(budget.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < budget.starts; ++k) {
        Vector z(d);
        for (int i = 0; i < d; ++i) z[i] = Complex(gauss(rng), gauss(rng));
        starts.push_back(z);
    }
    if (starts.empty()) throw std::invalid_argument("sphere_max needs at least one start");

    const int coarse_iterations = std::max(1, budget.max_iterations / 20);
    std::vector<Ascent> results(starts.size());
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) results[k] = ascend(f, r, starts[k], coarse_iterations, 1e-6);
    };
    const int threads = std::max(1, std::min<int>(budget.threads, static_cast<int>(starts.size())));
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

    std::size_t best = 0;
    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].value > results[best].value) best = k;
    }
    const Ascent polished = ascend(f, r, results[best].z, budget.max_iterations, budget.grad_tol);
    const Ascent& top = polished.value >= results[best].value ? polished : results[best];

    SphereMax out;
    out.value = std::sqrt(top.value);
    out.argmax = top.z;
    out.tangent_gradient = top.tangent;
    return out;
}

SphereMaxProfile hadamard_profile(const PolyMap& f, double s_lo, double s_hi, int steps, const SphereBudget& budget,
                                  double tol) {
    if (!(s_hi > s_lo) || steps < 3) throw std::invalid_argument("s_range must be nondegenerate with >= 3 steps");
    const double h = (s_hi - s_lo) / (steps - 1);

    SphereMaxProfile prof;
    Vector warm;
    for (int i = 0; i < steps; ++i) {
        HadamardSample smp;
        smp.s = s_lo + i * h;
        smp.r = std::exp(smp.s);
        Vector scaled;
        if (warm.size() > 0) scaled = warm * (smp.r / warm.norm());
        const auto m = sphere_max(f, smp.r, budget, warm.size() > 0 ? &scaled : nullptr);
        smp.M = m.value;
        smp.q = m.argmax;
        smp.H = smp.M > 0.0 ? std::log(smp.M / smp.r) : -std::numeric_limits<double>::infinity();
        warm = m.argmax;
        prof.samples.push_back(std::move(smp));
    }

    auto& S = prof.samples;
    prof.min_second_difference = std::numeric_limits<double>::infinity();
    for (int i = 0; i < steps; ++i) {
        if (i > 0) S[i].left = (S[i].H - S[i - 1].H) / h;
        if (i + 1 < steps) S[i].right = (S[i + 1].H - S[i].H) / h;
        if (i == 0) {
            S[i].dH = S[i].right;
        } else if (i + 1 == steps) {
            S[i].dH = S[i].left;
        } else {
            S[i].dH = (S[i + 1].H - S[i - 1].H) / (2.0 * h);
            prof.min_second_difference =
                std::min(prof.min_second_difference, (S[i + 1].H - 2.0 * S[i].H + S[i - 1].H) / (h * h));
        }
    }

    for (int i = 1; i + 1 < steps; ++i) {
        const bool kink = std::abs(S[i].left - S[i].right) > 1e-2;
        if (S[i].H > 10.0 * tol && S[i].dH > 10.0 * tol && !kink) {
            prof.chosen = i;
            break;
        }
    }
    if (prof.chosen < 0)
        throw RecoverableSearchError("no grid point with H > 0 and H' > 0 in the given range; extend s_range");
    return prof;
}

Matrix special_unitary_mapping(const Vector& x, const Vector& y) {
    const int d = static_cast<int>(x.size());
    if (d < 2 || y.size() != d) throw std::invalid_argument("special_unitary_mapping needs d >= 2");
    const double rho = x.norm();
    if (!(rho > 0.0) || std::abs(y.norm() - rho) > 1e-9 * rho)
        throw std::invalid_argument("special_unitary_mapping needs |x| = |y| > 0");

    const Vector e1 = x / rho;
    const Vector yn = y / y.norm();
    // Second direction: the part of y orthogonal to x, or any direction
    // orthogonal to x when y is (complex-)parallel to it.
    Vector e2 = yn - e1.dot(yn) * e1;
    if (e2.norm() <= 1e-8) {
        int k = 0;
        for (int i = 1; i < d; ++i) {
            if (std::abs(e1[i]) < std::abs(e1[k])) k = i;
        }
        e2 = Vector::Unit(d, k);
    }
    for (int pass = 0; pass < 2; ++pass) e2 -= e1.dot(e2) * e1;
    e2.normalize();

    // Renormalise so the in-plane block is exactly special unitary.
    Complex a = e1.dot(yn);
    Complex b = e2.dot(yn);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;

    Matrix E(d, 2);
    E.col(0) = e1;
    E.col(1) = e2;
    Matrix R(2, 2);
    R << a, -std::conj(b), b, std::conj(a);
    return Matrix::Identity(d, d) - E * E.adjoint() + E * R * E.adjoint();
}

RepellingConstruction construct_repelling(const PolyMap& f, const RepellingOptions& options) {
    if (f.dim() < 2) throw PreconditionError("construct_repelling requires d >= 2");
    if (f.is_affine())
        throw PreconditionError("construct_repelling requires a non-affine map (some component of degree >= 2)");

    RepellingConstruction c;
    c.profile = hadamard_profile(f, options.s_lo, options.s_hi, options.steps, options.budget);
    const HadamardSample& smp = c.profile.samples[static_cast<std::size_t>(c.profile.chosen)];
    c.s = smp.s;
    c.r = smp.r;
    c.M = smp.M;
    c.q = smp.q;

    const double h = 1e-4 * c.r;
    const Vector up = c.q * ((c.r + h) / c.r);
    const Vector down = c.q * ((c.r - h) / c.r);
    const double m_plus = sphere_max(f, c.r + h, options.budget, &up).value;
    const double m_minus = sphere_max(f, c.r - h, options.budget, &down).value;
    c.M_prime = (m_plus - m_minus) / (2.0 * h);
    c.eta = c.r * c.M_prime / c.M;

    c.p = f(c.q);
    c.a = c.r / c.M;
    c.U = special_unitary_mapping(c.a * c.p, c.q);
    const int d = f.dim();
    c.unitarity_error = (c.U.adjoint() * c.U - Matrix::Identity(d, d)).norm();
    c.det_error = std::abs(c.U.determinant() - 1.0);

    const Matrix aU = c.a * c.U;
    const Vector image = f(aU * c.p);
    c.residual_fix = (image - c.p).norm() / (1.0 + c.p.norm());

    // A = D(f o (aU))(p) through the jet chain rule.
    const JetMap inner = JetMap::affine(aU, Vector::Zero(d), 1, c.p);
    const JetMap outer = f.to_jet_map(aU * c.p, 1);
    c.A = jet_map_compose(outer, inner).linear_part();
    c.residual_eigvec = (c.A.adjoint() * c.p - c.eta * c.p).norm() / c.p.norm();

    const Matrix B = f.jacobian(c.q);
    c.lambda = std::real(c.q.dot(B.adjoint() * c.p)) / (c.r * c.r);
    const double predicted = c.M * c.M_prime / c.r;
    c.lambda_identity_error = std::abs(c.lambda - predicted) / std::max(std::abs(c.lambda), 1e-300);

    c.eigenvalues = eigenvalues(c.A);
    c.realized_eigenvalue = *std::min_element(c.eigenvalues.begin(), c.eigenvalues.end(), [&](Complex x, Complex y) {
        return std::abs(x - c.eta) < std::abs(y - c.eta);
    });

    std::vector<std::string> failures;
    if (c.residual_fix > options.tol_fix) failures.push_back("fixed-point residual " + std::to_string(c.residual_fix));
    if (c.residual_eigvec > options.tol_vec)
        failures.push_back("adjoint eigenvector residual " + std::to_string(c.residual_eigvec));
    if (!(c.eta > 1.0 + 1e-3)) failures.push_back("eta " + std::to_string(c.eta) + " is not > 1");
    if (std::abs(c.realized_eigenvalue - c.eta) > options.tol_eta || std::abs(c.realized_eigenvalue) <= 1.0)
        failures.push_back("no eigenvalue of A within tolerance of eta");
    if (c.lambda_identity_error > options.tol_lambda)
        failures.push_back("lambda = M M'/r identity off by " + std::to_string(c.lambda_identity_error));
    if (c.unitarity_error > 1e-9 || c.det_error > 1e-9) failures.push_back("U is not special unitary");
    if (!failures.empty()) {
        std::string msg = "repelling construction failed verification:";
        for (const auto& s : failures) msg += " " + s + ";";
        msg += " try a finer M' step or more starts";
        throw SelfCheckError(msg);
    }
    return c;
}

}  // namespace holodyn
