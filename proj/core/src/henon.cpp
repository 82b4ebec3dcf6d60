#include "holodyn/henon.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "holodyn/error.hpp"
#include "holodyn/linalg.hpp"
#include "holodyn/roots.hpp"

namespace holodyn {

namespace {

std::string span_hypothesis() {
    return "user-declared: span G_2(V) = M_2(C) (not verifiable by this tool)";
}

}  // namespace

GeneralizedHenon::GeneralizedHenon(std::vector<Complex> p, Complex delta, Convention convention)
    : p_(std::move(p)), delta_(convention == Convention::Plus ? -delta : delta) {
    while (!p_.empty() && p_.back() == Complex{}) p_.pop_back();
    for (const Complex c : p_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("Henon polynomial has a non-finite coefficient");
    }
    if (p_.size() < 3) throw std::invalid_argument("Henon polynomial must have degree >= 2");
    if (delta_ == Complex{} || !std::isfinite(std::abs(delta_))) throw std::invalid_argument("Henon delta must be nonzero");
}

Vector GeneralizedHenon::operator()(const Vector& z) const {
    Vector out(2);
    out[0] = z[1];
    out[1] = horner(p_, z[1]) - delta_ * z[0];
    return out;
}

PolyMap GeneralizedHenon::to_polymap() const {
    Polynomial second(2);
    for (std::size_t k = 0; k < p_.size(); ++k) second.add_term(MultiIndex{0, static_cast<int>(k)}, p_[k]);
    second.add_term(MultiIndex{1, 0}, -delta_);
    return PolyMap({Polynomial::variable(2, 1), std::move(second)});
}

std::vector<HenonFixedPoint> fixed_points(const GeneralizedHenon& h, const Tolerances& tol) {
    std::vector<Complex> reduced = h.p();
    reduced[1] -= 1.0 + h.delta();
    const PolyMap f = h.to_polymap();

    std::vector<HenonFixedPoint> out;
    for (Complex t : companion_roots(reduced)) {
        // Newton polish on the reduced equation.
        for (int it = 0; it < 3; ++it) {
            Complex dp;
            const Complex v = horner(reduced, t, &dp);
            if (dp == Complex{}) break;
            t -= v / dp;
        }
        HenonFixedPoint fp;
        fp.point = Vector(2);
        fp.point << t, t;
        Complex dp;
        horner(h.p(), t, &dp);
        // mu^2 - p'(t) mu + delta = 0
        const Complex disc = std::sqrt(dp * dp - 4.0 * h.delta());
        fp.multipliers = {(dp + disc) / 2.0, (dp - disc) / 2.0};
        std::sort(fp.multipliers.begin(), fp.multipliers.end(),
                  [](Complex a, Complex b) { return std::abs(a) > std::abs(b); });
        fp.stability = classify(fp.multipliers, tol.classify);
        fp.residual = periodicity_residual(f, fp.point, 1);
        out.push_back(std::move(fp));
    }
    return out;
}

HenonComposition::HenonComposition(std::vector<GeneralizedHenon> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("Henon composition needs at least one factor");
}

Complex HenonComposition::jacobian_determinant() const {
    Complex det = 1.0;
    for (const auto& h : factors_) det *= h.delta();
    return det;
}

Vector HenonComposition::operator()(const Vector& z) const {
    Vector w = z;
    for (const auto& h : factors_) w = h(w);
    return w;
}

PolyMap HenonComposition::to_polymap(std::size_t max_terms) const {
    PolyMap out = factors_.front().to_polymap();
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        out = factors_[i].to_polymap().compose(out, max_terms);
        if (out.term_count() > max_terms)
            throw TermOverflowError("Henon composition exceeds the term cap; evaluate it pointwise instead");
    }
    return out;
}

ObstructionCertificate saddle_certificate(const HenonComposition& h, const Weight& u,
                                          const SaddleSearchOptions& options, const Tolerances& tol) {
    if (options.r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    const PolyMap f = h.to_polymap();

    SearchConfig cfg = options.search;
    int searched = 0;
    for (int r = 1; r <= options.r_max; ++r, cfg.starts *= 2) {
        cfg.seed = options.search.seed + static_cast<std::uint64_t>(r - 1);
        const auto set = periodic_points_2d(f, r, cfg, tol);
        searched = r;
        // Among the saddles of this period, take the most strongly expanding.
        std::optional<PeriodicOrbit> best;
        double best_modulus = 0.0;
        for (const auto& p : set.points) {
            PeriodicOrbit orbit = make_orbit(f, p, r, u, tol);
            if (orbit.period != r || orbit.stability != Stability::Saddle) continue;
            if (std::abs(orbit.u_r) <= tol.vanish) continue;
            double modulus = 0.0;
            for (const Complex m : orbit.multipliers) modulus = std::max(modulus, std::abs(m));
            if (!best || modulus > best_modulus) {
                best = std::move(orbit);
                best_modulus = modulus;
            }
        }
        if (best) {
            auto cert = certify_bounded(f, u, *best, tol);
            cert.assumptions.push_back(span_hypothesis());
            cert.notes.push_back("saddle orbit of period " + std::to_string(r) + " of a Henon composition");
            cert.search_complete = false;
            return cert;
        }
    }

    ObstructionCertificate cert;
    cert.tolerances = tol;
    cert.verdict = Verdict::NoObstruction;
    cert.search_complete = false;
    cert.assumptions = {assumption::quasi_banach_space(), span_hypothesis()};
    cert.notes.push_back("no saddle orbit with u_r != 0 found for periods 1.." + std::to_string(searched) +
                         "; the search is incomplete, raise r_max");
    return cert;
}

}  // namespace holodyn
