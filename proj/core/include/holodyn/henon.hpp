#pragma once

#include <vector>

#include "holodyn/dynamics.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/rigidity.hpp"
#include "holodyn/types.hpp"
#include "holodyn/weight.hpp"

namespace holodyn {

/// (x, y) -> (y, p(y) - delta x) with deg p >= 2 and delta != 0.
class GeneralizedHenon {
public:
    enum class Convention { Minus, Plus };

    /// `p` holds ascending coefficients. With Convention::Plus the input is
    /// read as (y, p(y) + delta x) and normalised to the minus form.
    GeneralizedHenon(std::vector<Complex> p, Complex delta, Convention convention = Convention::Minus);

    const std::vector<Complex>& p() const noexcept { return p_; }
    Complex delta() const noexcept { return delta_; }
    int degree() const noexcept { return static_cast<int>(p_.size()) - 1; }

    Vector operator()(const Vector& z) const;
    PolyMap to_polymap() const;

private:
    std::vector<Complex> p_;
    Complex delta_;
};

struct HenonFixedPoint {
    Vector point;
    std::vector<Complex> multipliers;
    Stability stability = Stability::Inconclusive;
    double residual = 0.0;
};

/// Fixed points (t, t) with p(t) - (1 + delta) t = 0; multipliers solve
/// mu^2 - p'(t) mu + delta = 0.
std::vector<HenonFixedPoint> fixed_points(const GeneralizedHenon& h, const Tolerances& tol = {});

/// Factors applied in list order: the first factor acts first.
class HenonComposition {
public:
    explicit HenonComposition(std::vector<GeneralizedHenon> factors);

    const std::vector<GeneralizedHenon>& factors() const noexcept { return factors_; }
    Complex jacobian_determinant() const;
    Vector operator()(const Vector& z) const;

    /// Expanded polynomial components. Throws TermOverflowError past max_terms.
    PolyMap to_polymap(std::size_t max_terms = kDefaultTermCap) const;

private:
    std::vector<GeneralizedHenon> factors_;
};

struct SaddleSearchOptions {
    int r_max = 4;
    SearchConfig search;  // starts double with each period
};

/// Searches periods 1..r_max for a saddle orbit with u_r != 0 and turns the
/// first one into an Unbounded certificate; otherwise NoObstruction with the
/// search marked incomplete.
ObstructionCertificate saddle_certificate(const HenonComposition& h, const Weight& u,
                                          const SaddleSearchOptions& options = {}, const Tolerances& tol = {});

}  // namespace holodyn
