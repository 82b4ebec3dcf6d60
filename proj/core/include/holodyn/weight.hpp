#pragma once

#include <functional>
#include <memory>
#include <string>

#include "holodyn/jet.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/types.hpp"

namespace holodyn {

/// The multiplier u in h -> u * (h o f).
///
/// Polynomial and exp-of-polynomial weights support exact jets; a bare
/// evaluator only supports point values (enough for orbit-level certificates).
class Weight {
public:
    enum class Kind { Polynomial, ExpPolynomial, Evaluator };

    static Weight one(int dim);
    static Weight polynomial(Polynomial p);
    /// u = exp(exponent).
    static Weight exp_polynomial(Polynomial exponent);
    static Weight evaluator(int dim, std::function<Complex(const Vector&)> fn, std::string label);

    Kind kind() const noexcept { return kind_; }
    int dim() const noexcept { return dim_; }
    const std::string& label() const noexcept { return label_; }

    Complex operator()(const Vector& z) const;

    bool has_jets() const noexcept { return kind_ != Kind::Evaluator; }
    Jet jet_at(const Vector& base, int cap) const;

    /// The polynomial itself, or the exponent for exp weights.
    const Polynomial& polynomial() const;

    /// Known to be constant (false for evaluators).
    bool is_constant(double tol = 1e-12) const;
    /// Known to vanish nowhere: exp weights and nonzero constants.
    bool is_nonvanishing() const;

private:
    Weight(Kind kind, int dim) : kind_(kind), dim_(dim) {}

    Kind kind_;
    int dim_;
    std::shared_ptr<const Polynomial> poly_;
    std::function<Complex(const Vector&)> fn_;
    std::string label_;
};

/// u_r = prod_{j<r} u o f^j as a weight of the same kind (for exp weights the
/// exponents are summed). Evaluator weights are rejected.
Weight cocycle_weight(const Weight& u, const PolyMap& f, int r, std::size_t max_terms = kDefaultTermCap);

}  // namespace holodyn
