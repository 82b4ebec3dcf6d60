#include "holodyn/weight.hpp"

#include "holodyn/error.hpp"

namespace holodyn {

Weight Weight::one(int dim) {
    Weight w = polynomial(Polynomial::constant(dim, 1.0));
    w.label_ = "1";
    return w;
}

Weight Weight::polynomial(Polynomial p) {
    Weight w(Kind::Polynomial, p.dim());
    w.poly_ = std::make_shared<const Polynomial>(std::move(p));
    w.label_ = "polynomial";
    return w;
}

Weight Weight::exp_polynomial(Polynomial exponent) {
    Weight w(Kind::ExpPolynomial, exponent.dim());
    w.poly_ = std::make_shared<const Polynomial>(std::move(exponent));
    w.label_ = "exp(polynomial)";
    return w;
}

Weight Weight::evaluator(int dim, std::function<Complex(const Vector&)> fn, std::string label) {
    Weight w(Kind::Evaluator, dim);
    w.fn_ = std::move(fn);
    w.label_ = std::move(label);
    return w;
}

Complex Weight::operator()(const Vector& z) const {
    switch (kind_) {
        case Kind::Polynomial: return (*poly_)(z);
        case Kind::ExpPolynomial: return std::exp((*poly_)(z));
        case Kind::Evaluator: return fn_(z);
    }
    return {};
}

Jet Weight::jet_at(const Vector& base, int cap) const {
    switch (kind_) {
        case Kind::Polynomial: return poly_->to_jet(base, cap);
        case Kind::ExpPolynomial: return jet_exp(poly_->to_jet(base, cap));
        case Kind::Evaluator: break;
    }
    throw PreconditionError("weight '" + label_ + "' is a point evaluator and has no jets");
}

const Polynomial& Weight::polynomial() const {
    if (!poly_) throw PreconditionError("weight '" + label_ + "' has no polynomial form");
    return *poly_;
}

bool Weight::is_constant(double tol) const {
    if (kind_ == Kind::Evaluator) return false;
    return poly_->max_nonconstant_coeff() <= tol;
}

bool Weight::is_nonvanishing() const {
    if (kind_ == Kind::ExpPolynomial) return true;
    if (kind_ == Kind::Polynomial) return is_constant(0.0) && !poly_->is_zero();
    return false;
}

Weight cocycle_weight(const Weight& u, const PolyMap& f, int r, std::size_t max_terms) {
    if (r < 1) throw std::invalid_argument("cocycle length must be >= 1");
    if (u.kind() == Weight::Kind::Evaluator)
        throw PreconditionError("cocycle of an evaluator weight has no closed form");
    const bool exp_kind = u.kind() == Weight::Kind::ExpPolynomial;

    Polynomial acc = u.polynomial();
    PolyMap iterate = f;
    for (int j = 1; j < r; ++j) {
        Polynomial shifted = u.polynomial().compose(iterate.components(), max_terms);
        acc = exp_kind ? acc + shifted : acc * shifted;
        if (acc.term_count() > max_terms) throw TermOverflowError("cocycle weight exceeds term cap");
        if (j + 1 < r) iterate = f.compose(iterate, max_terms);
    }
    return exp_kind ? Weight::exp_polynomial(std::move(acc)) : Weight::polynomial(std::move(acc));
}

}  // namespace holodyn
