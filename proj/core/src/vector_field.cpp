#include "cuspedge/vector_field.hpp"

namespace cuspedge {

Jet VectorField::apply(const Jet& g, int out_degree) const {
    Jet r = mul_trunc(coeff_u, g.derivative(0), out_degree);
    r = r + mul_trunc(coeff_v, g.derivative(1), out_degree);
    r = r + mul_trunc(coeff_w, g.derivative(2), out_degree);
    return r;
}

JetMap VectorField::apply(const JetMap& g, int out_degree) const {
    std::vector<Jet> comps;
    comps.reserve(static_cast<size_t>(g.size()));
    for (const auto& c : g.components()) comps.push_back(apply(c, out_degree));
    return JetMap(std::move(comps));
}

Jet model_equation(int degree) {
    return Jet(degree, {{Monomial{0, 3, 0}, Rational(1)}, {Monomial{0, 0, 2}, Rational(-1)}});
}

std::vector<VectorField> theta_generators(int degree) {
    const Jet z = Jet::zero(degree);
    const Jet v = Jet::variable(1, degree);
    const Jet w = Jet::variable(2, degree);
    VectorField xi1{Jet::constant(1, degree), z, z};
    VectorField xi2{z, v * Rational(2), w * Rational(3)};
    VectorField xi3{z, w * Rational(2), jet_mul(v, v) * Rational(3)};
    return {xi1, xi2, xi3};
}

TangencyResult tangency_check(const VectorField& field) {
    const int d = field.degree();
    const Jet h = model_equation(d);
    const Jet p = field.apply(h, d);
    if (p.is_zero()) return {true, Jet::zero(std::max(0, d - 2))};

    // Solve lambda * (v^3 - w^2) = p degree by degree: the degree-(m+2) part
    // of the product is  lambda_m * (-w^2) + lambda_{m-1} * v^3,  so each
    // homogeneous piece of lambda is an exact division by w^2 or fails.
    const int ld = std::max(0, d - 2);
    const Monomial w2{0, 0, 2};
    const Monomial v3{0, 3, 0};
    Jet lambda(ld);
    for (int m = 0; m <= ld; ++m) {
        Jet rhs = p.graded_part(m + 2);
        if (m >= 1) {
            for (const auto& [mono, c] : lambda.graded_part(m - 1).terms())
                rhs.add_term(mono * v3, -c);
        }
        for (const auto& [mono, c] : rhs.terms()) {
            if (!w2.divides(mono)) return {false, std::nullopt};
            lambda.add_term(mono / w2, -c);
        }
    }
    // Multiply back: the full identity must hold up to the truncation.
    if (mul_trunc(lambda, h, d) != p) return {false, std::nullopt};
    return {true, lambda};
}

} // namespace cuspedge
