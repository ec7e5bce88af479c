#pragma once

#include <optional>

#include "cuspedge/jet.hpp"

namespace cuspedge {

/// Vector field c_u d/du + c_v d/dv + c_w d/dw with jet coefficients.
/// Fields used by the engine are tangent to the model edge X = {v^3 = w^2};
/// tangency_check certifies that (field(h) = lambda * h for h = v^3 - w^2).
struct VectorField {
    Jet coeff_u, coeff_v, coeff_w;

    int degree() const { return coeff_u.degree(); }

    /// Directional action on a function jet: c_u g_u + c_v g_v + c_w g_w,
    /// truncated at out_degree. Reliable when g is exact to out_degree + 1.
    Jet apply(const Jet& g, int out_degree) const;
    JetMap apply(const JetMap& g, int out_degree) const;
};

/// Defining equation of the model cuspidal edge, h = v^3 - w^2.
Jet model_equation(int degree);

/// The three generators of the module of fields tangent to X:
/// xi1 = d/du, xi2 = 2v d/dv + 3w d/dw, xi3 = 2w d/dv + 3v^2 d/dw.
std::vector<VectorField> theta_generators(int degree);

struct TangencyResult {
    bool tangent = false;
    std::optional<Jet> lambda; // quotient witness when tangent
};

/// Divisibility test field(h) = lambda * h within the truncation; the
/// witness lambda is returned on success.
TangencyResult tangency_check(const VectorField& field);

} // namespace cuspedge
