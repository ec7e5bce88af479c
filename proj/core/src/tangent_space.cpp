#include "cuspedge/tangent_space.hpp"

namespace cuspedge {

const char* group_name(GroupTag g) {
    switch (g) {
        case GroupTag::R1X: return "R1X";
        case GroupTag::RX: return "RX";
        case GroupTag::XA1: return "XA1";
        case GroupTag::XA: return "XA";
        case GroupTag::XK: return "XK";
    }
    return "?";
}

namespace {

JetMap monomial_multiple(const JetMap& base, const Monomial& m, int out_degree) {
    std::vector<Jet> comps;
    comps.reserve(static_cast<size_t>(base.size()));
    const Jet factor = Jet::monomial(m, 1, out_degree);
    for (const auto& c : base.components()) comps.push_back(mul_trunc(c, factor, out_degree));
    return JetMap(std::move(comps));
}

bool jetmap_is_zero(const JetMap& g) {
    for (const auto& c : g.components())
        if (!c.is_zero()) return false;
    return true;
}

// Unit vector section m * e_comp as a jet tuple.
JetMap unit_section(const Jet& coeff, int comp, int p, int out_degree) {
    std::vector<Jet> comps(static_cast<size_t>(p), Jet::zero(out_degree));
    comps[static_cast<size_t>(comp)] = coeff.truncated(out_degree);
    return JetMap(std::move(comps));
}

} // namespace

std::vector<JetMap> tangent_generators(const JetMap& g, GroupTag group, int out_degree,
                                       bool extended_targets) {
    const int p = g.size();
    std::vector<JetMap> rows;

    // Source part: monomial multiples of xi_i(g). The unipotent groups use
    // Theta_1(X) = M^2 xi1 + M {xi2, xi3}; the full groups use Theta(X).
    const bool unipotent_source = (group == GroupTag::R1X || group == GroupTag::XA1);
    const std::array<int, 3> min_deg = unipotent_source ? std::array<int, 3>{2, 1, 1}
                                                        : std::array<int, 3>{0, 0, 0};
    const auto fields = theta_generators(g.degree());
    for (int i = 0; i < 3; ++i) {
        JetMap img = fields[static_cast<size_t>(i)].apply(g, out_degree);
        if (jetmap_is_zero(img)) continue;
        int ord = out_degree + 1;
        for (const auto& c : img.components()) ord = std::min(ord, c.order());
        for (int d = min_deg[static_cast<size_t>(i)]; d + ord <= out_degree; ++d)
            for (const auto& m : monomials_of_degree(d)) {
                JetMap row = monomial_multiple(img, m, out_degree);
                if (!jetmap_is_zero(row)) rows.push_back(std::move(row));
            }
        // Degree-0 multiplier for a unit image contributes even when
        // ord > out_degree is impossible; covered by the loop (ord >= 0).
    }

    // Target part.
    if (group == GroupTag::XA1 || group == GroupTag::XA || group == GroupTag::XK) {
        if (group == GroupTag::XK) {
            // E3-module generated by the component sections g_i e_j.
            for (int i = 0; i < p; ++i) {
                const Jet& gi = g[i];
                if (gi.is_zero()) continue;
                const int ord = gi.order();
                for (int j = 0; j < p; ++j)
                    for (int d = 0; d + ord <= out_degree; ++d)
                        for (const auto& m : monomials_of_degree(d)) {
                            Jet coeff = mul_trunc(gi, Jet::monomial(m, 1, out_degree), out_degree);
                            if (!coeff.is_zero())
                                rows.push_back(unit_section(coeff, j, p, out_degree));
                        }
            }
        } else {
            // R-span of pulled-back target monomials g^*(m) e_j, deg m >= 1
            // (>= 0 for the extended space). Powers beyond the truncation
            // vanish, so exponents are bounded by the component orders.
            const int lo = extended_targets ? 0 : 1;
            const int ord1 = g[0].is_zero() ? out_degree + 1 : std::max(1, g[0].order());
            const int ord2 = (p > 1 && !g[1].is_zero()) ? std::max(1, g[1].order()) : out_degree + 1;
            const int imax = out_degree / ord1;
            const int jmax = p > 1 ? out_degree / ord2 : 0;
            for (int i = 0; i <= imax; ++i)
                for (int j = 0; j <= jmax; ++j) {
                    if (i + j < lo) continue;
                    if (i * ord1 + j * ord2 > out_degree) continue;
                    Jet pb = Jet::constant(1, out_degree);
                    if (i > 0) pb = mul_trunc(pb, pow_trunc(g[0], i, out_degree), out_degree);
                    if (j > 0) pb = mul_trunc(pb, pow_trunc(g[1], j, out_degree), out_degree);
                    if (pb.is_zero()) continue;
                    for (int comp = 0; comp < p; ++comp)
                        rows.push_back(unit_section(pb, comp, p, out_degree));
                }
        }
    }
    return rows;
}

Subspace window_subspace(const std::vector<JetMap>& rows, int components, int dmin, int dmax) {
    const GradedFrame window(components, dmin, dmax);
    std::vector<RatRow> clean;
    std::vector<JetMap> dirty;
    for (const auto& r : rows) {
        int ord = dmax + 1;
        for (const auto& c : r.components()) ord = std::min(ord, c.order());
        if (ord > dmax) continue; // zero within the window's ambient space
        if (ord >= dmin)
            clean.push_back(window.vector_of(r));
        else
            dirty.push_back(r);
    }
    if (!dirty.empty()) {
        // Combinations of rows with below-window support can still land in
        // the window; RREF over the full ambient frame exposes exactly those
        // (rows whose pivot degree reaches the window).
        const GradedFrame ambient(components, 0, dmax);
        std::vector<RatRow> full;
        full.reserve(dirty.size());
        for (const auto& r : dirty) full.push_back(ambient.vector_of(r));
        std::vector<int> piv = rref(full);
        const int cut = ambient.degree_block_begin(dmin);
        for (size_t i = 0; i < full.size(); ++i) {
            if (piv[i] < cut) continue;
            RatRow v(static_cast<size_t>(window.size()), Rational(0));
            for (int j = piv[i]; j < ambient.size(); ++j) {
                const auto& [c, m] = ambient.col(j);
                const int idx = window.index_of(c, m);
                if (idx >= 0) v[static_cast<size_t>(idx)] = full[i][static_cast<size_t>(j)];
            }
            clean.push_back(std::move(v));
        }
    }
    Subspace s;
    s.frame = window;
    s.basis = std::move(clean);
    s.pivots = rref(s.basis);
    return s;
}

Subspace tangent_space(const JetMap& g, GroupTag group, int dmin, int dmax) {
    if (g.degree() < dmax + 1)
        throw InsufficientTruncationError("tangent_space window reaches degree " +
                                          std::to_string(dmax) + " but germ is truncated at " +
                                          std::to_string(g.degree()));
    return window_subspace(tangent_generators(g, group, dmax), g.size(), dmin, dmax);
}

Subspace full_span(const std::vector<JetMap>& rows, int components, int deg_lo, int dmax) {
    Subspace s;
    s.frame = GradedFrame(components, deg_lo, dmax);
    s.basis.reserve(rows.size());
    for (const auto& r : rows) {
        RatRow v = s.frame.vector_of(r);
        if (!is_zero(v)) s.basis.push_back(std::move(v));
    }
    s.pivots = rref(s.basis);
    return s;
}

} // namespace cuspedge
