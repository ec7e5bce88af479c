#include "cuspedge/transversal.hpp"

#include <algorithm>

namespace cuspedge {

namespace {

std::string section_name(int comp, const Monomial& m, int p) {
    if (p == 1) return m.str();
    return std::string("e") + std::to_string(comp + 1) + "*" + m.str();
}

JetMap monomial_section(int comp, const Monomial& m, int p, int degree) {
    std::vector<Jet> comps(static_cast<size_t>(p), Jet::zero(degree));
    comps[static_cast<size_t>(comp)] = Jet::monomial(m, 1, degree);
    return JetMap(std::move(comps));
}

JetMap add_scaled(const JetMap& g, const JetMap& dir, const Rational& lambda) {
    std::vector<Jet> comps;
    for (int i = 0; i < g.size(); ++i)
        comps.push_back(g[i] + dir[i].truncated(g.degree()) * lambda);
    return JetMap(std::move(comps));
}

// Membership of every monomial section of degrees [dlo, dhi] in the reduced
// span; returns the names of the missing ones.
std::vector<std::string> missing_sections(const Subspace& span, int p, int dlo, int dhi) {
    std::vector<std::string> missing;
    for (int d = dlo; d <= dhi; ++d)
        for (int comp = 0; comp < p; ++comp)
            for (const auto& m : monomials_of_degree(d)) {
                RatRow v(static_cast<size_t>(span.frame.size()), Rational(0));
                const int idx = span.frame.index_of(comp, m);
                if (idx < 0) throw Error("section outside frame");
                v[static_cast<size_t>(idx)] = 1;
                if (!span.contains(v)) missing.push_back(section_name(comp, m, p));
            }
    return missing;
}

} // namespace

std::vector<Rational> default_probe_samples() {
    return {Rational(0),          Rational(1) / 7,  Rational(-1) / 7, Rational(1) / 3,
            Rational(-1) / 3,     Rational(2) / 5,  Rational(-2) / 5};
}

TransversalResult complete_transversal(const JetMap& g, int degree, GroupTag group) {
    if (group != GroupTag::R1X && group != GroupTag::XA1)
        throw Error("complete transversal uses the unipotent groups (R1X or XA1)");
    if (g.degree() < degree + 1)
        throw InsufficientTruncationError("transversal at degree " + std::to_string(degree) +
                                          " needs the germ truncated at " +
                                          std::to_string(degree + 1) + " or beyond");
    const Subspace in_window =
        window_subspace(tangent_generators(g, group, degree), g.size(), degree, degree);

    TransversalResult out;
    out.degree = degree;
    std::vector<bool> is_pivot(static_cast<size_t>(in_window.frame.size()), false);
    for (int p : in_window.pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int i = 0; i < in_window.frame.size(); ++i) {
        if (is_pivot[static_cast<size_t>(i)]) continue;
        const auto& [comp, m] = in_window.frame.col(i);
        out.generators.push_back(monomial_section(comp, m, g.size(), degree));
    }
    return out;
}

std::optional<int> contact_order_bound(const JetMap& g, int lmax) {
    for (int l = 1; l <= lmax; ++l) {
        const Subspace span = full_span(tangent_generators(g, GroupTag::XK, l), g.size(), 0, l);
        if (missing_sections(span, g.size(), l, l).empty()) return l;
    }
    return std::nullopt;
}

DeterminacyCertificate is_determined(const JetMap& g, int k, GroupTag group) {
    DeterminacyCertificate cert;
    cert.degree = k;

    if (group == GroupTag::R1X || g.size() == 1) {
        if (g.degree() < k + 2)
            throw InsufficientTruncationError("determinacy test at k=" + std::to_string(k) +
                                              " needs truncation >= " + std::to_string(k + 2));
        const Subspace span =
            full_span(tangent_generators(g, GroupTag::R1X, k + 1), g.size(), 0, k + 1);
        cert.residual = missing_sections(span, g.size(), k + 1, k + 1);
        cert.status = cert.residual.empty() ? CertStatus::Holds : CertStatus::Fails;
        return cert;
    }

    // Map case (Theorem-style two-part test).
    const auto l = contact_order_bound(g);
    if (!l) {
        cert.status = CertStatus::Inconclusive;
        cert.residual.push_back("contact-group inclusion M^l.E(3,2) not reached for l <= 6");
        return cert;
    }
    cert.auxiliary_degree = *l;
    if (g.degree() < k + *l + 1)
        throw InsufficientTruncationError("map determinacy test needs truncation >= " +
                                          std::to_string(k + *l + 1));
    const Subspace span =
        full_span(tangent_generators(g, GroupTag::XA1, k + *l), g.size(), 0, k + *l);
    cert.residual = missing_sections(span, g.size(), k + 1, k + *l);
    cert.status = cert.residual.empty() ? CertStatus::Holds : CertStatus::Fails;
    return cert;
}

std::optional<int> determinacy_degree(const JetMap& g, GroupTag group, int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        if (g.degree() < k + 2) break; // cannot certify further at this truncation
        if (g.size() == 2) {
            const auto l = contact_order_bound(g);
            if (!l) return std::nullopt;
            if (g.degree() < k + *l + 1) break;
        }
        if (is_determined(g, k, group).holds()) return k;
    }
    return std::nullopt;
}

CodimensionResult codimension(const JetMap& g) {
    CodimensionResult out;
    const GroupTag unipotent = g.size() == 1 ? GroupTag::R1X : GroupTag::XA1;
    const int kmax = g.degree() - 2;
    const auto k = determinacy_degree(g, unipotent, std::max(1, kmax));
    if (!k) return out;
    out.determinacy_degree = *k;
    const int D = std::min(*k + 1, g.degree() - 1);

    if (g.size() == 1) {
        const Subspace span = full_span(tangent_generators(g, GroupTag::RX, D), 1, 0, D);
        // dim(M3 / (W intersect M3)): constants are excluded from the count.
        std::vector<bool> is_pivot(static_cast<size_t>(span.frame.size()), false);
        for (int p : span.pivots) is_pivot[static_cast<size_t>(p)] = true;
        int dim = 0;
        for (int i = 0; i < span.frame.size(); ++i)
            if (span.frame.degree_of_col(i) >= 1 && !is_pivot[static_cast<size_t>(i)]) ++dim;
        out.kind = CodimensionResult::Kind::Finite;
        out.value = dim;
        return out;
    }

    const auto l = contact_order_bound(g);
    out.auxiliary_degree = l;
    const Subspace span =
        full_span(tangent_generators(g, GroupTag::XA, D, /*extended_targets=*/true), 2, 0, D);
    out.kind = CodimensionResult::Kind::Finite;
    out.value = span.frame.size() - span.dimension();
    return out;
}

VersalityResult versality_check(const Deformation& F) {
    const JetMap& g = F.base;
    const GroupTag unipotent = g.size() == 1 ? GroupTag::R1X : GroupTag::XA1;
    const auto k = determinacy_degree(g, unipotent, std::max(1, g.degree() - 2));
    if (!k) throw Error("versality check needs a finitely determined base germ");
    const int D = std::min(*k + 1, g.degree() - 1);

    std::vector<JetMap> rows;
    if (g.size() == 1) {
        rows = tangent_generators(g, GroupTag::RX, D);
        rows.push_back(JetMap({Jet::constant(1, D)})); // the +c(u) of R+(X)
    } else {
        rows = tangent_generators(g, GroupTag::XA, D, /*extended_targets=*/true);
    }
    for (const auto& dir : F.directions) {
        std::vector<Jet> comps;
        for (int i = 0; i < dir.size(); ++i) comps.push_back(dir[i].truncated(D));
        rows.push_back(JetMap(std::move(comps)));
    }
    const Subspace span = full_span(rows, g.size(), 0, D);
    VersalityResult out;
    out.missing = missing_sections(span, g.size(), 0, D);
    out.versal = out.missing.empty();
    return out;
}

bool triviality_probe(const Deformation& F, int k, const std::vector<Rational>& samples) {
    if (F.directions.size() != 1)
        throw Error("triviality probe expects a one-parameter deformation");
    const std::vector<Rational> ts = samples.empty()
                                         ? std::vector<Rational>{Rational(0), Rational(1) / 7,
                                                                 Rational(-1) / 7, Rational(1) / 3,
                                                                 Rational(-1) / 3}
                                         : samples;
    const JetMap& dir = F.directions.front();
    for (const auto& t : ts) {
        const JetMap gt = add_scaled(F.base, dir, t);
        // Fields vanishing at the origin: M.xi1 + E.{xi2, xi3} applied to gt.
        std::vector<JetMap> rows;
        const auto fields = theta_generators(gt.degree());
        const std::array<int, 3> lo{1, 0, 0};
        for (int i = 0; i < 3; ++i) {
            JetMap img = fields[static_cast<size_t>(i)].apply(gt, k);
            int ord = k + 1;
            for (const auto& c : img.components()) ord = std::min(ord, c.order());
            for (int d = lo[static_cast<size_t>(i)]; d + ord <= k; ++d)
                for (const auto& m : monomials_of_degree(d)) {
                    std::vector<Jet> comps;
                    const Jet factor = Jet::monomial(m, 1, k);
                    for (const auto& c : img.components())
                        comps.push_back(mul_trunc(c, factor, k));
                    rows.push_back(JetMap(std::move(comps)));
                }
        }
        const Subspace span = full_span(rows, gt.size(), 0, k);
        std::vector<Jet> dk;
        for (int i = 0; i < dir.size(); ++i) dk.push_back(dir[i].truncated(k));
        if (!span.contains(JetMap(std::move(dk)))) return false;
    }
    return true;
}

ModulusProbeResult modulus_probe(const JetMap& g, const JetMap& direction, GroupTag group,
                                 std::vector<Rational> samples,
                                 const std::vector<Rational>& excluded) {
    if (samples.empty()) samples = default_probe_samples();
    const GroupTag full = (g.size() == 1) ? GroupTag::RX
                         : (group == GroupTag::XK ? GroupTag::XK : GroupTag::XA);
    int kdir = 0;
    for (const auto& c : direction.components())
        if (!c.is_zero()) kdir = std::max(kdir, c.order());

    ModulusProbeResult out;
    out.membership_everywhere = true;
    for (const auto& lambda : samples) {
        if (std::find(excluded.begin(), excluded.end(), lambda) != excluded.end()) continue;
        out.samples_used.push_back(lambda);
        const JetMap gl = add_scaled(g, direction, lambda);
        const Subspace span =
            full_span(tangent_generators(gl, full, kdir), g.size(), 0, kdir);
        out.tangent_dims.push_back(span.dimension());
        std::vector<Jet> dk;
        for (int i = 0; i < direction.size(); ++i) dk.push_back(direction[i].truncated(kdir));
        if (!span.contains(JetMap(std::move(dk)))) out.membership_everywhere = false;
    }
    out.dimension_constant =
        std::adjacent_find(out.tangent_dims.begin(), out.tangent_dims.end(),
                           std::not_equal_to<>()) == out.tangent_dims.end();
    out.outcome = (out.membership_everywhere && out.dimension_constant && !out.samples_used.empty())
                      ? ProbeOutcome::Removable
                      : ProbeOutcome::Modulus;
    return out;
}

} // namespace cuspedge
