#include "cuspedge/jet_io.hpp"

namespace cuspedge {

using nlohmann::json;

namespace {

json terms_to_json(const Jet& j) {
    json terms = json::array();
    for (const auto& [m, c] : j.terms()) {
        terms.push_back({{"m", {m.e[0], m.e[1], m.e[2]}}, {"c", rational_to_string(c)}});
    }
    return terms;
}

Jet terms_from_json(const json& terms, int deg) {
    Jet j(deg);
    if (!terms.is_array()) throw ParseError("jet 'terms' must be an array");
    for (const auto& t : terms) {
        if (!t.contains("m") || !t.contains("c")) throw ParseError("jet term needs 'm' and 'c'");
        const auto& m = t["m"];
        if (!m.is_array() || m.size() != 3) throw ParseError("jet term 'm' must be [i,j,k]");
        Monomial mono{m[0].get<int>(), m[1].get<int>(), m[2].get<int>()};
        if (mono.e[0] < 0 || mono.e[1] < 0 || mono.e[2] < 0)
            throw ParseError("negative exponent in jet term");
        if (mono.degree() > deg)
            throw ParseError("jet term of degree " + std::to_string(mono.degree()) +
                             " above truncation " + std::to_string(deg));
        j.add_term(mono, rational_from_string(t["c"].get<std::string>()));
    }
    return j;
}

} // namespace

json jet_to_json(const Jet& j) {
    return json{{"deg", j.degree()}, {"terms", terms_to_json(j)}};
}

Jet jet_from_json(const json& js) {
    if (!js.contains("deg") || !js.contains("terms")) throw ParseError("jet needs 'deg' and 'terms'");
    return terms_from_json(js["terms"], js["deg"].get<int>());
}

json jetmap_to_json(const JetMap& g) {
    json comps = json::array();
    for (const auto& c : g.components()) comps.push_back(terms_to_json(c));
    return json{{"deg", g.degree()}, {"components", comps}};
}

JetMap jetmap_from_json(const json& js) {
    if (!js.contains("deg") || !js.contains("components"))
        throw ParseError("jet map needs 'deg' and 'components'");
    const int deg = js["deg"].get<int>();
    std::vector<Jet> comps;
    for (const auto& c : js["components"]) comps.push_back(terms_from_json(c, deg));
    return JetMap(std::move(comps));
}

} // namespace cuspedge
