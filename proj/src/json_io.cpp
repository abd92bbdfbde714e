#include "scalecomplex/json_io.hpp"

#include "scalecomplex/errors.hpp"

namespace scx::json {

namespace {

template <typename T>
T get_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

} // namespace

Json scale_to_json(Scale s) { return Json(s.members()); }

Scale scale_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("a face must be a JSON array of integers");
    Scale s;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError("face members must be integers");
        const auto p = v.get<long long>();
        if (p < 0 || p >= 64)
            throw ParseError("face member out of range: " + std::to_string(p));
        s = s.with(static_cast<int>(p));
    }
    return s;
}

Json complex_to_json(const SimplicialComplex& k)
{
    Json facets = Json::array();
    for (Scale f : k.facets())
        facets.push_back(scale_to_json(f));
    return Json{{"ground_set_size", k.ground_set_size()},
                {"facets", std::move(facets)},
                {"f_vector", f_vector_to_json(f_vector(k))["f_vector"]}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    const int n = get_field<int>(j, "ground_set_size");
    if (!j.contains("facets") || !j.at("facets").is_array())
        throw ParseError("missing field \"facets\"");
    std::vector<Scale> fs;
    for (const auto& f : j.at("facets"))
        fs.push_back(scale_from_json(f));
    SimplicialComplex k = [&] {
        try {
            return build_from_facets(n, fs);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }();
    if (j.contains("f_vector")) {
        const auto counts = get_field<std::vector<std::uint64_t>>(j, "f_vector");
        if (counts != f_vector(k).counts)
            throw ParseError("f_vector does not match the facets");
    }
    return k;
}

SimplicialComplex complex_from_string(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

Json chain_to_json(const Chain& c)
{
    Json terms = Json::array();
    for (const auto& [face, coeff] : c.terms())
        terms.push_back(Json{{"face", scale_to_json(face)}, {"coeff", rational_to_string(coeff)}});
    return Json{{"dimension", c.dimension()}, {"terms", std::move(terms)}};
}

Chain chain_from_json(const Json& j)
{
    Chain c(get_field<int>(j, "dimension"));
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ParseError("missing field \"terms\"");
    for (const auto& t : j.at("terms")) {
        if (!t.contains("face"))
            throw ParseError("chain term without \"face\"");
        try {
            c.add(scale_from_json(t.at("face")), rational_from_string(get_field<std::string>(t, "coeff")));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return c;
}

Json collapse_log_to_json(const std::vector<FreePair>& log)
{
    Json out = Json::array();
    for (const auto& p : log)
        out.push_back(Json{{"facet", scale_to_json(p.facet)}, {"free_face", scale_to_json(p.free_face)}});
    return out;
}

std::vector<FreePair> collapse_log_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("collapse log must be an array");
    std::vector<FreePair> out;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("facet") || !e.contains("free_face"))
            throw ParseError("collapse log entries need \"facet\" and \"free_face\"");
        out.push_back({scale_from_json(e.at("facet")), scale_from_json(e.at("free_face"))});
    }
    return out;
}

Json f_vector_to_json(const FVector& f) { return Json{{"f_vector", f.counts}}; }

Json betti_to_json(const BettiVector& b)
{
    return Json{{"first_dimension", -1}, {"reduced_betti", b.values}};
}

Json classes_to_json(const std::vector<FacetClass>& classes)
{
    Json rows = Json::array();
    for (const auto& c : classes)
        rows.push_back(Json{{"pitch_classes", c.cardinality},
                            {"interval_sequence", c.display_sequence.to_string()},
                            {"canonical_sequence", c.canonical_sequence.to_string()},
                            {"scale_count", c.scale_count},
                            {"name", c.name}});
    return rows;
}

Json sphere_report_to_json(const SphereReport& r, const PitchUniverse& u)
{
    Json spheres = Json::array();
    for (const auto& s : r.spheres) {
        Json hex = Json::array();
        for (Scale h : s.hexatonics)
            hex.push_back(scale_to_json(h));
        Json support = Json::array();
        for (const auto& [face, coeff] : s.cycle.terms())
            support.push_back(Json{{"face", scale_to_json(face)}, {"coeff", rational_to_string(coeff)}});
        spheres.push_back(Json{
            {"omitted_triad", scale_to_json(s.scale.omitted_triad.members())},
            {"omitted_triad_names", format_scale(s.scale.omitted_triad.members(), u)},
            {"members", scale_to_json(s.scale.members)},
            {"hexatonics", std::move(hex)},
            {"certificate",
             Json{{"reduced_betti", s.certificate.betti.values},
                  {"betti_is_sphere", s.certificate.betti_is_sphere},
                  {"closed_pseudomanifold", s.certificate.closed_pseudomanifold},
                  {"dual_graph_connected", s.certificate.dual_graph_connected},
                  {"pass", s.certificate.pass()}}},
            {"fundamental_cycle", Json{{"dimension", s.cycle.dimension()}, {"terms", std::move(support)}}},
        });
    }
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"spheres", {p.first, p.second}},
                             {"intersection", scale_to_json(p.members)},
                             {"interval_sequence", interval_sequence(p.members, u).to_string()},
                             {"is_facet", p.is_facet},
                             {"overlap_is_simplex", p.overlap_is_simplex},
                             {"overlap_collapses_to_point", p.overlap_collapses_to_point}});
    Json triples = Json::array();
    for (const auto& t : r.triples)
        triples.push_back(Json{{"spheres", t.indices},
                               {"intersection", scale_to_json(t.members)},
                               {"filled_in_complex", t.filled_in_complex},
                               {"collapses_to_point", t.collapses_to_point}});
    Json ranks = Json::array();
    for (const auto& s : r.basis.ranks)
        ranks.push_back(Json{{"spheres", s.members}, {"rank", s.rank}});
    return Json{{"spheres", std::move(spheres)},
                {"pairwise_intersections", std::move(pairs)},
                {"triple_intersections", std::move(triples)},
                {"quadruple_intersection", scale_to_json(r.quadruple)},
                {"basis_ranks", std::move(ranks)}};
}

} // namespace scx::json
