#ifndef SCALECOMPLEX_JSON_IO_HPP
#define SCALECOMPLEX_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "scalecomplex/classify.hpp"
#include "scalecomplex/collapse.hpp"
#include "scalecomplex/complex.hpp"
#include "scalecomplex/homology.hpp"
#include "scalecomplex/spheres.hpp"

namespace scx::json {

using Json = nlohmann::ordered_json;

Json scale_to_json(Scale s);
Scale scale_from_json(const Json& j);

/// { "ground_set_size", "facets", "f_vector" }
Json complex_to_json(const SimplicialComplex& k);
/// Accepts the export shape; "f_vector" is optional and, when present,
/// must match the reconstructed complex.
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex complex_from_string(const std::string& text);

/// { "dimension", "terms": [ { "face", "coeff": "p/q" } ] }
Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

/// [ { "facet", "free_face" } ]
Json collapse_log_to_json(const std::vector<FreePair>& log);
std::vector<FreePair> collapse_log_from_json(const Json& j);

Json f_vector_to_json(const FVector& f);
Json betti_to_json(const BettiVector& b);

/// Rows with "pitch_classes", "interval_sequence", "scale_count", "name".
Json classes_to_json(const std::vector<FacetClass>& classes);

Json sphere_report_to_json(const SphereReport& r, const PitchUniverse& u);

} // namespace scx::json

#endif
