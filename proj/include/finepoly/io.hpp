#pragma once

#include "finepoly/classify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace finepoly {

using Json = nlohmann::ordered_json;

// Input document. Coordinates are rational so that "p/q" strings round-trip;
// every command in this toolkit works on lattice polytopes and rejects
// non-integral vertices with a clear message.
struct PolytopeDocument {
  std::string name;  // empty = unnamed
  int ambient = 0;
  std::vector<RatVec> vertices;
  std::optional<bool> asserted_sporadic;

  bool operator==(const PolytopeDocument& o) const = default;
};

PolytopeDocument parse_polytope_document(const Json& j);
PolytopeDocument parse_polytope_document(const std::string& text);
Json polytope_document_json(const PolytopeDocument& doc);

// The lattice polytope of a document; throws std::invalid_argument when some
// coordinate is not an integer.
LatticePolytope document_polytope(const PolytopeDocument& doc);

// Rendering rules: integers become JSON numbers (decimal strings beyond
// int64), non-integral rationals become "p/q" strings, never floats.
Json json_int(const Int& v);
Json json_rat(const Rat& v);
Json json_int_vec(const IntVec& v);
Json json_rat_vec(const RatVec& v);
Json json_matrix(const IMat& m);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntVec int_vec_from_json(const Json& j);
RatVec rat_vec_from_json(const Json& j);
IMat matrix_from_json(const Json& j);

// {empty, dim, vertices, facets}.
Json fine_json(const Polytope& fine);

Json projection_json(const CanonicalProjection& p);
Json width_json(const WidthResult& w);
Json normal_form_json(const NormalFormKey& k);

// The full classification record: the report plus width, normal form key,
// sporadicity (when F-hollow), and provenance notes distinguishing certified
// results from assertions carried on the input document.
struct FanoRecord {
  RatVec p;
  std::vector<IntVec> q_vertices;
  std::vector<RatVec> q_dual_vertices;
  Rat adjunction;
  bool operator==(const FanoRecord&) const = default;
};
struct ProjectionRecord {
  IMat matrix;
  IntVec offset;
  std::vector<IntVec> image_vertices;
  Rat image_mu;
  int image_fine_dim = 0;
  bool operator==(const ProjectionRecord&) const = default;
};
struct WidthRecord {
  Int value;
  std::vector<IntVec> directions;
  bool exhaustive = false;
  bool operator==(const WidthRecord&) const = default;
};
struct SporadicityRecord {
  std::string status;
  bool certified = false;
  std::string note;
  std::optional<IMat> witness_matrix;
  std::optional<IntVec> witness_offset;
  std::optional<std::vector<IntVec>> witness_image_vertices;
  bool operator==(const SporadicityRecord&) const = default;
};
struct ClassificationRecord {
  std::string name;  // empty = omitted
  int ambient_dim = 0;
  int dim = 0;
  std::vector<IntVec> vertices;
  std::optional<std::string> normal_form_key;  // nullopt above the vertex cap
  Rat mu;
  int dim_fine_at_mu = -1;
  std::string classification;
  std::vector<IntVec> support_at_mu;
  std::optional<int> kodaira;  // nullopt encodes minus infinity
  std::optional<FanoRecord> fano;
  std::optional<ProjectionRecord> projection;
  std::optional<WidthRecord> width;
  std::optional<SporadicityRecord> sporadicity;
  std::optional<bool> asserted_sporadic;
  std::vector<std::string> notes;
  bool operator==(const ClassificationRecord&) const = default;
};

Json record_json(const ClassificationRecord& r);
ClassificationRecord parse_record(const Json& j);

// Runs classify, width, normal form, and (for F-hollow inputs) the
// sporadicity search, and assembles the record.
ClassificationRecord build_record(const PolytopeDocument& doc, const Int& bound);

}  // namespace finepoly
