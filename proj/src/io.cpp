#include "finepoly/io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace finepoly {

namespace {

const Int kInt64Min(std::numeric_limits<std::int64_t>::min());
const Int kInt64Max(std::numeric_limits<std::int64_t>::max());

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Json json_int(const Int& v) {
  if (v >= kInt64Min && v <= kInt64Max) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json json_rat(const Rat& v) {
  if (rat_den(v) == 1) return json_int(rat_num(v));
  return Json(rat_str(v));
}

Json json_int_vec(const IntVec& v) {
  Json a = Json::array();
  for (const Int& c : v) a.push_back(json_int(c));
  return a;
}

Json json_rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& c : v) a.push_back(json_rat(c));
  return a;
}

Json json_matrix(const IMat& m) {
  Json a = Json::array();
  for (int r = 0; r < m.rows; ++r) a.push_back(json_int_vec(m.row(r)));
  return a;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    Rat r = rat_from_json(j);
    if (rat_den(r) != 1) bad("expected an integer, got '" + j.get<std::string>() + "'");
    return rat_num(r);
  }
  bad("expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_float()) bad("floating-point numbers are not accepted; use \"p/q\" strings");
  bad("expected a rational, got " + j.dump());
}

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers, got " + j.dump());
  IntVec v;
  v.reserve(j.size());
  for (const Json& c : j) v.push_back(int_from_json(c));
  return v;
}

RatVec rat_vec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals, got " + j.dump());
  RatVec v;
  v.reserve(j.size());
  for (const Json& c : j) v.push_back(rat_from_json(c));
  return v;
}

IMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty array of rows");
  std::vector<IntVec> rows;
  for (const Json& r : j) rows.push_back(int_vec_from_json(r));
  for (const IntVec& r : rows)
    if (r.size() != rows[0].size()) bad("matrix rows have mixed lengths");
  return IMat::from_rows(rows);
}

PolytopeDocument parse_polytope_document(const Json& j) {
  if (!j.is_object()) bad("polytope document must be a JSON object");
  PolytopeDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("ambient_dim")) bad("missing \"ambient_dim\"");
  if (!j["ambient_dim"].is_number_integer() && !j["ambient_dim"].is_number_unsigned())
    bad("\"ambient_dim\" must be an integer");
  long long ad = j["ambient_dim"].get<long long>();
  if (ad < 1 || ad > 64) bad("\"ambient_dim\" out of range (1..64)");
  doc.ambient = static_cast<int>(ad);
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    bad("\"vertices\" must be a nonempty array");
  for (const Json& v : j["vertices"]) {
    RatVec vv = rat_vec_from_json(v);
    if (static_cast<int>(vv.size()) != doc.ambient)
      bad("vertex length does not match ambient_dim");
    doc.vertices.push_back(std::move(vv));
  }
  if (j.contains("asserted")) {
    const Json& a = j["asserted"];
    if (!a.is_object()) bad("\"asserted\" must be an object");
    if (a.contains("sporadic")) {
      if (!a["sporadic"].is_boolean()) bad("\"asserted.sporadic\" must be a boolean");
      doc.asserted_sporadic = a["sporadic"].get<bool>();
    }
  }
  return doc;
}

PolytopeDocument parse_polytope_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return parse_polytope_document(j);
}

Json polytope_document_json(const PolytopeDocument& doc) {
  Json j = Json::object();
  if (!doc.name.empty()) j["name"] = doc.name;
  j["ambient_dim"] = doc.ambient;
  Json verts = Json::array();
  for (const RatVec& v : doc.vertices) verts.push_back(json_rat_vec(v));
  j["vertices"] = verts;
  if (doc.asserted_sporadic) j["asserted"] = Json{{"sporadic", *doc.asserted_sporadic}};
  return j;
}

LatticePolytope document_polytope(const PolytopeDocument& doc) {
  std::vector<IntVec> pts;
  pts.reserve(doc.vertices.size());
  for (const RatVec& v : doc.vertices) {
    try {
      pts.push_back(to_int_vec(v));
    } catch (const std::invalid_argument&) {
      bad("this command requires a lattice polytope; found a non-integral vertex coordinate");
    }
  }
  return lattice_polytope(doc.ambient, pts);
}

Json fine_json(const Polytope& fine) {
  Json j = Json::object();
  j["empty"] = fine.empty();
  j["dim"] = fine.dim;
  Json verts = Json::array();
  Json facets = Json::array();
  if (!fine.empty()) {
    for (const RatVec& v : fine.vertices) verts.push_back(json_rat_vec(v));
    for (const Halfspace& f : fine.facets)
      facets.push_back(Json{{"normal", json_int_vec(f.normal)}, {"rhs", json_rat(f.rhs)}});
  }
  j["vertices"] = verts;
  j["facets"] = facets;
  return j;
}

namespace {

Json fano_json(const FanoRecord& f) {
  Json j = Json::object();
  j["p"] = json_rat_vec(f.p);
  Json qv = Json::array();
  for (const IntVec& v : f.q_vertices) qv.push_back(json_int_vec(v));
  j["q_vertices"] = qv;
  Json qd = Json::array();
  for (const RatVec& v : f.q_dual_vertices) qd.push_back(json_rat_vec(v));
  j["q_dual_vertices"] = qd;
  j["adjunction"] = rat_str(f.adjunction);
  return j;
}

FanoRecord fano_from_json(const Json& j) {
  FanoRecord f;
  f.p = rat_vec_from_json(j.at("p"));
  for (const Json& v : j.at("q_vertices")) f.q_vertices.push_back(int_vec_from_json(v));
  for (const Json& v : j.at("q_dual_vertices")) f.q_dual_vertices.push_back(rat_vec_from_json(v));
  f.adjunction = rat_from_json(j.at("adjunction"));
  return f;
}

Json projection_record_json(const ProjectionRecord& p) {
  Json j = Json::object();
  j["matrix"] = json_matrix(p.matrix);
  j["offset"] = json_int_vec(p.offset);
  Json iv = Json::array();
  for (const IntVec& v : p.image_vertices) iv.push_back(json_int_vec(v));
  j["image_vertices"] = iv;
  j["image_mu"] = rat_str(p.image_mu);
  j["image_fine_dim"] = p.image_fine_dim;
  return j;
}

ProjectionRecord projection_record_from_json(const Json& j) {
  ProjectionRecord p;
  p.matrix = matrix_from_json(j.at("matrix"));
  p.offset = int_vec_from_json(j.at("offset"));
  for (const Json& v : j.at("image_vertices")) p.image_vertices.push_back(int_vec_from_json(v));
  p.image_mu = rat_from_json(j.at("image_mu"));
  p.image_fine_dim = j.at("image_fine_dim").get<int>();
  return p;
}

Json width_record_json(const WidthRecord& w) {
  Json j = Json::object();
  j["value"] = json_int(w.value);
  Json dirs = Json::array();
  for (const IntVec& d : w.directions) dirs.push_back(json_int_vec(d));
  j["directions"] = dirs;
  j["exhaustive"] = w.exhaustive;
  return j;
}

WidthRecord width_record_from_json(const Json& j) {
  WidthRecord w;
  w.value = int_from_json(j.at("value"));
  for (const Json& d : j.at("directions")) w.directions.push_back(int_vec_from_json(d));
  w.exhaustive = j.at("exhaustive").get<bool>();
  return w;
}

Json sporadicity_record_json(const SporadicityRecord& s) {
  Json j = Json::object();
  j["status"] = s.status;
  j["certified"] = s.certified;
  j["note"] = s.note;
  if (s.witness_matrix) j["witness_matrix"] = json_matrix(*s.witness_matrix);
  if (s.witness_offset) j["witness_offset"] = json_int_vec(*s.witness_offset);
  if (s.witness_image_vertices) {
    Json iv = Json::array();
    for (const IntVec& v : *s.witness_image_vertices) iv.push_back(json_int_vec(v));
    j["witness_image_vertices"] = iv;
  }
  return j;
}

SporadicityRecord sporadicity_record_from_json(const Json& j) {
  SporadicityRecord s;
  s.status = j.at("status").get<std::string>();
  s.certified = j.at("certified").get<bool>();
  s.note = j.at("note").get<std::string>();
  if (j.contains("witness_matrix")) s.witness_matrix = matrix_from_json(j["witness_matrix"]);
  if (j.contains("witness_offset")) s.witness_offset = int_vec_from_json(j["witness_offset"]);
  if (j.contains("witness_image_vertices")) {
    std::vector<IntVec> iv;
    for (const Json& v : j["witness_image_vertices"]) iv.push_back(int_vec_from_json(v));
    s.witness_image_vertices = std::move(iv);
  }
  return s;
}

}  // namespace

Json projection_json(const CanonicalProjection& p) {
  ProjectionRecord pr;
  pr.matrix = p.map.matrix;
  pr.offset = p.map.offset;
  pr.image_vertices = p.image.vertices;
  pr.image_mu = p.image_mu;
  pr.image_fine_dim = p.image_fine_dim;
  return projection_record_json(pr);
}

Json width_json(const WidthResult& w) {
  return width_record_json(WidthRecord{w.value, w.directions, w.exhaustive});
}

Json normal_form_json(const NormalFormKey& k) {
  Json j = Json::object();
  j["ambient_dim"] = k.ambient;
  Json verts = Json::array();
  for (const IntVec& v : k.canonical_vertices) verts.push_back(json_int_vec(v));
  j["canonical_vertices"] = verts;
  j["digest"] = k.digest();
  return j;
}

Json record_json(const ClassificationRecord& r) {
  Json j = Json::object();
  if (!r.name.empty()) j["name"] = r.name;
  j["ambient_dim"] = r.ambient_dim;
  j["dim"] = r.dim;
  Json verts = Json::array();
  for (const IntVec& v : r.vertices) verts.push_back(json_int_vec(v));
  j["vertices"] = verts;
  j["normal_form_key"] = r.normal_form_key ? Json(*r.normal_form_key) : Json(nullptr);
  j["mu"] = rat_str(r.mu);
  j["classification"] = r.classification;
  j["dim_fine_at_mu"] = r.dim_fine_at_mu;
  Json sup = Json::array();
  for (const IntVec& v : r.support_at_mu) sup.push_back(json_int_vec(v));
  j["support_at_mu"] = sup;
  j["kodaira"] = r.kodaira ? Json(*r.kodaira) : Json(nullptr);
  if (r.fano) j["fano"] = fano_json(*r.fano);
  if (r.projection) j["projection"] = projection_record_json(*r.projection);
  if (r.width) j["width"] = width_record_json(*r.width);
  if (r.sporadicity) j["sporadicity"] = sporadicity_record_json(*r.sporadicity);
  if (r.asserted_sporadic) j["asserted"] = Json{{"sporadic", *r.asserted_sporadic}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

ClassificationRecord parse_record(const Json& j) {
  if (!j.is_object()) bad("classification record must be a JSON object");
  ClassificationRecord r;
  if (j.contains("name")) r.name = j["name"].get<std::string>();
  r.ambient_dim = j.at("ambient_dim").get<int>();
  r.dim = j.at("dim").get<int>();
  for (const Json& v : j.at("vertices")) r.vertices.push_back(int_vec_from_json(v));
  if (j.contains("normal_form_key") && !j["normal_form_key"].is_null())
    r.normal_form_key = j["normal_form_key"].get<std::string>();
  r.mu = rat_from_json(j.at("mu"));
  r.classification = j.at("classification").get<std::string>();
  r.dim_fine_at_mu = j.at("dim_fine_at_mu").get<int>();
  for (const Json& v : j.at("support_at_mu")) r.support_at_mu.push_back(int_vec_from_json(v));
  if (j.contains("kodaira") && !j["kodaira"].is_null()) r.kodaira = j["kodaira"].get<int>();
  if (j.contains("fano")) r.fano = fano_from_json(j["fano"]);
  if (j.contains("projection")) r.projection = projection_record_from_json(j["projection"]);
  if (j.contains("width")) r.width = width_record_from_json(j["width"]);
  if (j.contains("sporadicity")) r.sporadicity = sporadicity_record_from_json(j["sporadicity"]);
  if (j.contains("asserted") && j["asserted"].contains("sporadic"))
    r.asserted_sporadic = j["asserted"]["sporadic"].get<bool>();
  if (j.contains("notes"))
    for (const Json& n : j["notes"]) r.notes.push_back(n.get<std::string>());
  return r;
}

ClassificationRecord build_record(const PolytopeDocument& doc, const Int& bound) {
  LatticePolytope p = document_polytope(doc);
  MultiplierReport rep = classify(p);

  ClassificationRecord r;
  r.name = doc.name;
  r.ambient_dim = p.ambient;
  r.dim = p.dim();
  r.vertices = p.vertices;
  try {
    r.normal_form_key = affine_normal_form(p).digest();
  } catch (const std::invalid_argument& e) {
    r.notes.push_back(std::string("normal form unavailable: ") + e.what());
  }
  r.mu = rep.mu;
  r.dim_fine_at_mu = rep.fine_dim_at_mu;
  r.classification = class_name(rep.cls);
  r.support_at_mu = rep.support_at_mu;
  r.kodaira = rep.kodaira;
  if (rep.fano) {
    FanoRecord f;
    f.p = rep.fano->base_point;
    f.q_vertices = rep.fano->q.vertices;
    f.q_dual_vertices = rep.fano->q_dual.vertices;
    f.adjunction = rep.fano->adjunction;
    r.fano = std::move(f);
  }
  if (rep.projection) {
    ProjectionRecord pr;
    pr.matrix = rep.projection->map.matrix;
    pr.offset = rep.projection->map.offset;
    pr.image_vertices = rep.projection->image.vertices;
    pr.image_mu = rep.projection->image_mu;
    pr.image_fine_dim = rep.projection->image_fine_dim;
    r.projection = std::move(pr);
  }
  WidthResult w = lattice_width(p, bound);
  r.width = WidthRecord{w.value, w.directions, w.exhaustive};
  if (rep.mu > 1) {
    SporadicityResult s = sporadicity_check(p, rep, bound);
    SporadicityRecord sr;
    sr.status = sporadic_status_name(s.status);
    sr.certified = s.certified;
    sr.note = s.note;
    if (s.witness) {
      sr.witness_matrix = s.witness->matrix;
      sr.witness_offset = s.witness->offset;
    }
    if (s.witness_image) sr.witness_image_vertices = s.witness_image->vertices;
    r.sporadicity = std::move(sr);
    r.notes.push_back(std::string("sporadicity ") + (s.certified ? "certified: " : "not certified: ") + s.note);
  }
  r.asserted_sporadic = doc.asserted_sporadic;
  if (doc.asserted_sporadic)
    r.notes.push_back(*doc.asserted_sporadic
                          ? "input document asserts sporadic; the assertion is not verified by this run"
                          : "input document asserts not sporadic; the assertion is not verified by this run");
  return r;
}

}  // namespace finepoly
