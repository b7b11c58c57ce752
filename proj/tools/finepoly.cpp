#include "finepoly/classify.hpp"
#include "finepoly/fixtures.hpp"
#include "finepoly/io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace {

using finepoly::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUndetermined = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

finepoly::PolytopeDocument read_single_document(const std::string& path) {
  return finepoly::parse_polytope_document(read_input(path));
}

// Plain-text rendering: key/value lines, rows for arrays of arrays.
bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-infinity";  // only kodaira and normal_form_key are nullable
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, val] : j.items()) {
    if (is_scalar(val)) {
      os << pad << key << ": " << scalar_str(val) << "\n";
    } else if (val.is_array()) {
      bool scalars = true;
      for (const Json& e : val) scalars = scalars && is_scalar(e);
      if (scalars) {
        os << pad << key << ":";
        for (const Json& e : val) os << " " << scalar_str(e);
        os << "\n";
      } else {
        os << pad << key << ":\n";
        for (const Json& e : val) {
          if (e.is_array()) {
            os << pad << "  (";
            for (std::size_t i = 0; i < e.size(); ++i)
              os << (i ? ", " : "") << scalar_str(e[i]);
            os << ")\n";
          } else {
            render_text(e, os, indent + 2);
          }
        }
      }
    } else {
      os << pad << key << ":\n";
      render_text(val, os, indent + 2);
    }
  }
}

void emit(const Json& j, const std::string& format) {
  if (format == "text")
    render_text(j, std::cout);
  else
    std::cout << j.dump() << "\n";
}

struct BatchOutcome {
  std::string line;
  std::string classification;             // empty on error
  std::optional<std::string> normal_key;  // digest when available
  bool failed = false;
};

BatchOutcome run_batch_line(const std::string& line, std::size_t index, const finepoly::Int& bound,
                            const std::string& format) {
  BatchOutcome out;
  std::string name;
  try {
    finepoly::PolytopeDocument doc = finepoly::parse_polytope_document(line);
    name = doc.name;
    finepoly::ClassificationRecord rec = finepoly::build_record(doc, bound);
    out.classification = rec.classification;
    out.normal_key = rec.normal_form_key;
    Json j = finepoly::record_json(rec);
    if (format == "text") {
      std::ostringstream ss;
      ss << (rec.name.empty() ? "(unnamed)" : rec.name) << ": " << rec.classification
         << " mu=" << finepoly::rat_str(rec.mu);
      if (rec.sporadicity) ss << " sporadicity=" << rec.sporadicity->status;
      out.line = ss.str();
    } else {
      out.line = j.dump();
    }
  } catch (const std::exception& e) {
    out.failed = true;
    Json err = Json::object();
    if (!name.empty()) err["name"] = name;
    err["input_line"] = index + 1;
    err["error"] = e.what();
    out.line = format == "text"
                   ? "line " + std::to_string(index + 1) + ": error: " + e.what()
                   : err.dump();
  }
  return out;
}

int cmd_batch(const std::string& input, const finepoly::Int& bound, int parallel,
              const std::string& format) {
  std::vector<std::string> lines = nonempty_lines(read_input(input));
  std::vector<BatchOutcome> outcomes(lines.size());
  int nthreads = std::max(1, parallel);
  if (nthreads > 1 && !lines.empty()) {
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (std::size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
        outcomes[i] = run_batch_line(lines[i], i, bound, format);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i)
      outcomes[i] = run_batch_line(lines[i], i, bound, format);
  }

  std::size_t errors = 0;
  std::map<std::string, std::pair<std::size_t, std::set<std::string>>> classes;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const BatchOutcome& o = outcomes[i];
    std::cout << o.line << "\n";
    if (o.failed) {
      ++errors;
      continue;
    }
    auto& slot = classes[o.classification];
    slot.first += 1;
    slot.second.insert(o.normal_key ? *o.normal_key : "unkeyed-" + std::to_string(i));
  }
  Json cls = Json::object();
  for (const auto& [tag, data] : classes)
    cls[tag] = Json{{"records", data.first}, {"equivalence_classes", data.second.size()}};
  Json summary =
      Json{{"summary",
            Json{{"records", lines.size()}, {"errors", errors}, {"classes", cls}}}};
  if (format == "text") {
    std::cout << "summary: " << lines.size() << " records, " << errors << " errors\n";
    render_text(cls, std::cout, 2);
  } else {
    std::cout << summary.dump() << "\n";
  }
  if (!lines.empty() && errors == lines.size()) return kExitInvalidInput;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polytope toolkit: Fine interiors, minimal multipliers, "
               "canonical Fano data, lattice projections, width, and normal forms"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string lambda_str = "1";
  long long bound_ll = 6;
  std::string format = "json";
  int parallel = 1;

  auto add_common = [&](CLI::App* sub, bool with_lambda = false, bool with_parallel = false) {
    sub->add_option("--input", input, "input file path, or - for stdin")->capture_default_str();
    sub->add_option("--bound", bound_ll, "search bound for width/sporadicity scans")
        ->capture_default_str();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    if (with_lambda)
      sub->add_option("--lambda", lambda_str, "dilation factor, a rational like 3/2")
          ->capture_default_str();
    if (with_parallel)
      sub->add_option("--parallel", parallel, "worker threads for batch")->capture_default_str();
  };

  CLI::App* c_fine = app.add_subcommand("fine", "Fine interior F(lambda P)");
  add_common(c_fine, true);
  CLI::App* c_mult = app.add_subcommand("mult", "minimal multiplier mu(P)");
  add_common(c_mult);
  CLI::App* c_classify = app.add_subcommand("classify", "full classification record");
  add_common(c_classify);
  CLI::App* c_project = app.add_subcommand("project", "canonical projection along F(mu P)");
  add_common(c_project);
  CLI::App* c_width = app.add_subcommand("width", "lattice width by bounded direction scan");
  add_common(c_width);
  CLI::App* c_normal = app.add_subcommand("normal-form", "affine unimodular normal form");
  add_common(c_normal);
  CLI::App* c_equiv =
      app.add_subcommand("equiv", "equivalence of two polytopes (two input lines)");
  add_common(c_equiv);
  CLI::App* c_kodaira = app.add_subcommand("kodaira", "Kodaira dimension from F(P)");
  add_common(c_kodaira);
  CLI::App* c_gen = app.add_subcommand("gen", "emit a named fixture polytope");
  std::string family;
  std::vector<int> params;
  c_gen->add_option("family", family, "fixture family")->required();
  c_gen->add_option("params", params, "family parameters");
  c_gen->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  CLI::App* c_batch = app.add_subcommand("batch", "classify a stream of documents");
  add_common(c_batch, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    finepoly::Int bound(bound_ll);

    if (c_gen->parsed()) {
      finepoly::PolytopeDocument doc;
      try {
        doc = finepoly::make_fixture(family, params);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const std::string& u : finepoly::fixture_usage()) std::cerr << "  " << u << "\n";
        return kExitUsage;
      }
      std::cout << finepoly::polytope_document_json(doc).dump() << "\n";
      return kExitOk;
    }

    if (c_batch->parsed()) return cmd_batch(input, bound, parallel, format);

    if (c_equiv->parsed()) {
      std::vector<std::string> lines = nonempty_lines(read_input(input));
      if (lines.size() != 2)
        throw std::invalid_argument("equiv expects exactly two documents, one per line; got " +
                                    std::to_string(lines.size()));
      finepoly::LatticePolytope a =
          finepoly::document_polytope(finepoly::parse_polytope_document(lines[0]));
      finepoly::LatticePolytope b =
          finepoly::document_polytope(finepoly::parse_polytope_document(lines[1]));
      if (a.ambient != b.ambient)
        throw std::invalid_argument("equiv: the two polytopes have different ambient dimensions");
      emit(Json{{"equivalent", finepoly::unimodular_equivalent(a, b)}}, format);
      return kExitOk;
    }

    finepoly::PolytopeDocument doc = read_single_document(input);
    finepoly::LatticePolytope p = finepoly::document_polytope(doc);

    if (c_fine->parsed()) {
      finepoly::Rat lambda = finepoly::parse_rat(lambda_str);
      if (lambda <= 0) throw std::invalid_argument("--lambda must be positive");
      Json j = finepoly::fine_json(finepoly::fine_interior(p, lambda));
      if (!doc.name.empty()) j = Json{{"name", doc.name}, {"lambda", finepoly::rat_str(lambda)},
                                      {"fine", j}};
      else j = Json{{"lambda", finepoly::rat_str(lambda)}, {"fine", j}};
      emit(j, format);
      return kExitOk;
    }
    if (c_mult->parsed()) {
      Json j = Json::object();
      if (!doc.name.empty()) j["name"] = doc.name;
      j["mu"] = finepoly::rat_str(finepoly::minimal_multiplier(p));
      emit(j, format);
      return kExitOk;
    }
    if (c_classify->parsed()) {
      finepoly::ClassificationRecord rec = finepoly::build_record(doc, bound);
      emit(finepoly::record_json(rec), format);
      if (rec.sporadicity && rec.sporadicity->status == "UNDETERMINED")
        return kExitUndetermined;
      return kExitOk;
    }
    if (c_project->parsed()) {
      finepoly::MultiplierReport rep = finepoly::classify(p);
      if (rep.cls != finepoly::PolyClass::projectable)
        throw std::invalid_argument(std::string("project requires a PROJECTABLE polytope; this one is ") +
                                    finepoly::class_name(rep.cls));
      Json j = finepoly::projection_json(*rep.projection);
      if (!doc.name.empty()) j["name"] = doc.name;
      emit(j, format);
      return kExitOk;
    }
    if (c_width->parsed()) {
      Json j = finepoly::width_json(finepoly::lattice_width(p, bound));
      if (!doc.name.empty()) j["name"] = doc.name;
      emit(j, format);
      return kExitOk;
    }
    if (c_normal->parsed()) {
      Json j = finepoly::normal_form_json(finepoly::affine_normal_form(p));
      if (!doc.name.empty()) j["name"] = doc.name;
      emit(j, format);
      return kExitOk;
    }
    if (c_kodaira->parsed()) {
      std::optional<int> k = finepoly::kodaira_dimension(p);
      Json j = Json::object();
      if (!doc.name.empty()) j["name"] = doc.name;
      j["kodaira"] = k ? Json(*k) : Json(nullptr);
      emit(j, format);
      return kExitOk;
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
