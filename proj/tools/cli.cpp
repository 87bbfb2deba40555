#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "acceptance.hpp"
#include "polycells/atlas.hpp"
#include "polycells/census.hpp"
#include "polycells/classes.hpp"
#include "polycells/clusters.hpp"
#include "polycells/facecount.hpp"
#include "polycells/isotropy.hpp"
#include "polycells/tables.hpp"
#include "polycells/types.hpp"

namespace polycells::cli {

namespace {

using nlohmann::json;

// Raised for malformed requests; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int required(const OutputRequest& req, const std::string& name) {
  auto it = req.params.find(name);
  if (it == req.params.end()) throw UsageError(req.command + " needs --" + name);
  return it->second;
}

std::optional<int> optional_param(const OutputRequest& req, const std::string& name) {
  auto it = req.params.find(name);
  if (it == req.params.end()) return std::nullopt;
  return it->second;
}

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json envelope(const std::string& command) { return {{"schemaVersion", 1}, {"command", command}}; }

inline constexpr int kMaxFaceIndex = 2000;
inline constexpr int kMaxTypeIndex = 40;

// k values to report for K_n: the one asked for, or all of them.
std::vector<int> codims(const OutputRequest& req, int n) {
  FaceQuery{n, 0}.validate();
  const int limit = req.command == "types" ? kMaxTypeIndex : kMaxFaceIndex;
  if (n > limit)
    throw std::domain_error(req.command + " is limited to --n " + std::to_string(limit));
  if (auto k = optional_param(req, "k")) {
    FaceQuery{n, *k}.validate();
    return {*k};
  }
  std::vector<int> all;
  for (int k = 0; k <= n - 2; ++k) all.push_back(k);
  return all;
}

int cmd_faces(const OutputRequest& req, std::ostream& out) {
  const int n = required(req, "n");
  const auto ks = codims(req, n);
  if (req.format == "json") {
    json j = envelope("faces");
    j["n"] = n;
    json rows = json::array();
    for (int k : ks) rows.push_back({{"k", k}, {"faces", json_integer(cayley_faces(n, k))}});
    j["rows"] = rows;
    j["total"] = json_integer(schroder(n));
    dump(out, j);
  } else {
    out << "n,k,faces\n";
    for (int k : ks) out << n << ',' << k << ',' << cayley_faces(n, k).get_str() << '\n';
  }
  return kExitOk;
}

int cmd_types(const OutputRequest& req, std::ostream& out) {
  const int n = required(req, "n");
  const auto ks = codims(req, n);
  json rows = json::array();
  if (req.format != "json") out << "n,k,signature,factorization,faces\n";
  for (int k : ks)
    for (const auto& sig : type_signatures(n, k)) {
      const auto count = type_face_count(sig);
      if (req.format == "json")
        rows.push_back({{"k", k},
                        {"signature", sig.to_string()},
                        {"factorization", sig.factorization_string()},
                        {"faces", json_integer(count)}});
      else
        out << n << ',' << k << ',' << sig.to_string() << ',' << sig.factorization_string() << ','
            << count.get_str() << '\n';
    }
  if (req.format == "json") {
    json j = envelope("types");
    j["n"] = n;
    j["rows"] = rows;
    dump(out, j);
  }
  return kExitOk;
}

void require_polygon(int n, int k) {
  if (n < 3) throw std::invalid_argument("--n is the number of polygon sides and must be at least 3");
  if (k < 0 || k > n - 3)
    throw std::invalid_argument("a " + std::to_string(n) + "-gon takes 0.." + std::to_string(n - 3) + " diagonals");
  if (n > kMaxClassPolygon)
    throw std::domain_error("classes are enumerated dissection by dissection; polygons with more than " +
                            std::to_string(kMaxClassPolygon) + " sides are out of reach");
}

int cmd_classes(const OutputRequest& req, std::ostream& out) {
  const int n = required(req, "n"), k = required(req, "k");
  require_polygon(n, k);
  const auto classes = enumerate_classes(n, k);
  if (req.format == "json") {
    json j = envelope("classes");
    j["n"] = n;
    j["k"] = k;
    json rows = json::array();
    for (const auto& c : classes) {
      json diagonals = json::array();
      for (const auto& d : c.representative.diagonals()) diagonals.push_back({d.a, d.b});
      rows.push_back({{"label", c.label()},
                      {"i", c.index},
                      {"code", c.code.str()},
                      {"kappa", json_integer(c.kappa)},
                      {"signature", c.signature.to_string()},
                      {"diagonals", diagonals}});
    }
    j["classes"] = rows;
    dump(out, j);
  } else {
    out << "n,k,i,label,code,kappa,signature,diagonals\n";
    for (const auto& c : classes)
      out << n << ',' << k << ',' << c.index << ',' << c.label() << ',' << c.code.str() << ','
          << c.kappa.get_str() << ',' << c.signature.to_string() << ',' << diagonal_list(c.representative) << '\n';
  }
  return kExitOk;
}

int cmd_atlas(const OutputRequest& req, std::ostream& out) {
  const int n = required(req, "n"), k = required(req, "k");
  require_polygon(n, k);
  const auto atlas = build_atlas(n, k);
  if (req.format == "json")
    dump(out, atlas_json(n, k, atlas));
  else if (req.format == "svg")
    write_atlas_svg(out, n, k, atlas);
  else
    write_atlas_csv(out, atlas);
  return kExitOk;
}

int cmd_isotropy(const OutputRequest& req, std::ostream& out, std::ostream& err) {
  const int n = required(req, "n"), k = required(req, "k");
  require_polygon(n, k);
  const auto atlas = build_atlas(n, k);
  bool consistent = true;
  json rows = json::array();
  if (req.format != "json") out << "label,group,z2Count,dihedralOrder,order,kappa,kappaCheck,consistent\n";
  for (const auto& r : atlas) {
    consistent = consistent && r.consistent();
    const auto& g = r.isotropy;
    if (req.format == "json") {
      rows.push_back({{"label", r.cls.label()},
                      {"group", g.to_string()},
                      {"z2Count", g.z2_count},
                      {"dihedralOrder", g.dihedral_order ? json(*g.dihedral_order) : json(nullptr)},
                      {"order", json_integer(g.order)},
                      {"kappa", json_integer(r.cls.kappa)},
                      {"kappaCheck", json_integer(r.kappa_check)},
                      {"consistent", r.consistent()}});
    } else {
      out << r.cls.label() << ',' << g.to_string() << ',' << g.z2_count << ','
          << (g.dihedral_order ? std::to_string(*g.dihedral_order) : "") << ',' << g.order.get_str() << ','
          << r.cls.kappa.get_str() << ',' << r.kappa_check.get_str() << ',' << (r.consistent() ? "yes" : "no")
          << '\n';
    }
  }
  if (req.format == "json") {
    json j = envelope("isotropy");
    j["n"] = n;
    j["k"] = k;
    j["classes"] = rows;
    dump(out, j);
  }
  if (!consistent) {
    err << "isotropy: group order disagrees with the class size for at least one class\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_moduli(const OutputRequest& req, std::ostream& out) {
  const int n = required(req, "n");
  const auto ks = codims(req, n);
  if (req.census && n + 1 > kMaxCensusPolygon)
    throw std::domain_error("the labeled census enumerates every labeling of the " + std::to_string(n + 1) +
                            "-gon and is limited to polygons with at most " + std::to_string(kMaxCensusPolygon) +
                            " sides (--n " + std::to_string(kMaxCensusPolygon - 1) + ")");
  json rows = json::array();
  if (req.format != "json") out << (req.census ? "n,k,faces,census\n" : "n,k,faces\n");
  for (int k : ks) {
    const auto faces = moduli_faces(n, k);
    std::optional<Integer> census;
    if (req.census) census = labeled_moduli_census(n + 1, k);
    if (req.format == "json") {
      json row{{"k", k}, {"faces", json_integer(faces)}};
      if (census) row["census"] = json_integer(*census);
      rows.push_back(row);
    } else {
      out << n << ',' << k << ',' << faces.get_str();
      if (census) out << ',' << census->get_str();
      out << '\n';
    }
  }
  if (req.format == "json") {
    json j = envelope("moduli");
    j["n"] = n;
    j["points"] = n + 1;
    j["rows"] = rows;
    dump(out, j);
  }
  return kExitOk;
}

int cmd_tables(const OutputRequest& req, std::ostream& out) {
  if (!req.which) throw UsageError("tables needs --which {a,v,b,f,dissections}");
  const auto id = parse_table_id(*req.which);
  if (!id) throw UsageError("unknown table '" + *req.which + "'; choose a, v, b, f or dissections");
  const auto grid =
      *id == TableId::dissections ? dissection_type_table() : series_table(*id, compute_cluster_series());
  if (req.format == "json") {
    auto j = to_json(grid);
    j["command"] = "tables";
    j["which"] = *req.which;
    dump(out, j);
  } else {
    write_csv(out, grid);
  }
  return kExitOk;
}

int cmd_verify(const OutputRequest& req, std::ostream& out) {
  oracle::AcceptanceOptions options;
  if (auto depth = optional_param(req, "max-size")) {
    if (*depth < 3) throw UsageError("--max-size must be at least 3");
    options.max_size = *depth;
  }
  json results = json::array();
  int failures = 0;
  oracle::run_acceptance(options, [&](const oracle::CriterionResult& r) {
    if (!r.pass) ++failures;
    if (req.format == "json") {
      results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary}, {"notes", r.notes}});
    } else {
      out << oracle::format_result_line(r) << '\n';
      for (const auto& note : r.notes) out << "        " << note << '\n';
      out.flush();
    }
  });
  if (req.format == "json") {
    json j = envelope("verify");
    j["maxSize"] = options.max_size;
    j["criteria"] = results;
    j["failures"] = failures;
    dump(out, j);
  } else {
    out << (failures ? std::to_string(failures) + " of " + std::to_string(oracle::kCriterionCount) + " criteria failed"
                     : "all " + std::to_string(oracle::kCriterionCount) + " criteria passed")
        << '\n';
  }
  return failures ? kExitFailure : kExitOk;
}

int dispatch(const OutputRequest& req, std::ostream& out, std::ostream& err) {
  if (req.format != "csv" && req.format != "json" && req.format != "svg")
    throw UsageError("unknown format '" + req.format + "'");
  if (req.format == "svg" && req.command != "atlas") throw UsageError("--format svg is only available for atlas");
  if (req.which && req.command != "tables") throw UsageError("--which only applies to tables");
  if (req.census && req.command != "moduli") throw UsageError("--census only applies to moduli");
  if (req.command == "faces") return cmd_faces(req, out);
  if (req.command == "types") return cmd_types(req, out);
  if (req.command == "classes") return cmd_classes(req, out);
  if (req.command == "atlas") return cmd_atlas(req, out);
  if (req.command == "isotropy") return cmd_isotropy(req, out, err);
  if (req.command == "moduli") return cmd_moduli(req, out);
  if (req.command == "tables") return cmd_tables(req, out);
  if (req.command == "verify") return cmd_verify(req, out);
  throw UsageError("unknown command '" + req.command + "'");
}

}  // namespace

int run(const OutputRequest& request, std::ostream& out, std::ostream& err) {
  // Render into a buffer first so that a failed request never leaves a partial file.
  std::ostringstream buffer;
  int status;
  try {
    status = dispatch(request, buffer, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (request.out_path) {
    std::ofstream file(*request.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *request.out_path << " for writing\n";
      return kExitFailure;
    }
    file << buffer.str();
    if (!file.flush()) {
      err << "error: failed writing " << *request.out_path << '\n';
      return kExitFailure;
    }
  } else {
    out << buffer.str();
  }
  return status;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face counts, cluster tables and class atlases for associahedra and real moduli spaces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  OutputRequest req;
  std::map<std::string, int> values;

  struct Spec {
    const char* name;
    const char* help;
    bool n, k, which, census, max_size;
  };
  const Spec specs[] = {
      {"faces", "Faces of K_n by codimension", true, true, false, false, false},
      {"types", "Face types of K_n with their product factorization and counts", true, true, false, false, false},
      {"classes", "Classes of n-gons with k diagonals, with kappa and a representative", true, true, false, false,
       false},
      {"atlas", "Class atlas with isotropy data (csv, json or svg)", true, true, false, false, false},
      {"isotropy", "Isotropy groups of each class and the kappa cross-check", true, true, false, false, false},
      {"moduli", "Faces of the real moduli space with n+1 marked points", true, true, false, true, false},
      {"tables", "Cluster tables a, v, b, f and dissections by type", false, false, true, false, false},
      {"verify", "Run every acceptance check against the oracles", false, false, false, false, true},
  };
  std::string which;
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", req.out_path, "Write the artifact to PATH instead of stdout");
    if (s.n) sub->add_option_function<int>("--n", [&](int v) { values["n"] = v; }, s.name == std::string("faces") ||
                                                  s.name == std::string("types") || s.name == std::string("moduli")
                                              ? "Index n of K_n"
                                              : "Number of polygon sides");
    if (s.k) sub->add_option_function<int>("--k", [&](int v) { values["k"] = v; }, "Codimension / number of diagonals");
    if (s.which) sub->add_option("--which", which, "Table to print")->check(CLI::IsMember({"a", "v", "b", "f", "dissections"}));
    if (s.census) sub->add_flag("--census", req.census, "Also run the labeled orbit census (at most 7 sides)");
    if (s.max_size)
      sub->add_option_function<int>("--max-size", [&](int v) { values["max-size"] = v; },
                                    "Largest polygon or tree examined (default 10)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) req.command = sub->get_name();
  req.params = values;
  if (!which.empty()) req.which = which;
  return run(req, out, err);
}

}  // namespace polycells::cli
