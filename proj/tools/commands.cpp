#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "graphspec/comparison.hpp"
#include "graphspec/dirichlet.hpp"
#include "graphspec/exhaustion.hpp"
#include "graphspec/family.hpp"
#include "graphspec/infinity.hpp"
#include "graphspec/metric.hpp"
#include "graphspec/serialize.hpp"
#include "graphspec/spectral.hpp"
#include "graphspec/suite.hpp"

namespace graphspec::cli {

namespace {

struct Input {
  std::optional<GraphFamily> family;
  std::optional<WeightedGraph> file_graph;
  const WeightedGraph& graph() const {
    return family ? family->graph() : *file_graph;
  }
};

Input load_input(const RunConfig& cfg) {
  Input in;
  if (!cfg.family.empty() && !cfg.graph_file.empty())
    throw std::invalid_argument("choose either --family or --graph, not both");
  if (!cfg.family.empty()) {
    in.family = family_by_name(cfg.family, cfg.params);
  } else if (!cfg.graph_file.empty()) {
    in.file_graph = load_graph(cfg.graph_file);
  } else {
    throw std::invalid_argument("an input is required: --family NAME or --graph FILE");
  }
  return in;
}

VertexSet resolve_omega(const RunConfig& cfg, const Input& in) {
  const std::string& spec = cfg.omega;
  if (spec.empty()) {
    if (in.family) return in.family->exhaustion(std::min(5, in.family->max_exhaustion()));
    return in.file_graph->all_vertices();
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("omega spec needs a prefix: ids: | ball: | canonical: | named:");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "ids") {
    std::vector<int> ids;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
    VertexSet s(std::move(ids));
    if (s.empty()) throw std::invalid_argument("empty omega");
    if (!s.ids().empty() && s.ids().back() >= in.graph().vertex_count())
      throw std::invalid_argument("omega id out of range");
    if (in.family) in.family->require_safe(s);
    return s;
  }
  if (kind == "ball") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("ball spec is ball:<x0>,<r>");
    std::string center = rest.substr(0, comma);
    int r = std::stoi(rest.substr(comma + 1));
    int x0 = (center == "base" && in.family) ? in.family->base_vertex() : std::stoi(center);
    VertexSet s = ball(in.graph(), x0, r);
    if (in.family) in.family->require_safe(s);
    return s;
  }
  if (kind == "canonical") {
    if (!in.family) throw std::invalid_argument("canonical omega needs a family input");
    return in.family->exhaustion(std::stoi(rest));
  }
  if (kind == "named") {
    if (!in.family) throw std::invalid_argument("named omega needs a family input");
    auto it = in.family->named_sets().find(rest);
    if (it == in.family->named_sets().end())
      throw std::invalid_argument("family has no distinguished set named " + rest);
    return it->second;
  }
  throw std::invalid_argument("unknown omega spec kind " + kind);
}

Json config_json(const RunConfig& cfg) {
  Json j{{"command", cfg.command},
         {"seed", cfg.seed},
         {"format", cfg.format},
         {"caps",
          Json{{"cheeger", cfg.caps.cheeger},
               {"dual_cheeger", cfg.caps.dual_cheeger},
               {"max_cut", cfg.caps.max_cut},
               {"eigensolver", cfg.caps.eigensolver}}}};
  if (!cfg.graph_file.empty()) j["graph"] = cfg.graph_file;
  if (!cfg.family.empty()) {
    j["family"] = cfg.family;
    Json p = Json::object();
    for (const auto& [k, v] : cfg.params) p[k] = v;
    j["params"] = p;
  }
  if (!cfg.omega.empty()) j["omega"] = cfg.omega;
  return j;
}

void render_table(const Json& j, std::ostream& out, int indent = 0) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
        out << pad << key << ":\n";
        render_table(value, out, indent + 1);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) render_table(item, out, indent);
  } else {
    out << pad << j.dump() << "\n";
  }
}

int emit(const RunConfig& cfg, const Json& report, const std::string& csv = "") {
  std::ostringstream body;
  if (cfg.format == "json") {
    body << report.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    if (csv.empty()) throw std::invalid_argument("csv output is not available for this command");
    body << csv;
  } else if (cfg.format == "table") {
    render_table(report, body);
  } else {
    throw std::invalid_argument("unknown format " + cfg.format);
  }
  if (cfg.out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw std::invalid_argument("cannot open output file " + cfg.out_path);
    out << body.str();
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  Input in = load_input(cfg);
  VertexSet omega = resolve_omega(cfg, in);
  if (omega.size() > cfg.caps.eigensolver) {
    Json err{{"config", config_json(cfg)},
             {"error", "omega exceeds the eigensolver cap; no fallback"}};
    emit(cfg, err);
    return kCapExceeded;
  }
  DirichletOperator op(in.graph(), omega);
  SpectralResult sp = spectrum(op);
  Json rep{{"config", config_json(cfg)}, {"omega", omega.ids()}};
  rep.update(to_json(sp));
  std::ostringstream csv;
  csv.precision(17);
  csv << "index,eigenvalue\n";
  for (size_t i = 0; i < sp.eigenvalues.size(); ++i)
    csv << i + 1 << ',' << sp.eigenvalues[i] << '\n';
  return emit(cfg, rep, csv.str());
}

int cmd_isoperimetry(const RunConfig& cfg) {
  Input in = load_input(cfg);
  VertexSet omega = resolve_omega(cfg, in);
  Json rep{{"config", config_json(cfg)}, {"omega", omega.ids()}};
  const bool h_exact = omega.size() <= cfg.caps.cheeger;
  const bool hbar_exact = omega.size() <= cfg.caps.dual_cheeger;
  if (h_exact && hbar_exact) {
    CheegerPairReport pair = verify_cheeger_pair(in.graph(), omega, cfg.caps);
    rep.update(to_json(pair));
    int code = pair.all_hold() ? kOk : kViolation;
    emit(cfg, rep);
    return code;
  }
  // flagged one-sided heuristics above the caps
  IsoperimetricResult h =
      h_exact ? cheeger_exact(in.graph(), omega, cfg.caps) : cheeger_bound(in.graph(), omega);
  IsoperimetricResult hb = hbar_exact ? dual_cheeger_exact(in.graph(), omega, cfg.caps)
                                      : dual_cheeger_bound(in.graph(), omega);
  rep["h"] = to_json(h);
  rep["h"]["sidedness"] = h_exact ? "exact" : "certified_upper";
  rep["hbar"] = to_json(hb);
  rep["hbar"]["sidedness"] = hbar_exact ? "exact" : "certified_lower";
  return emit(cfg, rep);
}

int cmd_compare(const RunConfig& cfg) {
  Input in = load_input(cfg);
  int x0 = in.family ? in.family->base_vertex() : 0;
  int radius = 3;
  if (!cfg.omega.empty()) {
    if (cfg.omega.rfind("ball:", 0) != 0)
      throw std::invalid_argument("compare expects --omega ball:<x0>,<r>");
    auto comma = cfg.omega.find(',');
    std::string center = cfg.omega.substr(5, comma - 5);
    if (!(center == "base" && in.family)) x0 = std::stoi(center);
    radius = std::stoi(cfg.omega.substr(comma + 1));
  }
  if (in.family) in.family->require_safe(ball(in.graph(), x0, radius));
  ComparisonReport rep = comparison_bounds(in.graph(), x0, radius, cfg.caps);
  Json j{{"config", config_json(cfg)}};
  j.update(to_json(rep));
  emit(cfg, j);
  return rep.all_hold() ? kOk : kViolation;
}

int cmd_sweep(const RunConfig& cfg) {
  Input in = load_input(cfg);
  if (!in.family) throw std::invalid_argument("sweep needs a family input");
  Json j{{"config", config_json(cfg)}, {"manifest", family_manifest(*in.family)}};
  if (in.family->name() == "selfloop_chain") {
    Json traces = Json::array();
    for (int deleted = 1; deleted <= std::min(cfg.k_max, 8); ++deleted) {
      VertexSet omega = VertexSet::range(deleted + 1,
                                         std::min(deleted + 1 + 8, in.family->safe_radius()));
      traces.push_back(to_json(trace_bound_check(*in.family, deleted, omega)));
    }
    j["trace_bounds"] = traces;
  }
  if (cfg.at_infinity) {
    InfinityConstants inf = infinity_constants(*in.family, cfg.k_max, cfg.caps);
    j["infinity"] = to_json(inf);
    emit(cfg, j, infinity_csv(inf));
    return kOk;
  }
  ExhaustionReport rep = exhaustion_limits(*in.family, cfg.n_max, cfg.caps);
  j["exhaustion"] = to_json(rep);
  j["spectrum_bounds"] = to_json(spectrum_bounds_from_isoperimetry(rep, *in.family));
  if (cfg.eps0) j["volume_growth"] = to_json(volume_growth_check(
      *in.family, std::min(cfg.n_max, in.family->safe_radius()), cfg.eps0));
  bool monotone_ok = rep.lambda1_nonincreasing && rep.lambda_max_nondecreasing &&
                     rep.h_nonincreasing && rep.hbar_nondecreasing;
  emit(cfg, j, exhaustion_csv(rep));
  return monotone_ok ? kOk : kViolation;
}

int cmd_verify(const RunConfig& cfg) {
  SuiteReport report = run_verification_suite(cfg.seed, cfg.caps, true);
  Json j{{"config", config_json(cfg)}};
  j.update(to_json(report));
  emit(cfg, j);
  return report.all_pass ? kOk : kViolation;
}

}  // namespace

int run_command(const RunConfig& cfg) {
  try {
    if (!cfg.caps.within_hard_limits())
      throw std::invalid_argument("requested caps exceed the module hard caps");
    if (cfg.command == "spectrum") return cmd_spectrum(cfg);
    if (cfg.command == "isoperimetry") return cmd_isoperimetry(cfg);
    if (cfg.command == "compare") return cmd_compare(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    std::cerr << "unknown command " << cfg.command << "\n";
    return kInputError;
  } catch (const std::invalid_argument& ex) {
    Json err{{"error", ex.what()}, {"config", config_json(cfg)}};
    std::cerr << err.dump(2) << "\n";
    return kInputError;
  } catch (const std::exception& ex) {
    Json err{{"error", ex.what()}, {"config", config_json(cfg)}};
    std::cerr << err.dump(2) << "\n";
    return kViolation;
  }
}

}  // namespace graphspec::cli
