#include "signet/config_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "signet/errors.hpp"

namespace signet {

namespace {

using nlohmann::json;

Sign sign_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "+") return Sign::positive;
  if (s == "-") return Sign::negative;
  throw ConfigError("arc sign must be \"+\" or \"-\", got \"" + s + "\"");
}

std::vector<Arc> arcs_from_json(const json& list) {
  std::vector<Arc> arcs;
  arcs.reserve(list.size());
  for (const json& entry : list) {
    if (!entry.is_array() || entry.size() != 3)
      throw ConfigError("each arc must be [tail, head, sign]");
    arcs.push_back(Arc{entry[0].get<int>(), entry[1].get<int>(), sign_from_json(entry[2])});
  }
  return arcs;
}

json arcs_to_json(const SignedDigraph& g) {
  json list = json::array();
  for (const Arc& a : g.arcs())
    list.push_back(json::array({a.tail, a.head, std::string(1, to_char(a.sign))}));
  return list;
}

AttentionSchedule attention_from_json(const json& j, const std::string& key) {
  if (!j.is_object()) throw ConfigError("\"" + key + "\" must be an object with a \"kind\"");
  const std::string kind = j.value("kind", "constant");
  if (kind == "constant") return AttentionSchedule::constant(j.value("c", 0.0));
  if (kind == "power-decay")
    return AttentionSchedule::power_decay(j.value("c", 0.0), j.value("gamma", 1.0));
  if (kind == "explicit") {
    return AttentionSchedule::explicit_list(j.value("values", std::vector<double>{}),
                                            j.value("tail", 0.0));
  }
  throw ConfigError("\"" + key + "\".kind must be constant, power-decay, or explicit");
}

json attention_to_json(const AttentionSchedule& a) {
  switch (a.kind()) {
    case AttentionSchedule::Kind::constant:
      return json{{"kind", "constant"}, {"c", a.c()}};
    case AttentionSchedule::Kind::power_decay:
      return json{{"kind", "power-decay"}, {"c", a.c()}, {"gamma", a.gamma()}};
    case AttentionSchedule::Kind::explicit_list:
      return json{{"kind", "explicit"}, {"values", a.values()}, {"tail", a.tail()}};
  }
  throw ConfigError("unhandled attention schedule kind");
}

InitialSpec initial_from_json(const json& j) {
  InitialSpec init;
  if (j.is_null()) return init;  // uniform(0,1)
  const std::string kind = j.value("kind", "uniform");
  if (kind == "uniform") {
    init.kind = InitialSpec::Kind::uniform;
    init.lo = j.value("lo", 0.0);
    init.hi = j.value("hi", 1.0);
  } else if (kind == "explicit") {
    init.kind = InitialSpec::Kind::explicit_values;
    init.values = j.value("values", std::vector<double>{});
  } else if (kind == "two-block") {
    init.kind = InitialSpec::Kind::two_block;
    init.c0 = j.value("c0", 1.0);
  } else {
    throw ConfigError("initial.kind must be uniform, explicit, or two-block");
  }
  return init;
}

json initial_to_json(const InitialSpec& init) {
  switch (init.kind) {
    case InitialSpec::Kind::uniform:
      return json{{"kind", "uniform"}, {"lo", init.lo}, {"hi", init.hi}};
    case InitialSpec::Kind::explicit_values:
      return json{{"kind", "explicit"}, {"values", init.values}};
    case InitialSpec::Kind::two_block:
      return json{{"kind", "two-block"}, {"c0", init.c0}};
  }
  throw ConfigError("unhandled initial state kind");
}

GraphSchedule schedule_from_json(const json& j, int n, const std::filesystem::path& base_dir) {
  if (!j.contains("graph")) throw ConfigError("config needs a \"graph\" object");
  const json& g = j.at("graph");
  const std::string mode_name = g.value("mode", "static");
  GraphSchedule::Mode mode;
  if (mode_name == "static")
    mode = GraphSchedule::Mode::fixed;
  else if (mode_name == "periodic")
    mode = GraphSchedule::Mode::periodic;
  else
    throw ConfigError("graph.mode must be static or periodic");

  std::vector<SignedDigraph> graphs;
  if (g.contains("files")) {
    for (const json& entry : g.at("files")) {
      std::filesystem::path p = entry.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      graphs.push_back(load_signed_digraph(p));
      if (graphs.back().node_count() != n)
        throw ConfigError("graph file " + p.string() + " has a node count different from n");
    }
  } else if (g.contains("graphs")) {
    for (const json& entry : g.at("graphs")) graphs.emplace_back(n, arcs_from_json(entry));
  } else if (g.contains("arcs")) {
    graphs.emplace_back(n, arcs_from_json(g.at("arcs")));
  } else {
    throw ConfigError("graph needs \"arcs\", \"graphs\", or \"files\"");
  }

  if (j.contains("q")) {
    std::map<std::pair<int, int>, double> q;
    for (const json& entry : j.at("q")) {
      if (!entry.is_array() || entry.size() != 3)
        throw ConfigError("each \"q\" entry must be [tail, head, probability]");
      q[{entry[0].get<int>(), entry[1].get<int>()}] = entry[2].get<double>();
    }
    return GraphSchedule(mode, std::move(graphs), std::move(q));
  }
  return GraphSchedule(mode, std::move(graphs), j.value("q_all", 1.0));
}

ClassificationCriteria criteria_from_json(const json& j) {
  ClassificationCriteria crit;
  if (j.is_null()) return crit;
  crit.eps = j.value("eps", crit.eps);
  crit.tail_window = j.value("tail_window", crit.tail_window);
  crit.divergence_threshold = j.value("divergence_threshold", crit.divergence_threshold);
  crit.sep = j.value("sep", crit.sep);
  return crit;
}

template <typename T>
json head_of(const std::vector<T>& v, std::size_t limit = 8) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

json load_config_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
}

ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  try {
    const int n = j.at("n").get<int>();
    ExperimentConfig cfg(schedule_from_json(j, n, base_dir),
                         attention_from_json(j.at("b"), "b"),
                         attention_from_json(j.at("d"), "d"));
    cfg.name = j.value("name", "custom");
    cfg.window_k = j.value("K", 1);
    cfg.params.alpha = j.at("alpha").get<double>();
    cfg.params.beta = j.at("beta").get<double>();
    cfg.params.model = update_model_from_string(j.value("model", "relative"));
    cfg.horizon = j.at("T").get<std::int64_t>();
    cfg.trials = j.value("trials", 1);
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.stride = j.value("stride", std::int64_t{1});
    cfg.initial = initial_from_json(j.contains("initial") ? j.at("initial") : json{});
    cfg.criteria = criteria_from_json(j.contains("criteria") ? j.at("criteria") : json{});
    cfg.required_assumptions = j.value("require", std::vector<int>{});
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

json config_to_json(const ExperimentConfig& cfg) {
  json graph;
  if (cfg.schedule.mode() == GraphSchedule::Mode::fixed) {
    graph = json{{"mode", "static"}, {"arcs", arcs_to_json(cfg.schedule.graphs().front())}};
  } else {
    json list = json::array();
    for (const SignedDigraph& g : cfg.schedule.graphs()) list.push_back(arcs_to_json(g));
    graph = json{{"mode", "periodic"}, {"graphs", std::move(list)}};
  }

  json out{
      {"name", cfg.name},
      {"n", cfg.node_count()},
      {"graph", std::move(graph)},
      {"alpha", cfg.params.alpha},
      {"beta", cfg.params.beta},
      {"model", to_string(cfg.params.model)},
      {"b", attention_to_json(cfg.b)},
      {"d", attention_to_json(cfg.d)},
      {"T", cfg.horizon},
      {"trials", cfg.trials},
      {"seed", cfg.seed},
      {"stride", cfg.stride},
      {"K", cfg.window_k},
      {"initial", initial_to_json(cfg.initial)},
      {"criteria",
       {{"eps", cfg.criteria.eps},
        {"tail_window", cfg.criteria.tail_window},
        {"divergence_threshold", cfg.criteria.divergence_threshold},
        {"sep", cfg.criteria.sep}}},
      {"require", cfg.required_assumptions},
  };
  if (cfg.schedule.uses_global_probability()) {
    out["q_all"] = cfg.schedule.global_probability();
  } else {
    json q = json::array();
    for (const auto& [arc, prob] : cfg.schedule.per_arc_probabilities())
      q.push_back(json::array({arc.first, arc.second, prob}));
    out["q"] = std::move(q);
  }
  return out;
}

void apply_override(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must look like key=value, got \"" + assignment + "\"");
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  std::vector<std::string> path;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    if (dot == std::string::npos) {
      path.push_back(key.substr(start));
      break;
    }
    path.push_back(key.substr(start, dot - start));
    start = dot + 1;
  }
  for (const std::string& part : path)
    if (part.empty()) throw ConfigError("override key has an empty path segment: " + key);
  if (path.size() > 1 && path.front() == "env") path.erase(path.begin());

  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::exception&) {
    parsed = value;  // unquoted strings (e.g. model=flip) pass through as-is
  }

  json* node = &config;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) node = &((*node)[path[i]]);
  (*node)[path.back()] = std::move(parsed);
}

json summary_to_json(const ExperimentSummary& summary, const json& config_echo) {
  json assumptions{
      {"window_k", summary.assumptions.window_k},
      {"p_star", summary.assumptions.p_star},
      {"p_sup", summary.assumptions.p_sup},
      {"cluster_count", summary.assumptions.cluster_count()},
      {"required", summary.required_assumptions},
      {"required_ok", summary.required_ok},
  };
  json flags;
  for (int id = 1; id <= 9; ++id) flags[assumption_name(id)] = summary.assumptions.holds(id);
  assumptions["flags"] = std::move(flags);
  if (summary.assumptions.sign_conflict) {
    assumptions["sign_conflict"] = json::array(
        {summary.assumptions.sign_conflict->first, summary.assumptions.sign_conflict->second});
  }
  if (summary.assumptions.partition) {
    json blocks = json::array();
    for (const auto& block : summary.assumptions.partition->blocks) blocks.push_back(block);
    assumptions["blocks"] = std::move(blocks);
  }

  json verdicts;
  for (int k = 0; k < 5; ++k) {
    const auto& tally = summary.tally[static_cast<std::size_t>(k)];
    verdicts[to_string(static_cast<VerdictKind>(k))] = json{
        {"count", tally.count}, {"frequency", tally.frequency}, {"std_error", tally.std_error}};
  }

  json trial_results = json::array();
  for (const TrialResult& r : summary.trial_results) {
    const VerdictEvidence& ev = r.verdict.evidence;
    json entry{
        {"trial", r.trial_index},
        {"verdict", to_string(r.verdict.kind)},
        {"termination", to_string(r.termination)},
        {"last_t", r.last_t},
        {"final_spread", r.final_spread},
        {"tail",
         {{"start_t", ev.tail_start},
          {"steps", ev.tail_steps},
          {"max_node_oscillation", ev.max_node_oscillation},
          {"spread_max", ev.tail_spread_max},
          {"block_spread_max", ev.tail_block_spread_max},
          {"block_means", ev.block_tail_means},
          {"separation", ev.block_separation},
          {"peak_spread", ev.peak_spread}}},
    };
    if (r.gap.tracked) {
      entry["gap"] = json{{"nondecreasing", r.gap.nondecreasing},
                          {"initial", r.gap.initial},
                          {"final", r.gap.final}};
    }
    trial_results.push_back(std::move(entry));
  }

  json out{
      {"name", summary.name},
      {"seed", summary.seed},
      {"trials", summary.trials},
      {"verdicts", std::move(verdicts)},
      {"assumptions", std::move(assumptions)},
      {"attention",
       {{"b_partial_sum", summary.b_partial_sum},
        {"d_partial_sum", summary.d_partial_sum},
        {"b_summable", summary.b_summable},
        {"d_summable", summary.d_summable}}},
      {"trial_results", std::move(trial_results)},
      {"config", config_echo},
  };
  if (summary.constants) {
    const TheoremConstants& c = *summary.constants;
    out["constants"] = json{
        {"rho_star", c.rho_star},
        {"lambda_star", c.lambda_star},
        {"k0", c.k0},
        {"windows", summary.constants_windows},
        {"x_head", head_of(c.x)},
        {"y_head", head_of(c.y)},
        {"j_head", head_of(c.j)},
        {"w_head", head_of(c.w)},
        {"x_minus_y_in_unit_interval", c.x_minus_y_in_unit_interval()},
        {"min_x_minus_y", c.min_x_minus_y()},
        {"min_j", c.min_j()},
        {"sum_x_minus_y", c.sum_x_minus_y()},
        {"sum_w", c.sum_w()},
        {"first_w_over_j", c.first_w_over_j()},
        {"last_w_over_j", c.last_w_over_j()},
    };
  }
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace signet
