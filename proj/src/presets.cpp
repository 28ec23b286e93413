#include <utility>

#include "signet/errors.hpp"
#include "signet/harness.hpp"

namespace signet {

namespace {

Arc arc(int tail, int head, Sign sign) { return Arc{tail, head, sign}; }

// Two positive 3-cycles {1,2,3} and {4,5,6} bridged by a few negative arcs.
SignedDigraph two_cycle_graph() {
  return SignedDigraph(6, {
                              arc(1, 2, Sign::positive),
                              arc(2, 3, Sign::positive),
                              arc(3, 1, Sign::positive),
                              arc(4, 5, Sign::positive),
                              arc(5, 6, Sign::positive),
                              arc(6, 4, Sign::positive),
                              arc(1, 4, Sign::negative),
                              arc(4, 1, Sign::negative),
                              arc(2, 5, Sign::negative),
                              arc(5, 2, Sign::negative),
                          });
}

// Two positive 3-cliques with the full bipartite negative pattern (both
// directions) between them.
SignedDigraph two_clique_graph() {
  std::vector<Arc> arcs;
  for (int base : {0, 3}) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i != j) arcs.push_back(arc(base + i, base + j, Sign::positive));
      }
    }
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 4; j <= 6; ++j) {
      arcs.push_back(arc(i, j, Sign::negative));
      arcs.push_back(arc(j, i, Sign::negative));
    }
  }
  return SignedDigraph(6, std::move(arcs));
}

// Out-star of positive arcs plus two negative arcs among the leaves.
SignedDigraph star_graph() {
  return SignedDigraph(5, {
                              arc(1, 2, Sign::positive),
                              arc(1, 3, Sign::positive),
                              arc(1, 4, Sign::positive),
                              arc(1, 5, Sign::positive),
                              arc(3, 2, Sign::negative),
                              arc(5, 4, Sign::negative),
                          });
}

// Negative directed path 1->2->3->4->5 (weakly connecting all nodes) and a
// positive directed cycle on the reversed pairs.
SignedDigraph negative_chain_graph() {
  return SignedDigraph(5, {
                              arc(1, 2, Sign::negative),
                              arc(2, 3, Sign::negative),
                              arc(3, 4, Sign::negative),
                              arc(4, 5, Sign::negative),
                              arc(2, 1, Sign::positive),
                              arc(3, 2, Sign::positive),
                              arc(4, 3, Sign::positive),
                              arc(5, 4, Sign::positive),
                              arc(1, 5, Sign::positive),
                          });
}

// Period-2 schedule: slot 0 serves cluster {1,2,3}, slot 1 serves {4,5,6};
// only the length-2 window unions connect each cluster.
std::vector<SignedDigraph> alternating_graphs() {
  SignedDigraph g0(6, {
                          arc(1, 2, Sign::positive),
                          arc(2, 3, Sign::positive),
                          arc(3, 1, Sign::positive),
                          arc(1, 4, Sign::negative),
                      });
  SignedDigraph g1(6, {
                          arc(4, 5, Sign::positive),
                          arc(5, 6, Sign::positive),
                          arc(6, 4, Sign::positive),
                          arc(4, 1, Sign::negative),
                      });
  return {std::move(g0), std::move(g1)};
}

ExperimentConfig make_thm1a() {
  ExperimentConfig cfg(GraphSchedule(GraphSchedule::Mode::fixed, {two_cycle_graph()}, 0.5),
                       AttentionSchedule::constant(0.5), AttentionSchedule::power_decay(0.5, 2.0));
  cfg.name = "thm1a";
  cfg.params = {0.15, 0.5, UpdateModel::relative};
  cfg.horizon = 10'000;
  cfg.trials = 200;
  cfg.seed = 101;
  cfg.stride = 10;
  cfg.initial = {InitialSpec::Kind::uniform, {}, 0.0, 1.0, 1.0};
  cfg.required_assumptions = {1, 3, 9};
  return cfg;
}

ExperimentConfig make_thm1b() {
  ExperimentConfig cfg(GraphSchedule(GraphSchedule::Mode::fixed, {two_clique_graph()}, 0.5),
                       AttentionSchedule::constant(0.5), AttentionSchedule::constant(0.3));
  cfg.name = "thm1b";
  cfg.params = {0.15, 0.5, UpdateModel::relative};
  cfg.horizon = 100'000;  // trials stop at the divergence threshold long before this
  cfg.trials = 200;
  cfg.seed = 202;
  cfg.stride = 1;
  cfg.initial.kind = InitialSpec::Kind::two_block;
  cfg.initial.c0 = 1.0;
  cfg.required_assumptions = {1, 3, 9};
  return cfg;
}

ExperimentConfig make_thm2() {
  // The window contraction/blowup balance x[m]-y[m] in [0,1] forces the
  // negative attention to be minute at this size: y picks up the factor
  // (1+2*beta*(n-1))^K0 while x carries rho_*^K0.
  ExperimentConfig cfg(GraphSchedule(GraphSchedule::Mode::fixed, {star_graph()}, 0.9),
                       AttentionSchedule::constant(0.9), AttentionSchedule::constant(1e-9));
  cfg.name = "thm2";
  cfg.params = {0.2, 0.1, UpdateModel::relative};
  cfg.horizon = 100'000;
  cfg.trials = 200;
  cfg.seed = 303;
  cfg.stride = 100;
  cfg.initial = {InitialSpec::Kind::uniform, {}, 0.0, 1.0, 1.0};
  cfg.required_assumptions = {1, 7};
  return cfg;
}

ExperimentConfig make_thm3() {
  // On this topology divergence is insensitive to the positive-attention mean:
  // 100-trial probes diverge at every constant b up to 0.95 (the repulsion at
  // beta = 1, d = 0.5 dominates the alpha = 0.1 pullback). b = 0.05 keeps the
  // run in the scarce-positive-attention regime the verdict is about.
  ExperimentConfig cfg(GraphSchedule(GraphSchedule::Mode::fixed, {negative_chain_graph()}, 0.5),
                       AttentionSchedule::constant(0.05), AttentionSchedule::constant(0.5));
  cfg.name = "thm3";
  cfg.params = {0.1, 1.0, UpdateModel::relative};
  cfg.horizon = 20'000;
  cfg.trials = 200;
  cfg.seed = 404;
  cfg.stride = 10;
  cfg.initial = {InitialSpec::Kind::uniform, {}, 0.0, 1.0, 1.0};
  cfg.required_assumptions = {1, 6, 8};
  return cfg;
}

ExperimentConfig make_thm4() {
  ExperimentConfig cfg(
      GraphSchedule(GraphSchedule::Mode::periodic, alternating_graphs(), 0.5),
      AttentionSchedule::constant(0.7), AttentionSchedule::power_decay(0.5, 2.0));
  cfg.name = "thm4";
  cfg.window_k = 2;
  cfg.params = {0.15, 0.5, UpdateModel::relative};
  cfg.horizon = 20'000;
  cfg.trials = 200;
  cfg.seed = 505;
  cfg.stride = 10;
  cfg.initial = {InitialSpec::Kind::uniform, {}, 0.0, 1.0, 1.0};
  cfg.required_assumptions = {1, 3, 9};
  return cfg;
}

ExperimentConfig make_flip_compare() {
  ExperimentConfig cfg = make_thm1b();
  cfg.name = "flip-compare";
  cfg.horizon = 10'000;
  cfg.trials = 50;
  cfg.seed = 606;
  return cfg;
}

}  // namespace

ExperimentConfig preset(const std::string& name) {
  if (name == "thm1a") return make_thm1a();
  if (name == "thm1b") return make_thm1b();
  if (name == "thm2") return make_thm2();
  if (name == "thm3") return make_thm3();
  if (name == "thm4") return make_thm4();
  if (name == "flip-compare") return make_flip_compare();
  throw ConfigError("unknown preset \"" + name + "\"");
}

std::vector<std::string> preset_names() {
  return {"thm1a", "thm1b", "thm2", "thm3", "thm4", "flip-compare"};
}

}  // namespace signet
