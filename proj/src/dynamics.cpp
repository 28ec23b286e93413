#include "signet/dynamics.hpp"

#include <cmath>

#include "signet/errors.hpp"

namespace signet {

std::string to_string(UpdateModel model) {
  return model == UpdateModel::relative ? "relative" : "flip";
}

UpdateModel update_model_from_string(const std::string& name) {
  if (name == "relative") return UpdateModel::relative;
  if (name == "flip") return UpdateModel::flip;
  throw ConfigError("unknown update model \"" + name + "\" (expected relative or flip)");
}

double positive_recommendation(int i, const StateVector& s, const InteractionGraph& e) {
  const double si = s.values[static_cast<std::size_t>(i - 1)];
  double sum = 0.0;
  for (int j : e.pos_in[static_cast<std::size_t>(i - 1)])
    sum -= si - s.values[static_cast<std::size_t>(j - 1)];
  return sum;
}

double negative_recommendation(int i, const StateVector& s, const InteractionGraph& e,
                               UpdateModel model) {
  const double si = s.values[static_cast<std::size_t>(i - 1)];
  double sum = 0.0;
  if (model == UpdateModel::relative) {
    for (int j : e.neg_in[static_cast<std::size_t>(i - 1)])
      sum += si - s.values[static_cast<std::size_t>(j - 1)];
  } else {
    for (int j : e.neg_in[static_cast<std::size_t>(i - 1)])
      sum -= si + s.values[static_cast<std::size_t>(j - 1)];
  }
  return sum;
}

void step_into(const StateVector& s, const InteractionGraph& e, bool B, bool D,
               const DynamicsParams& p, StateVector& out) {
  const int n = s.node_count();
  out.values.resize(static_cast<std::size_t>(n));
  out.t = s.t + 1;
  for (int i = 1; i <= n; ++i) {
    double next = s.values[static_cast<std::size_t>(i - 1)];
    // Inactive attention bits skip their whole term, so (for example) a run
    // that never draws D=1 evaluates identically under both models.
    if (B) next += p.alpha * positive_recommendation(i, s, e);
    if (D) next += p.beta * negative_recommendation(i, s, e, p.model);
    if (!std::isfinite(next)) throw NonFiniteStateError(s.t);
    out.values[static_cast<std::size_t>(i - 1)] = next;
  }
}

StateVector step(const StateVector& s, const InteractionGraph& e, bool B, bool D,
                 const DynamicsParams& p) {
  StateVector out;
  step_into(s, e, B, D, p, out);
  return out;
}

}  // namespace signet
