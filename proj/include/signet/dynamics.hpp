#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signet/sampling.hpp"

namespace signet {

// How a node reacts to its negative in-neighbors:
//   relative: repelled along the relative state, h_i^- = sum_j (s_i - s_j)
//   flip:     attracted to the flipped state,  h_i^- = -sum_j (s_i + s_j)
enum class UpdateModel { relative, flip };

std::string to_string(UpdateModel model);
UpdateModel update_model_from_string(const std::string& name);

struct DynamicsParams {
  double alpha = 0.0;  // weight on the positive recommendation
  double beta = 0.0;   // weight on the negative recommendation
  UpdateModel model = UpdateModel::relative;
};

struct StateVector {
  std::vector<double> values;  // values[i-1] = state of node i
  std::int64_t t = 0;

  int node_count() const { return static_cast<int>(values.size()); }
};

// h_i^+ = -sum over positive in-neighbors j of (s_i - s_j); empty set gives 0.
double positive_recommendation(int i, const StateVector& s, const InteractionGraph& e);

// Sign convention depends on the model (see UpdateModel); empty set gives 0.
double negative_recommendation(int i, const StateVector& s, const InteractionGraph& e,
                               UpdateModel model);

// Synchronous update: every node reads the time-t state and writes
//   s_i(t+1) = s_i(t) + alpha*B*h_i^+ + beta*D*h_i^-.
// Throws NonFiniteStateError when an output entry overflows to inf/nan.
StateVector step(const StateVector& s, const InteractionGraph& e, bool B, bool D,
                 const DynamicsParams& p);

// In-place variant reusing the output buffer; out may not alias s.
void step_into(const StateVector& s, const InteractionGraph& e, bool B, bool D,
               const DynamicsParams& p, StateVector& out);

}  // namespace signet
