#pragma once

#include <vector>

#include "csumm/tape.hpp"
#include "csumm/tensor.hpp"

namespace csumm {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Moments live here, aligned one-to-one with the registered parameters.
// Parameters absent from a step's gradient map are treated as zero-gradient.
class AdamState {
 public:
  AdamState(std::vector<Tensor*> params, AdamConfig cfg);

  void step(const GradientMap& grads);
  long long step_count() const { return step_; }
  const std::vector<Tensor*>& params() const { return params_; }
  const AdamConfig& config() const { return cfg_; }

 private:
  std::vector<Tensor*> params_;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
  long long step_ = 0;
  AdamConfig cfg_;
};

void adam_step(AdamState& state, const GradientMap& grads);

}  // namespace csumm
