#include "csumm/adam.hpp"

#include "csumm/errors.hpp"
#include "csumm/kernels.hpp"

namespace csumm {

AdamState::AdamState(std::vector<Tensor*> params, AdamConfig cfg)
    : params_(std::move(params)), cfg_(cfg) {
  if (params_.empty()) throw usage_error("adam: no parameters registered");
  m_.reserve(params_.size());
  v_.reserve(params_.size());
  for (const Tensor* p : params_) {
    if (p == nullptr) throw usage_error("adam: null parameter");
    m_.push_back(Tensor::zeros(p->shape));
    v_.push_back(Tensor::zeros(p->shape));
  }
}

void AdamState::step(const GradientMap& grads) {
  ++step_;
  for (size_t i = 0; i < params_.size(); ++i) {
    Tensor& p = *params_[i];
    const Tensor* g = grads.contains(params_[i]) ? &grads.at(params_[i]) : nullptr;
    if (g != nullptr && !g->same_shape(p)) {
      throw shape_error("adam: gradient shape does not match parameter");
    }
    Tensor zero;
    const float* gdata;
    if (g != nullptr) {
      gdata = g->data.data();
    } else {
      zero = Tensor::zeros(p.shape);
      gdata = zero.data.data();
    }
    kernels::adam_update(p.data.data(), gdata, m_[i].data.data(), v_[i].data.data(), p.numel(),
                         step_, cfg_.lr, cfg_.beta1, cfg_.beta2, cfg_.eps);
  }
}

void adam_step(AdamState& state, const GradientMap& grads) { state.step(grads); }

}  // namespace csumm
