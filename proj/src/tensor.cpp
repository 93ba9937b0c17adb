#include "csumm/tensor.hpp"

#include <cmath>
#include <sstream>

namespace csumm {

int shape_numel(const std::vector<int>& shape) {
  long long n = 1;
  for (int d : shape) {
    if (d <= 0) throw shape_error("tensor extent must be positive, got " + std::to_string(d));
    n *= d;
  }
  return static_cast<int>(n);
}

Tensor::Tensor(std::vector<int> s, std::vector<float> d) : shape(std::move(s)), data(std::move(d)) {
  if (shape_numel(shape) != static_cast<int>(data.size())) {
    throw shape_error("tensor data length " + std::to_string(data.size()) +
                      " does not match shape " + shape_str());
  }
}

Tensor Tensor::zeros(std::vector<int> shape) {
  int n = shape_numel(shape);
  return Tensor(std::move(shape), std::vector<float>(static_cast<size_t>(n), 0.0f));
}

Tensor Tensor::full(std::vector<int> shape, float value) {
  int n = shape_numel(shape);
  return Tensor(std::move(shape), std::vector<float>(static_cast<size_t>(n), value));
}

Tensor Tensor::scalar(float value) { return Tensor({1}, {value}); }

bool Tensor::all_finite() const {
  for (float v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << "x";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

void require_shape(const Tensor& t, const std::vector<int>& shape, const char* what) {
  if (t.shape != shape) {
    Tensor want;
    want.shape = shape;
    throw shape_error(std::string(what) + ": expected shape " + want.shape_str() + ", got " +
                      t.shape_str());
  }
}

void require_rank(const Tensor& t, int rank, const char* what) {
  if (t.rank() != rank) {
    throw shape_error(std::string(what) + ": expected rank " + std::to_string(rank) + ", got " +
                      t.shape_str());
  }
}

}  // namespace csumm
