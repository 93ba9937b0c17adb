#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csumm/errors.hpp"

namespace csumm {

// Dense row-major float32 array. Shapes are small (rank <= 3 in practice);
// reductions inside kernels accumulate in double, storage stays 32-bit.
struct Tensor {
  std::vector<int> shape;
  std::vector<float> data;

  Tensor() = default;
  Tensor(std::vector<int> s, std::vector<float> d);

  static Tensor zeros(std::vector<int> shape);
  static Tensor full(std::vector<int> shape, float value);
  static Tensor scalar(float value);

  int numel() const { return static_cast<int>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  float& at(int i) { return data[static_cast<size_t>(i)]; }
  float at(int i) const { return data[static_cast<size_t>(i)]; }
  float& at(int i, int j) { return data[static_cast<size_t>(i) * dim(1) + j]; }
  float at(int i, int j) const { return data[static_cast<size_t>(i) * dim(1) + j]; }

  bool all_finite() const;
  std::string shape_str() const;
};

int shape_numel(const std::vector<int>& shape);

void require_shape(const Tensor& t, const std::vector<int>& shape, const char* what);
void require_rank(const Tensor& t, int rank, const char* what);

}  // namespace csumm
