#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace demdetect {

// Dense row-major tensor of 64-bit reals. Rank is dynamic; everything in
// this codebase is rank 1..3.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;

  static Tensor zeros(std::vector<std::size_t> s) {
    Tensor t;
    std::size_t n = 1;
    for (std::size_t d : s) n *= d;
    t.shape = std::move(s);
    t.data.assign(n, 0.0);
    return t;
  }

  static Tensor of(std::vector<std::size_t> s, std::vector<double> values) {
    Tensor t;
    t.shape = std::move(s);
    t.data = std::move(values);
    return t;
  }

  std::size_t rank() const { return shape.size(); }
  std::size_t size() const { return data.size(); }
  std::size_t dim(std::size_t i) const { return shape[i]; }
  bool empty() const { return data.empty(); }

  double& at(std::size_t i) { return data[i]; }
  double at(std::size_t i) const { return data[i]; }

  double& at(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }

  double& at(std::size_t i, std::size_t j, std::size_t k) {
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  double at(std::size_t i, std::size_t j, std::size_t k) const {
    return data[(i * shape[1] + j) * shape[2] + k];
  }

  double* row(std::size_t i) { return data.data() + i * shape[1]; }
  const double* row(std::size_t i) const { return data.data() + i * shape[1]; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  void fill(double v) { std::fill(data.begin(), data.end(), v); }
};

}  // namespace demdetect
