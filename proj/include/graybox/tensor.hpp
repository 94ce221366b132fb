#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace graybox::nn {

// Dense float64 array. Image batches use (batch, channel, height, width).
class Tensor {
public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), data_(count_of(shape_), 0.0) {}
  Tensor(std::vector<std::size_t> shape, std::vector<double> data);

  static Tensor scalar(double v) { return Tensor({1}, {v}); }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_[axis]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  std::string shape_string() const;

  // Element access for 4-D image tensors.
  double& at(std::size_t b, std::size_t c, std::size_t y, std::size_t x) {
    return data_[((b * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
  }
  double at(std::size_t b, std::size_t c, std::size_t y, std::size_t x) const {
    return data_[((b * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
  }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
  bool all_finite() const;

  static std::size_t count_of(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (auto e : shape) n *= e;
    return shape.empty() ? 0 : n;
  }

private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

}  // namespace graybox::nn
