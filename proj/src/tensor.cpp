#include "graybox/tensor.hpp"

#include <cmath>
#include <sstream>

#include "graybox/error.hpp"

namespace graybox::nn {

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != count_of(shape_))
    throw Error("ShapeMismatch", "data length " + std::to_string(data_.size()) +
                                     " does not match shape " + shape_string());
}

std::string Tensor::shape_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << 'x';
    os << shape_[i];
  }
  os << ')';
  return os.str();
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace graybox::nn
