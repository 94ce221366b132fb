#include "graybox/bakermap.hpp"

#include "graybox/error.hpp"

namespace graybox::baker {

namespace {

std::vector<std::uint32_t> single_iteration(const keyspace::Key& key) {
  const int n = key.dim;
  std::vector<std::uint32_t> fwd(static_cast<std::size_t>(n) * n);
  int strip_left = 0;
  int box_index = 0;  // strips left->right, boxes within a strip bottom->top
  for (int part : key.parts) {
    const int box_rows = n / part;
    for (int j = part - 1; j >= 0; --j) {
      const int top = j * box_rows;
      const int out_row = n - 1 - box_index;
      int out_col = 0;
      for (int c = strip_left; c < strip_left + part; ++c)
        for (int r = top + box_rows - 1; r >= top; --r)
          fwd[static_cast<std::size_t>(r) * n + c] =
              static_cast<std::uint32_t>(out_row * n + out_col++);
      ++box_index;
    }
    strip_left += part;
  }
  return fwd;
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& outer,
                                   const std::vector<std::uint32_t>& inner) {
  std::vector<std::uint32_t> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

void check_image(const PixelPermutation& perm, const nn::Tensor& image) {
  if (image.rank() < 2)
    throw Error("ShapeMismatch", "expected an image tensor, got rank " + std::to_string(image.rank()));
  const std::size_t h = image.extent(image.rank() - 2);
  const std::size_t w = image.extent(image.rank() - 1);
  if (h != static_cast<std::size_t>(perm.dim) || w != static_cast<std::size_t>(perm.dim))
    throw Error("ShapeMismatch", "image is " + image.shape_string() + ", permutation dim is " +
                                     std::to_string(perm.dim));
}

nn::Tensor gather(const std::vector<std::uint32_t>& map_fwd, int dim, const nn::Tensor& image) {
  nn::Tensor out(image.shape());
  const std::size_t plane = static_cast<std::size_t>(dim) * dim;
  const std::size_t channels = image.size() / plane;
  const double* src = image.data();
  double* dst = out.data();
  for (std::size_t c = 0; c < channels; ++c, src += plane, dst += plane)
    for (std::size_t i = 0; i < plane; ++i) dst[map_fwd[i]] = src[i];
  return out;
}

}  // namespace

bool PixelPermutation::identity() const {
  for (std::size_t i = 0; i < forward.size(); ++i)
    if (forward[i] != i) return false;
  return true;
}

PixelPermutation build_permutation(const keyspace::Key& key, int iterations) {
  if (key.dim < 2 || key.parts.empty())
    throw Error("InvalidKey", "permutation requires a validated key");
  keyspace::validate_key(key.parts, key.dim);
  if (iterations < 1) throw Error("InvalidKey", "iterations must be >= 1");

  PixelPermutation perm;
  perm.dim = key.dim;
  perm.key = key;
  perm.iterations = iterations;

  const auto once = single_iteration(key);
  perm.forward = once;
  for (int t = 1; t < iterations; ++t) perm.forward = compose(once, perm.forward);

  perm.inverse.resize(perm.forward.size());
  for (std::size_t i = 0; i < perm.forward.size(); ++i) perm.inverse[perm.forward[i]] = static_cast<std::uint32_t>(i);
  return perm;
}

PixelPermutation identity_permutation(int dim) {
  return build_permutation(keyspace::Key{{dim}, dim}, 1);
}

nn::Tensor apply(const PixelPermutation& perm, const nn::Tensor& image) {
  check_image(perm, image);
  return gather(perm.forward, perm.dim, image);
}

nn::Tensor invert(const PixelPermutation& perm, const nn::Tensor& image) {
  check_image(perm, image);
  return gather(perm.inverse, perm.dim, image);
}

std::map<int, int> cycle_statistics(const PixelPermutation& perm) {
  std::map<int, int> hist;
  std::vector<bool> seen(perm.forward.size(), false);
  for (std::size_t start = 0; start < perm.forward.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      i = perm.forward[i];
      ++len;
    }
    ++hist[len];
  }
  return hist;
}

}  // namespace graybox::baker
