#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graybox/keyspace.hpp"
#include "graybox/tensor.hpp"

namespace graybox::baker {

// Discretized Baker-map pixel permutation for an N x N image.
//
// Coordinates are row-major with row 0 at the top, fixed project-wide.
// forward[src] = dst on linear indices in [0, N^2).
//
// Single-iteration rule: the key (n_1..n_m) cuts the image into vertical
// strips of those widths, left to right. Strip i is cut into n_i boxes of
// shape (N/n_i) x n_i, stacked top to bottom. Each box holds exactly N
// pixels and fills one output row: boxes are taken strips left to right,
// boxes within a strip bottom to top, and fill output rows bottom to top.
// Within a box, pixels are read column by column left to right, each column
// bottom to top. The trivial key (N) yields the identity. t iterations
// compose the single-iteration map t times.
struct PixelPermutation {
  int dim = 0;
  keyspace::Key key;
  int iterations = 1;
  std::vector<std::uint32_t> forward;
  std::vector<std::uint32_t> inverse;

  bool identity() const;
};

PixelPermutation build_permutation(const keyspace::Key& key, int iterations);

// Identity permutation (what the trivial key produces); handy for the
// no-encryption pipeline.
PixelPermutation identity_permutation(int dim);

// Applies forward (or inverse) to every channel of every image in a tensor
// whose last two axes are (height, width) with height == width == dim.
// Values move, nothing else changes.
nn::Tensor apply(const PixelPermutation& perm, const nn::Tensor& image);
nn::Tensor invert(const PixelPermutation& perm, const nn::Tensor& image);

// Multiset of cycle lengths of the forward map; lengths sum to N^2.
std::map<int, int> cycle_statistics(const PixelPermutation& perm);

}  // namespace graybox::baker
