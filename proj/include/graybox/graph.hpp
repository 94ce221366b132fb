#pragma once

#include <functional>
#include <vector>

#include "graybox/bakermap.hpp"
#include "graybox/tensor.hpp"

namespace graybox::nn {

// Reverse-mode autodiff on a build-order tape. A Graph is built fresh per
// forward pass (per minibatch), consumed by one backward() call, then
// discarded. Construction order is topological order, so backward simply
// walks the tape in reverse. Not thread-safe; use one Graph per thread.
class Graph {
public:
  struct Value {
    int id = -1;
    bool valid() const { return id >= 0; }
  };

  // Leaves. Gradients are only accumulated into nodes that require grad
  // (directly or through an input), so frozen weights cost nothing extra.
  Value input(Tensor v, bool requires_grad = true);
  Value constant(Tensor v) { return input(std::move(v), false); }

  // Cross-correlation with zero padding; odd square kernels.
  // x (B,Cin,H,W), w (Cout,Cin,k,k), b (Cout) -> (B,Cout,Ho,Wo),
  // Ho = (H + 2*pad - k)/stride + 1.
  Value conv2d(Value x, Value w, Value b, int stride = 1, int pad = 1);

  Value relu(Value x);
  Value maxpool2(Value x);                    // 2x2 window, stride 2; ties pick the first max
  Value upsample2(Value x);                   // nearest-neighbour x2
  Value concat_channels(Value a, Value b);    // along axis 1
  Value global_avg_pool(Value x);             // (B,C,H,W) -> (B,C)
  Value dense(Value x, Value w, Value b);     // (B,F) @ (F,K) + (K)
  Value add(Value a, Value b);                // same shape

  // Mean cross-entropy over the batch from raw logits (B,K).
  Value softmax_xent(Value logits, std::vector<int> labels);

  // Mean absolute difference; subgradient at zero is zero.
  Value l1_loss(Value a, Value b);

  // Baker-map permutation as a differentiable op; backward routes the
  // gradient through the opposite map.
  Value permute_pixels(Value x, const baker::PixelPermutation& perm, bool inverse);

  // Reverse accumulation from a scalar root (throws NonScalarRoot otherwise).
  void backward(Value root);

  const Tensor& value(Value v) const { return nodes_[v.id].value; }
  const Tensor& grad(Value v) const { return nodes_[v.id].grad; }

private:
  struct Node {
    Tensor value;
    Tensor grad;
    bool requires_grad = false;
    std::function<void(Graph&)> backprop;  // adds into input grads
    std::vector<int> aux;                  // op scratch (argmax indices, labels)
    Tensor cache;                          // op scratch (softmax probabilities)
  };

  Value emit(Tensor value, bool requires_grad, std::function<void(Graph&)> backprop);
  Node& node(Value v) { return nodes_[v.id]; }

  std::vector<Node> nodes_;
};

using Value = Graph::Value;

// Classical momentum SGD: velocity = momentum * velocity + grad;
// param -= lr * velocity. Deterministic, shapes must match.
void sgd_step(Tensor& param, const Tensor& grad, Tensor& velocity, double lr, double momentum);

}  // namespace graybox::nn
