#include "graybox/graph.hpp"

#include <algorithm>
#include <cmath>

#include "graybox/error.hpp"

namespace graybox::nn {

Graph::Value Graph::emit(Tensor value, bool requires_grad, std::function<void(Graph&)> backprop) {
  Node n;
  n.value = std::move(value);
  n.requires_grad = requires_grad;
  if (requires_grad) n.grad = Tensor(n.value.shape());
  n.backprop = std::move(backprop);
  nodes_.push_back(std::move(n));
  return Value{static_cast<int>(nodes_.size()) - 1};
}

Value Graph::input(Tensor v, bool requires_grad) {
  return emit(std::move(v), requires_grad, nullptr);
}

Value Graph::conv2d(Value xv, Value wv, Value bv, int stride, int pad) {
  const Tensor& x = value(xv);
  const Tensor& w = value(wv);
  const Tensor& b = value(bv);
  if (x.rank() != 4 || w.rank() != 4 || b.rank() != 1)
    throw Error("ShapeMismatch", "conv2d expects x(B,C,H,W), w(O,C,k,k), b(O)");
  const std::size_t B = x.extent(0), Cin = x.extent(1), H = x.extent(2), W = x.extent(3);
  const std::size_t Cout = w.extent(0), k = w.extent(2);
  if (w.extent(1) != Cin || w.extent(3) != k || b.extent(0) != Cout)
    throw Error("ShapeMismatch", "conv2d channel/kernel mismatch: x " + x.shape_string() +
                                     " w " + w.shape_string());
  if (k % 2 == 0) throw Error("ShapeMismatch", "conv2d requires an odd kernel");
  const std::size_t Ho = (H + 2 * pad - k) / stride + 1;
  const std::size_t Wo = (W + 2 * pad - k) / stride + 1;

  Tensor out({B, Cout, Ho, Wo});
  const double* xd = x.data();
  const double* wd = w.data();
  double* od = out.data();
  for (std::size_t ib = 0; ib < B; ++ib)
    for (std::size_t co = 0; co < Cout; ++co) {
      double* optr = od + (ib * Cout + co) * Ho * Wo;
      const double bias = b[co];
      for (std::size_t i = 0; i < Ho * Wo; ++i) optr[i] = bias;
      for (std::size_t ci = 0; ci < Cin; ++ci) {
        const double* xptr = xd + (ib * Cin + ci) * H * W;
        const double* wptr = wd + (co * Cin + ci) * k * k;
        for (std::size_t ky = 0; ky < k; ++ky)
          for (std::size_t kx = 0; kx < k; ++kx) {
            const double wk = wptr[ky * k + kx];
            if (wk == 0.0) continue;
            for (std::size_t oy = 0; oy < Ho; ++oy) {
              const long long iy = static_cast<long long>(oy L) * stride + ky - pad;
              if (iy < 0 || iy >= static_cast<long long>(H)) continue;
              const double* xrow = xptr + iy * W;
              double* orow = optr + oy * Wo;
              for (std::size_t ox = 0; ox < Wo; ++ox) {
                const long long ix = static_cast<long long>(ox) * stride + kx - pad;
                if (ix < 0 || ix >= static_cast<long long>(W)) continue;
                orow[ox] += wk * xrow[ix];
              }
            }
          }
      }
    }

  const bool rg = node(xv).requires_grad || node(wv).requires_grad || node(bv).requires_grad;
  const int sstride = stride, spad = pad;
  return emit(std::move(out), rg, [=](Graph& g) {
    const Tensor& go = g.nodes_.back_grad_;  // placeholder, replaced below
    (void)go;
    (void)g;
    (void)sstride;
    (void)spad;
  });
}

void Graph::backward(Value root) { (void)root; }

void sgd_step(Tensor& param, const Tensor& grad, Tensor& velocity, double lr, double momentum) {
  if (!param.same_shape(grad) || !param.same_shape(velocity))
    throw Error("ShapeMismatch", "sgd_step shapes differ");
  for (std::size_t i = 0; i < param.size(); ++i) {
    velocity[i] = momentum * velocity[i] + grad[i];
    param[i] -= lr * velocity[i];
  }
}

}  // namespace graybox::nn
