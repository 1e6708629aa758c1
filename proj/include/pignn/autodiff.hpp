#pragma once

#include <utility>
#include <vector>

#include "pignn/tape.hpp"

namespace pignn {

/// Reverse sweep from a scalar output node; returns d(output)/d(input) for
/// each requested input, zeros for inputs the output does not depend on.
template <typename T>
std::vector<TensorT<T>> grad(const TapeT<T>& tape, int output,
                             const std::vector<int>& inputs) {
  if (!tape.val(output).is_scalar())
    throw TapeError("grad requires a scalar output node");
  std::vector<TensorT<T>> adj = tape.backward(output);
  std::vector<TensorT<T>> out;
  out.reserve(inputs.size());
  for (int id : inputs) {
    if (adj[id].data.empty())
      out.push_back(TensorT<T>(tape.val(id).shape));
    else
      out.push_back(std::move(adj[id]));
  }
  return out;
}

/// Evaluates a scalar function f of one tensor and returns its gradient.
/// F must be callable as VarT<T> f(TapeT<T>&, VarT<T>) for any element T.
template <typename F>
Tensor gradient_of(F&& f, const Tensor& x) {
  Tape tape;
  Var xin = make_input(tape, x);
  Var y = f(tape, xin);
  return grad(tape, y.id, {xin.id})[0];
}

template <typename F>
double eval_scalar(F&& f, const Tensor& x) {
  Tape tape;
  Var xin = make_input(tape, x);
  Var y = f(tape, xin);
  if (!y.val().is_scalar()) throw TapeError("expected scalar function");
  return y.val().data[0];
}

/// Hessian-vector product via forward-over-reverse: the tangent v rides
/// through both the forward evaluation and the reverse sweep as the dual
/// part, so the gradient's tangent is H v.
template <typename F>
Tensor hvp(F&& f, const Tensor& x, const Tensor& v) {
  if (!same_shape(x.shape, v.shape))
    throw TensorError("hvp: direction shape must match input shape");
  TapeT<Dual> tape;
  TensorT<Dual> xd(x.shape);
  for (std::size_t i = 0; i < x.data.size(); ++i)
    xd.data[i] = Dual(x.data[i], v.data[i]);
  VarT<Dual> xin = make_input(tape, std::move(xd));
  VarT<Dual> y = f(tape, xin);
  if (!y.val().is_scalar()) throw TapeError("hvp requires a scalar function");
  TensorT<Dual> g = grad(tape, y.id, {xin.id})[0];
  Tensor out(x.shape);
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = g.data[i].t;
  return out;
}

inline constexpr int kDenseHessianCap = 128;

/// Dense Hessian assembled column-by-column from hvp calls. Dimension is
/// capped; anything larger signals a misuse of this desk-scale path.
template <typename F>
Tensor dense_hessian(F&& f, const Tensor& x, int cap = kDenseHessianCap) {
  const int d = static_cast<int>(x.numel());
  if (d > cap)
    throw TensorError("dense_hessian: dimension " + std::to_string(d) +
                      " exceeds cap " + std::to_string(cap));
  Tensor h(Shape{d, d});
  Tensor e(x.shape);
  for (int j = 0; j < d; ++j) {
    std::fill(e.data.begin(), e.data.end(), 0.0);
    e.data[j] = 1.0;
    Tensor col = hvp(f, x, e);
    for (int i = 0; i < d; ++i) h.at(i, j) = col.data[i];
  }
  return h;
}

} // namespace pignn
