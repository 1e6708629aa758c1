#pragma once

#include <cassert>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "pignn/linalg.hpp"
#include "pignn/tensor.hpp"

namespace pignn {

struct TapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Op : std::uint8_t {
  Input, Constant,
  Add, Sub, Mul, Div,
  Neg, Square, Sqrt, Exp, SquarePlus,
  SumAll, SumAxis0, SumAxis1,
  MatMul, Transpose, ConcatCols,
  GatherRows, ScatterRows,
  AddRowVec, MulColVec,
  Solve, Scale, Reshape,
};

/// squareplus activation sp(x) = (x + sqrt(x^2 + b)) / 2 with b = 4, so that
/// sp(0) = 1 and sp(x) -> x for large x. Smooth and strictly positive.
inline constexpr double kSquareplusB = 4.0;

template <typename T>
inline T squareplus_scalar(T x) {
  return (x + sqrt(x * x + T(kSquareplusB))) * T(0.5);
}

// d/dx sp(x) = (1 + x / sqrt(x^2 + b)) / 2
template <typename T>
inline T squareplus_deriv(T x) {
  return (T(1.0) + x / sqrt(x * x + T(kSquareplusB))) * T(0.5);
}

/// Append-only computation tape. Values are computed eagerly as nodes are
/// recorded; a reverse sweep accumulates adjoints. Parent ids are always
/// smaller than the node's own id.
template <typename T>
class TapeT {
 public:
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    int aux = -1;      // index into idx_store_ for gather/scatter
    int aux_n = 0;     // scatter output rows
    double c = 0.0;    // scale constant
    bool grad = false; // participates in differentiation
  };

  int input(TensorT<T> v) { return push_leaf(Op::Input, std::move(v), true); }
  int constant(TensorT<T> v) { return push_leaf(Op::Constant, std::move(v), false); }

  int size() const { return static_cast<int>(nodes_.size()); }
  const TensorT<T>& val(int id) const { return vals_[check_id(id)]; }
  TensorT<T>& mutable_val(int id) { return vals_[check_id(id)]; }

  void clear() {
    nodes_.clear();
    vals_.clear();
    idx_store_.clear();
  }

  int add(int a, int b) { return binary_ew(Op::Add, a, b); }
  int sub(int a, int b) { return binary_ew(Op::Sub, a, b); }
  int mul(int a, int b) { return binary_ew(Op::Mul, a, b); }
  int div(int a, int b) {
    int id = binary_ew(Op::Div, a, b);
    check_finite(id, "div");
    return id;
  }

  int neg(int a) { return unary(Op::Neg, a, [](T x) { return -x; }); }
  int square(int a) { return unary(Op::Square, a, [](T x) { return x * x; }); }
  int sqrt_(int a) {
    int id = unary(Op::Sqrt, a, [](T x) { return sqrt(x); });
    check_finite(id, "sqrt");
    return id;
  }
  int exp_(int a) {
    int id = unary(Op::Exp, a, [](T x) { return exp(x); });
    check_finite(id, "exp");
    return id;
  }
  int squareplus(int a) {
    return unary(Op::SquarePlus, a, [](T x) { return squareplus_scalar(x); });
  }

  int sum_all(int a) {
    const TensorT<T>& x = val(a);
    T s(0.0);
    for (const T& e : x.data) s += e;
    return push(Op::SumAll, a, -1, TensorT<T>::scalar(s));
  }

  // [n,f] -> [f]
  int sum_axis0(int a) {
    const TensorT<T>& x = val(a);
    require(x.rank() == 2, "sum_axis0 expects a matrix");
    TensorT<T> out(Shape{x.shape[1]});
    for (int i = 0; i < x.shape[0]; ++i)
      for (int j = 0; j < x.shape[1]; ++j) out.at(j) += x.at(i, j);
    return push(Op::SumAxis0, a, -1, std::move(out));
  }

  // [n,f] -> [n]
  int sum_axis1(int a) {
    const TensorT<T>& x = val(a);
    require(x.rank() == 2, "sum_axis1 expects a matrix");
    TensorT<T> out(Shape{x.shape[0]});
    for (int i = 0; i < x.shape[0]; ++i) {
      T s(0.0);
      for (int j = 0; j < x.shape[1]; ++j) s += x.at(i, j);
      out.at(i) = s;
    }
    return push(Op::SumAxis1, a, -1, std::move(out));
  }

  int matmul(int a, int b) {
    TensorT<T> out = matmul_plain(val(a), val(b));
    return push(Op::MatMul, a, b, std::move(out));
  }

  int transpose_(int a) {
    return push(Op::Transpose, a, -1, transpose(val(a)));
  }

  int concat_cols(int a, int b) {
    const TensorT<T>& x = val(a);
    const TensorT<T>& y = val(b);
    require(x.rank() == 2 && y.rank() == 2 && x.shape[0] == y.shape[0],
            "concat_cols expects matrices with equal row counts");
    TensorT<T> out(Shape{x.shape[0], x.shape[1] + y.shape[1]});
    for (int i = 0; i < x.shape[0]; ++i) {
      for (int j = 0; j < x.shape[1]; ++j) out.at(i, j) = x.at(i, j);
      for (int j = 0; j < y.shape[1]; ++j) out.at(i, x.shape[1] + j) = y.at(i, j);
    }
    return push(Op::ConcatCols, a, b, std::move(out));
  }

  // rows of a selected by idx; a is [n,f] or [n]
  int gather_rows(int a, const std::vector<int>& idx) {
    const TensorT<T>& x = val(a);
    require(x.rank() >= 1, "gather_rows expects rank >= 1");
    const int f = x.rank() == 2 ? x.shape[1] : 1;
    Shape s = x.rank() == 2 ? Shape{static_cast<int>(idx.size()), f}
                            : Shape{static_cast<int>(idx.size())};
    TensorT<T> out(s);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      require(idx[r] >= 0 && idx[r] < x.rows(), "gather_rows index out of range");
      for (int j = 0; j < f; ++j)
        out.data[r * f + j] = x.data[static_cast<std::size_t>(idx[r]) * f + j];
    }
    int aux = store_idx(idx);
    return push(Op::GatherRows, a, -1, std::move(out), aux);
  }

  // rows of a accumulated into an [n_out, f] result at positions idx
  int scatter_rows(int a, const std::vector<int>& idx, int n_out) {
    const TensorT<T>& x = val(a);
    require(x.rank() == 2 && x.shape[0] == static_cast<int>(idx.size()),
            "scatter_rows: row count must match index count");
    const int f = x.shape[1];
    TensorT<T> out(Shape{n_out, f});
    for (std::size_t r = 0; r < idx.size(); ++r) {
      require(idx[r] >= 0 && idx[r] < n_out, "scatter_rows index out of range");
      for (int j = 0; j < f; ++j)
        out.data[static_cast<std::size_t>(idx[r]) * f + j] += x.data[r * f + j];
    }
    int aux = store_idx(idx);
    return push(Op::ScatterRows, a, -1, std::move(out), aux, n_out);
  }

  // a[n,f] + b[f], broadcast over rows
  int add_rowvec(int a, int b) {
    const TensorT<T>& x = val(a);
    const TensorT<T>& y = val(b);
    require(x.rank() == 2 && y.rank() == 1 && x.shape[1] == y.shape[0],
            "add_rowvec expects [n,f] + [f]");
    TensorT<T> out = x;
    for (int i = 0; i < x.shape[0]; ++i)
      for (int j = 0; j < x.shape[1]; ++j) out.at(i, j) += y.at(j);
    return push(Op::AddRowVec, a, b, std::move(out));
  }

  // a[n,f] * c[n], broadcast over columns
  int mul_colvec(int a, int b) {
    const TensorT<T>& x = val(a);
    const TensorT<T>& y = val(b);
    require(x.rank() == 2 && y.rank() == 1 && x.shape[0] == y.shape[0],
            "mul_colvec expects [n,f] * [n]");
    TensorT<T> out = x;
    for (int i = 0; i < x.shape[0]; ++i)
      for (int j = 0; j < x.shape[1]; ++j) out.at(i, j) *= y.at(i);
    return push(Op::MulColVec, a, b, std::move(out));
  }

  /// Differentiable linear solve, x = a^{-1} b. Backward uses the adjoint
  /// rule for linear systems rather than differentiating the factorization.
  int solve(int a, int b) {
    TensorT<T> rhs = val(b);
    bool vec = rhs.rank() == 1;
    if (vec) rhs.shape = Shape{rhs.shape[0], 1};
    TensorT<T> out = LuFactors<T>::factor(val(a)).solve(rhs);
    if (vec) out.shape = Shape{out.shape[0]};
    int id = push(Op::Solve, a, b, std::move(out));
    check_finite(id, "solve");
    return id;
  }

  int scale(int a, double c) {
    TensorT<T> out = val(a);
    for (T& e : out.data) e *= T(c);
    int id = push(Op::Scale, a, -1, std::move(out));
    nodes_.back().c = c;
    return id;
  }

  int reshape(int a, Shape s) {
    const TensorT<T>& x = val(a);
    require(shape_numel(s) == x.numel(), "reshape must preserve element count");
    TensorT<T> out(std::move(s), x.data);
    return push(Op::Reshape, a, -1, std::move(out));
  }

  /// Reverse sweep from a node. Seed defaults to 1 for scalars. Returns the
  /// adjoint of every node; adjoints of non-differentiable nodes stay empty.
  std::vector<TensorT<T>> backward(int out, const TensorT<T>* seed = nullptr) const {
    check_id(out);
    std::vector<TensorT<T>> adj(nodes_.size());
    if (seed) {
      require(same_shape(seed->shape, vals_[out].shape), "backward seed shape mismatch");
      adj[out] = *seed;
    } else {
      require(vals_[out].is_scalar(), "backward without seed requires scalar output");
      adj[out] = TensorT<T>::scalar(T(1.0));
    }
    for (int id = out; id >= 0; --id) {
      const Node& nd = nodes_[id];
      if (!nd.grad || adj[id].data.empty()) continue;
      backprop_node(id, nd, adj);
    }
    return adj;
  }

  /// Recomputes every node value from the leaves; used to check that replay
  /// reproduces the cached values bit-identically.
  bool replay_matches() const {
    TapeT<T> fresh;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& nd = nodes_[i];
      switch (nd.op) {
        case Op::Input: fresh.input(vals_[i]); break;
        case Op::Constant: fresh.constant(vals_[i]); break;
        case Op::Add: fresh.add(nd.a, nd.b); break;
        case Op::Sub: fresh.sub(nd.a, nd.b); break;
        case Op::Mul: fresh.mul(nd.a, nd.b); break;
        case Op::Div: fresh.div(nd.a, nd.b); break;
        case Op::Neg: fresh.neg(nd.a); break;
        case Op::Square: fresh.square(nd.a); break;
        case Op::Sqrt: fresh.sqrt_(nd.a); break;
        case Op::Exp: fresh.exp_(nd.a); break;
        case Op::SquarePlus: fresh.squareplus(nd.a); break;
        case Op::SumAll: fresh.sum_all(nd.a); break;
        case Op::SumAxis0: fresh.sum_axis0(nd.a); break;
        case Op::SumAxis1: fresh.sum_axis1(nd.a); break;
        case Op::MatMul: fresh.matmul(nd.a, nd.b); break;
        case Op::Transpose: fresh.transpose_(nd.a); break;
        case Op::ConcatCols: fresh.concat_cols(nd.a, nd.b); break;
        case Op::GatherRows: fresh.gather_rows(nd.a, idx_store_[nd.aux]); break;
        case Op::ScatterRows: fresh.scatter_rows(nd.a, idx_store_[nd.aux], nd.aux_n); break;
        case Op::AddRowVec: fresh.add_rowvec(nd.a, nd.b); break;
        case Op::MulColVec: fresh.mul_colvec(nd.a, nd.b); break;
        case Op::Solve: fresh.solve(nd.a, nd.b); break;
        case Op::Scale: fresh.scale(nd.a, nd.c); break;
        case Op::Reshape: fresh.reshape(nd.a, vals_[i].shape); break;
      }
      const auto& got = fresh.val(static_cast<int>(i)).data;
      const auto& want = vals_[i].data;
      for (std::size_t k = 0; k < want.size(); ++k)
        if (std::memcmp(&got[k], &want[k], sizeof(T)) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<TensorT<T>> vals_;
  std::vector<std::vector<int>> idx_store_;

  static void require(bool ok, const char* msg) {
    if (!ok) throw TapeError(msg);
  }

  int check_id(int id) const {
    if (id < 0 || id >= size()) throw TapeError("node id not on tape");
    return id;
  }

  int store_idx(const std::vector<int>& idx) {
    idx_store_.push_back(idx);
    return static_cast<int>(idx_store_.size()) - 1;
  }

  int push_leaf(Op op, TensorT<T> v, bool grad) {
    nodes_.push_back(Node{op, -1, -1, -1, 0, 0.0, grad});
    vals_.push_back(std::move(v));
    return size() - 1;
  }

  int push(Op op, int a, int b, TensorT<T> v, int aux = -1, int aux_n = 0) {
    check_id(a);
    if (b >= 0) check_id(b);
    bool grad = nodes_[a].grad || (b >= 0 && nodes_[b].grad);
    nodes_.push_back(Node{op, a, b, aux, aux_n, 0.0, grad});
    vals_.push_back(std::move(v));
    return size() - 1;
  }

  void check_finite(int id, const char* what) const {
    for (const T& e : vals_[id].data)
      if (!finite_value(e))
        throw TapeError(std::string(what) + " produced a non-finite value");
  }

  template <typename F>
  int unary(Op op, int a, F&& f) {
    TensorT<T> out = val(a);
    for (T& e : out.data) e = f(e);
    return push(op, a, -1, std::move(out));
  }

  // Elementwise with exact-shape match or scalar broadcast on either side.
  int binary_ew(Op op, int a, int b) {
    const TensorT<T>& x = val(a);
    const TensorT<T>& y = val(b);
    const bool xs = x.numel() == 1, ys = y.numel() == 1;
    require(same_shape(x.shape, y.shape) || xs || ys,
            "elementwise shapes must match exactly or broadcast a scalar");
    const TensorT<T>& big = (ys || same_shape(x.shape, y.shape)) ? x : y;
    TensorT<T> out(big.shape);
    const std::int64_t n = out.numel();
    for (std::int64_t i = 0; i < n; ++i) {
      T xv = xs ? x.data[0] : x.data[i];
      T yv = ys ? y.data[0] : y.data[i];
      switch (op) {
        case Op::Add: out.data[i] = xv + yv; break;
        case Op::Sub: out.data[i] = xv - yv; break;
        case Op::Mul: out.data[i] = xv * yv; break;
        case Op::Div: out.data[i] = xv / yv; break;
        default: require(false, "not an elementwise op");
      }
    }
    return push(op, a, b, std::move(out));
  }

  void acc(std::vector<TensorT<T>>& adj, int id, const TensorT<T>& g) const {
    if (!nodes_[id].grad) return;
    if (adj[id].data.empty()) {
      adj[id] = g;
      adj[id].shape = vals_[id].shape;  // reshape-compatible accumulation
      return;
    }
    for (std::size_t i = 0; i < g.data.size(); ++i) adj[id].data[i] += g.data[i];
  }

  // Accumulate a possibly-broadcast adjoint back onto an elementwise operand.
  void acc_ew(std::vector<TensorT<T>>& adj, int id, const TensorT<T>& g) const {
    if (!nodes_[id].grad) return;
    if (vals_[id].numel() == 1 && g.numel() > 1) {
      T s(0.0);
      for (const T& e : g.data) s += e;
      TensorT<T> r(vals_[id].shape);
      r.data[0] = s;
      acc(adj, id, r);
    } else {
      acc(adj, id, g);
    }
  }

  void backprop_node(int id, const Node& nd, std::vector<TensorT<T>>& adj) const {
    const TensorT<T>& g = adj[id];
    switch (nd.op) {
      case Op::Input:
      case Op::Constant:
        break;
      case Op::Add: {
        acc_ew(adj, nd.a, g);
        acc_ew(adj, nd.b, g);
        break;
      }
      case Op::Sub: {
        acc_ew(adj, nd.a, g);
        TensorT<T> gb = g;
        for (T& e : gb.data) e = -e;
        acc_ew(adj, nd.b, gb);
        break;
      }
      case Op::Mul: {
        const TensorT<T>& x = vals_[nd.a];
        const TensorT<T>& y = vals_[nd.b];
        const bool xs = x.numel() == 1, ys = y.numel() == 1;
        TensorT<T> ga(g.shape), gb(g.shape);
        for (std::size_t i = 0; i < g.data.size(); ++i) {
          ga.data[i] = g.data[i] * (ys ? y.data[0] : y.data[i]);
          gb.data[i] = g.data[i] * (xs ? x.data[0] : x.data[i]);
        }
        acc_ew(adj, nd.a, ga);
        acc_ew(adj, nd.b, gb);
        break;
      }
      case Op::Div: {
        const TensorT<T>& x = vals_[nd.a];
        const TensorT<T>& y = vals_[nd.b];
        const bool xs = x.numel() == 1, ys = y.numel() == 1;
        TensorT<T> ga(g.shape), gb(g.shape);
        for (std::size_t i = 0; i < g.data.size(); ++i) {
          T yv = ys ? y.data[0] : y.data[i];
          T xv = xs ? x.data[0] : x.data[i];
          ga.data[i] = g.data[i] / yv;
          gb.data[i] = -g.data[i] * xv / (yv * yv);
        }
        acc_ew(adj, nd.a, ga);
        acc_ew(adj, nd.b, gb);
        break;
      }
      case Op::Neg: {
        TensorT<T> ga = g;
        for (T& e : ga.data) e = -e;
        acc(adj, nd.a, ga);
        break;
      }
      case Op::Square: {
        const TensorT<T>& x = vals_[nd.a];
        TensorT<T> ga(g.shape);
        for (std::size_t i = 0; i < g.data.size(); ++i)
          ga.data[i] = g.data[i] * T(2.0) * x.data[i];
        acc(adj, nd.a, ga);
        break;
      }
      case Op::Sqrt: {
        const TensorT<T>& y = vals_[id];
        TensorT<T> ga(g.shape);
        for (std::size_t i = 0; i < g.data.size(); ++i)
          ga.data[i] = g.data[i] / (T(2.0) * y.data[i]);
        acc(adj, nd.a, ga);
        break;
      }
      case Op::Exp: {
        const TensorT<T>& y = vals_[id];
        TensorT<T> ga(g.shape);
        for (std::size_t i = 0; i < g.data.size(); ++i)
          ga.data[i] = g.data[i] * y.data[i];
        acc(adj, nd.a, ga);
        break;
      }
      case Op::SquarePlus: {
        const TensorT<T>& x = vals_[nd.a];
        TensorT<T> ga(g.shape);
        for (std::size_t i = 0; i < g.data.size(); ++i)
          ga.data[i] = g.data[i] * squareplus_deriv(x.data[i]);
        acc(adj, nd.a, ga);
        break;
      }
      case Op::SumAll: {
        TensorT<T> ga(vals_[nd.a].shape);
        for (T& e : ga.data) e = g.data[0];
        acc(adj, nd.a, ga);
        break;
      }
      case Op::SumAxis0: {
        const TensorT<T>& x = vals_[nd.a];
        TensorT<T> ga(x.shape);
        for (int i = 0; i < x.shape[0]; ++i)
          for (int j = 0; j < x.shape[1]; ++j) ga.at(i, j) = g.at(j);
        acc(adj, nd.a, ga);
        break;
      }
      case Op::SumAxis1: {
        const TensorT<T>& x = vals_[nd.a];
        TensorT<T> ga(x.shape);
        for (int i = 0; i < x.shape[0]; ++i)
          for (int j = 0; j < x.shape[1]; ++j) ga.at(i, j) = g.at(i);
        acc(adj, nd.a, ga);
        break;
      }
      case Op::MatMul: {
        // y = a b  =>  a_adj += g b^T, b_adj += a^T g
        const TensorT<T>& a = vals_[nd.a];
        const TensorT<T>& b = vals_[nd.b];
        if (nodes_[nd.a].grad) acc(adj, nd.a, matmul_plain(g, transpose(b)));
        if (nodes_[nd.b].grad) acc(adj, nd.b, matmul_plain(transpose(a), g));
        break;
      }
      case Op::Transpose: {
        acc(adj, nd.a, transpose(g));
        break;
      }
      case Op::ConcatCols: {
        const TensorT<T>& x = vals_[nd.a];
        const TensorT<T>& y = vals_[nd.b];
        TensorT<T> ga(x.shape), gb(y.shape);
        for (int i = 0; i < x.shape[0]; ++i) {
          for (int j = 0; j < x.shape[1]; ++j) ga.at(i, j) = g.at(i, j);
          for (int j = 0; j < y.shape[1]; ++j) gb.at(i, j) = g.at(i, x.shape[1] + j);
        }
        acc(adj, nd.a, ga);
        acc(adj, nd.b, gb);
        break;
      }
      case Op::GatherRows: {
        const TensorT<T>& x = vals_[nd.a];
        const std::vector<int>& idx = idx_store_[nd.aux];
        const int f = x.rank() == 2 ? x.shape[1] : 1;
        TensorT<T> ga(x.shape);
        for (std::size_t r = 0; r < idx.size(); ++r)
          for (int j = 0; j < f; ++j)
            ga.data[static_cast<std::size_t>(idx[r]) * f + j] += g.data[r * f + j];
        acc(adj, nd.a, ga);
        break;
      }
      case Op::ScatterRows: {
        const TensorT<T>& x = vals_[nd.a];
        const std::vector<int>& idx = idx_store_[nd.aux];
        const int f = x.shape[1];
        TensorT<T> ga(x.shape);
        for (std::size_t r = 0; r < idx.size(); ++r)
          for (int j = 0; j < f; ++j)
            ga.data[r * f + j] = g.data[static_cast<std::size_t>(idx[r]) * f + j];
        acc(adj, nd.a, ga);
        break;
      }
      case Op::AddRowVec: {
        acc(adj, nd.a, g);
        const TensorT<T>& y = vals_[nd.b];
        TensorT<T> gb(y.shape);
        for (int i = 0; i < g.shape[0]; ++i)
          for (int j = 0; j < g.shape[1]; ++j) gb.at(j) += g.at(i, j);
        acc(adj, nd.b, gb);
        break;
      }
      case Op::MulColVec: {
        const TensorT<T>& x = vals_[nd.a];
        const TensorT<T>& c = vals_[nd.b];
        TensorT<T> ga(x.shape), gc(c.shape);
        for (int i = 0; i < x.shape[0]; ++i)
          for (int j = 0; j < x.shape[1]; ++j) {
            ga.at(i, j) = g.at(i, j) * c.at(i);
            gc.at(i) += g.at(i, j) * x.at(i, j);
          }
        acc(adj, nd.a, ga);
        acc(adj, nd.b, gc);
        break;
      }
      case Op::Solve: {
        // x = a^{-1} b: b_adj = a^{-T} g, a_adj -= b_adj x^T
        const TensorT<T>& a = vals_[nd.a];
        TensorT<T> gmat = g;
        if (gmat.rank() == 1) gmat.shape = Shape{gmat.shape[0], 1};
        TensorT<T> badj = LuFactors<T>::factor(transpose(a)).solve(gmat);
        if (nodes_[nd.b].grad) {
          TensorT<T> gb = badj;
          gb.shape = vals_[nd.b].shape;
          acc(adj, nd.b, gb);
        }
        if (nodes_[nd.a].grad) {
          TensorT<T> x = vals_[id];
          if (x.rank() == 1) x.shape = Shape{x.shape[0], 1};
          TensorT<T> ga = matmul_plain(badj, transpose(x));
          for (T& e : ga.data) e = -e;
          acc(adj, nd.a, ga);
        }
        break;
      }
      case Op::Scale: {
        TensorT<T> ga = g;
        for (T& e : ga.data) e *= T(nd.c);
        acc(adj, nd.a, ga);
        break;
      }
      case Op::Reshape: {
        TensorT<T> ga = g;
        ga.shape = vals_[nd.a].shape;
        acc(adj, nd.a, ga);
        break;
      }
    }
  }
};

using Tape = TapeT<double>;

/// Handle pairing a tape with a node id so expressions read naturally.
template <typename T>
struct VarT {
  TapeT<T>* tape = nullptr;
  int id = -1;

  const TensorT<T>& val() const { return tape->val(id); }
};

using Var = VarT<double>;

template <typename T>
VarT<T> make_input(TapeT<T>& tp, TensorT<T> v) { return {&tp, tp.input(std::move(v))}; }
template <typename T>
VarT<T> make_constant(TapeT<T>& tp, TensorT<T> v) { return {&tp, tp.constant(std::move(v))}; }

template <typename T> VarT<T> operator+(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->add(a.id, b.id)}; }
template <typename T> VarT<T> operator-(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->sub(a.id, b.id)}; }
template <typename T> VarT<T> operator*(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->mul(a.id, b.id)}; }
template <typename T> VarT<T> operator/(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->div(a.id, b.id)}; }
template <typename T> VarT<T> operator-(VarT<T> a) { return {a.tape, a.tape->neg(a.id)}; }

template <typename T> VarT<T> square(VarT<T> a) { return {a.tape, a.tape->square(a.id)}; }
template <typename T> VarT<T> vsqrt(VarT<T> a) { return {a.tape, a.tape->sqrt_(a.id)}; }
template <typename T> VarT<T> vexp(VarT<T> a) { return {a.tape, a.tape->exp_(a.id)}; }
template <typename T> VarT<T> squareplus(VarT<T> a) { return {a.tape, a.tape->squareplus(a.id)}; }
template <typename T> VarT<T> sum_all(VarT<T> a) { return {a.tape, a.tape->sum_all(a.id)}; }
template <typename T> VarT<T> sum_axis0(VarT<T> a) { return {a.tape, a.tape->sum_axis0(a.id)}; }
template <typename T> VarT<T> sum_axis1(VarT<T> a) { return {a.tape, a.tape->sum_axis1(a.id)}; }
template <typename T> VarT<T> matmul(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->matmul(a.id, b.id)}; }
template <typename T> VarT<T> transpose(VarT<T> a) { return {a.tape, a.tape->transpose_(a.id)}; }
template <typename T> VarT<T> concat_cols(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->concat_cols(a.id, b.id)}; }
template <typename T> VarT<T> gather_rows(VarT<T> a, const std::vector<int>& idx) { return {a.tape, a.tape->gather_rows(a.id, idx)}; }
template <typename T> VarT<T> scatter_rows(VarT<T> a, const std::vector<int>& idx, int n) { return {a.tape, a.tape->scatter_rows(a.id, idx, n)}; }
template <typename T> VarT<T> add_rowvec(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->add_rowvec(a.id, b.id)}; }
template <typename T> VarT<T> mul_colvec(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->mul_colvec(a.id, b.id)}; }
template <typename T> VarT<T> solve(VarT<T> a, VarT<T> b) { return {a.tape, a.tape->solve(a.id, b.id)}; }
template <typename T> VarT<T> scale(VarT<T> a, double c) { return {a.tape, a.tape->scale(a.id, c)}; }
template <typename T> VarT<T> reshape(VarT<T> a, Shape s) { return {a.tape, a.tape->reshape(a.id, std::move(s))}; }

} // namespace pignn
