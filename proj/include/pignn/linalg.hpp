#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pignn/tensor.hpp"

namespace pignn {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// LU factorization with partial pivoting, element type generic. Pivoting
/// compares value parts, so the same code factors Dual/HyperDual matrices.
template <typename T>
struct LuFactors {
  int n = 0;
  std::vector<T> lu;      // row-major n*n, L below diagonal (unit), U on/above
  std::vector<int> perm;  // row permutation applied to the input

  static LuFactors factor(const TensorT<T>& a, double pivot_tol = 1e-12) {
    if (a.rank() != 2 || a.shape[0] != a.shape[1])
      throw TensorError("lu: matrix must be square, got " + shape_str(a.shape));
    LuFactors f;
    f.n = a.shape[0];
    f.lu = a.data;
    f.perm.resize(f.n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    const int n = f.n;
    for (int k = 0; k < n; ++k) {
      int piv = k;
      double best = std::abs(value_of(f.lu[k * n + k]));
      for (int i = k + 1; i < n; ++i) {
        double m = std::abs(value_of(f.lu[i * n + k]));
        if (m > best) { best = m; piv = i; }
      }
      if (best < pivot_tol)
        throw SingularMatrixError("singular matrix in solve (pivot " +
                                  std::to_string(best) + " at column " +
                                  std::to_string(k) + ")");
      if (piv != k) {
        for (int j = 0; j < n; ++j) std::swap(f.lu[k * n + j], f.lu[piv * n + j]);
        std::swap(f.perm[k], f.perm[piv]);
      }
      for (int i = k + 1; i < n; ++i) {
        T m = f.lu[i * n + k] / f.lu[k * n + k];
        f.lu[i * n + k] = m;
        for (int j = k + 1; j < n; ++j) f.lu[i * n + j] -= m * f.lu[k * n + j];
      }
    }
    return f;
  }

  /// Solves A X = B for B with shape [n] or [n,k].
  TensorT<T> solve(const TensorT<T>& b) const {
    const int n = this->n;
    const int k = (b.rank() == 2) ? b.shape[1] : 1;
    if (b.rows() != n)
      throw TensorError("solve: rhs rows " + std::to_string(b.rows()) +
                        " do not match matrix size " + std::to_string(n));
    TensorT<T> x(b.shape);
    for (int col = 0; col < k; ++col) {
      std::vector<T> y(n);
      for (int i = 0; i < n; ++i) {
        T s = b.data[static_cast<std::size_t>(perm[i]) * k + col];
        for (int j = 0; j < i; ++j) s -= lu[i * n + j] * y[j];
        y[i] = s;
      }
      for (int i = n - 1; i >= 0; --i) {
        T s = y[i];
        for (int j = i + 1; j < n; ++j) s -= lu[i * n + j] * x.data[static_cast<std::size_t>(j) * k + col];
        x.data[static_cast<std::size_t>(i) * k + col] = s / lu[i * n + i];
      }
    }
    return x;
  }
};

template <typename T>
TensorT<T> transpose(const TensorT<T>& a) {
  if (a.rank() != 2) throw TensorError("transpose expects rank-2 tensor");
  TensorT<T> out(Shape{a.shape[1], a.shape[0]});
  for (int i = 0; i < a.shape[0]; ++i)
    for (int j = 0; j < a.shape[1]; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

/// Plain numeric solve; the tape has its own differentiable wrapper.
template <typename T>
TensorT<T> lu_solve(const TensorT<T>& a, const TensorT<T>& b) {
  return LuFactors<T>::factor(a).solve(b);
}

template <typename T>
TensorT<T> matmul_plain(const TensorT<T>& a, const TensorT<T>& b) {
  if (a.rank() != 2 || b.rank() != 2 || a.shape[1] != b.shape[0])
    throw TensorError("matmul: inner dimensions mismatch " + shape_str(a.shape) +
                      " x " + shape_str(b.shape));
  const int m = a.shape[0], k = a.shape[1], n = b.shape[1];
  TensorT<T> c(Shape{m, n});
  for (int i = 0; i < m; ++i)
    for (int p = 0; p < k; ++p) {
      const T aip = a.at(i, p);
      for (int j = 0; j < n; ++j) c.at(i, j) += aip * b.at(p, j);
    }
  return c;
}

inline Tensor matvec(const Tensor& a, const Tensor& x) {
  if (a.rank() != 2 || x.rank() != 1 || a.shape[1] != x.shape[0])
    throw TensorError("matvec dimension mismatch");
  Tensor y(Shape{a.shape[0]});
  for (int i = 0; i < a.shape[0]; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.shape[1]; ++j) s += a.at(i, j) * x.at(j);
    y.at(i) = s;
  }
  return y;
}

inline double dot(const Tensor& a, const Tensor& b) {
  if (a.numel() != b.numel()) throw TensorError("dot length mismatch");
  double s = 0.0;
  for (std::int64_t i = 0; i < a.numel(); ++i) s += a.data[i] * b.data[i];
  return s;
}

} // namespace pignn
