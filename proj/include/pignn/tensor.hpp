#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pignn/dual.hpp"

namespace pignn {

struct TensorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Shape = std::vector<int>;

inline std::int64_t shape_numel(const Shape& s) {
  std::int64_t n = 1;
  for (int d : s) {
    if (d < 0) throw TensorError("negative dimension in shape");
    n *= d;
  }
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

/// Dense row-major tensor of rank 0..2. Scalars have shape [], vectors [n],
/// matrices [r,c]. Element type T is double for plain evaluation, Dual or
/// HyperDual when tangents ride along.
template <typename T>
struct TensorT {
  Shape shape;
  std::vector<T> data;

  TensorT() = default;
  explicit TensorT(Shape s) : shape(std::move(s)) {
    data.assign(static_cast<std::size_t>(shape_numel(shape)), T(0.0));
  }
  TensorT(Shape s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
    if (static_cast<std::int64_t>(data.size()) != shape_numel(shape))
      throw TensorError("data length " + std::to_string(data.size()) +
                        " does not match shape " + shape_str(shape));
  }

  static TensorT scalar(T v) { return TensorT(Shape{}, {v}); }
  static TensorT zeros(Shape s) { return TensorT(std::move(s)); }

  std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int rows() const { return rank() >= 1 ? shape[0] : 1; }
  int cols() const { return rank() == 2 ? shape[1] : (rank() == 1 ? 1 : 1); }

  bool is_scalar() const { return shape.empty(); }

  T& at(int i) { return data[static_cast<std::size_t>(i)]; }
  const T& at(int i) const { return data[static_cast<std::size_t>(i)]; }
  T& at(int r, int c) {
    return data[static_cast<std::size_t>(r) * shape[1] + c];
  }
  const T& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * shape[1] + c];
  }

  bool all_finite() const {
    for (const T& x : data)
      if (!finite_value(x)) return false;
    return true;
  }
};

using Tensor = TensorT<double>;

inline bool same_shape(const Shape& a, const Shape& b) { return a == b; }

inline Tensor tensor1(std::initializer_list<double> v) {
  return Tensor(Shape{static_cast<int>(v.size())}, std::vector<double>(v));
}

inline Tensor tensor2(int r, int c, std::initializer_list<double> v) {
  return Tensor(Shape{r, c}, std::vector<double>(v));
}

inline Tensor identity(int n) {
  Tensor m(Shape{n, n});
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

inline double max_abs(const Tensor& a) {
  double m = 0.0;
  for (double x : a.data) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (!same_shape(a.shape, b.shape))
    throw TensorError("max_abs_diff shape mismatch: " + shape_str(a.shape) +
                      " vs " + shape_str(b.shape));
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

inline double norm2(const Tensor& a) {
  double s = 0.0;
  for (double x : a.data) s += x * x;
  return std::sqrt(s);
}

/// Extracts value parts from a tangent-carrying tensor.
template <typename T>
inline Tensor values_of(const TensorT<T>& a) {
  Tensor out(a.shape);
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = value_of(a.data[i]);
  return out;
}

} // namespace pignn
