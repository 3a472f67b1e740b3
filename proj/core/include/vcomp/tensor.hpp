#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "vcomp/errors.hpp"
#include "vcomp/rng.hpp"

namespace vcomp::nn {

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t e : s) n *= e;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

// Row-major strides, innermost last.
inline std::vector<int64_t> row_strides(const Shape& s) {
  std::vector<int64_t> st(s.size(), 1);
  for (int i = static_cast<int>(s.size()) - 2; i >= 0; --i)
    st[i] = st[i + 1] * s[i + 1];
  return st;
}

// Contiguous row-major storage; grad shares the shape and is allocated on
// first use during backward. Values are immutable once an op has consumed
// the tensor (grad accumulation is the only in-place mutation).
template <class T>
struct TensorImpl {
  Shape shape;
  std::vector<T> value;
  std::vector<T> grad;
  bool requires_grad = false;
  // true when this tensor is (or depends on) a requires_grad leaf
  bool on_tape = false;

  int64_t numel() const { return static_cast<int64_t>(value.size()); }
  T* data() { return value.data(); }
  const T* data() const { return value.data(); }
  void ensure_grad() {
    if (grad.empty()) grad.assign(value.size(), T(0));
  }
};

template <class T>
using Tensor = std::shared_ptr<TensorImpl<T>>;

// Debug-mode guard: when enabled, every primitive scans its output and
// throws instead of silently propagating NaN/Inf.
inline bool& nan_checks() {
  static bool enabled = false;
  return enabled;
}

template <class T>
void check_finite(const Tensor<T>& t, const char* op) {
  if (!nan_checks()) return;
  for (const T& v : t->value)
    if (!std::isfinite(static_cast<double>(v)))
      throw ContractError(std::string(op) + ": non-finite value produced");
}

template <class T>
Tensor<T> make_tensor(Shape shape, bool requires_grad = false) {
  auto t = std::make_shared<TensorImpl<T>>();
  t->value.assign(static_cast<size_t>(shape_numel(shape)), T(0));
  t->shape = std::move(shape);
  t->requires_grad = requires_grad;
  t->on_tape = requires_grad;
  return t;
}

template <class T>
Tensor<T> zeros(Shape shape) {
  return make_tensor<T>(std::move(shape));
}

template <class T>
Tensor<T> full(Shape shape, T v) {
  auto t = make_tensor<T>(std::move(shape));
  std::fill(t->value.begin(), t->value.end(), v);
  return t;
}

template <class T>
Tensor<T> scalar_tensor(T v) {
  auto t = make_tensor<T>({1});
  t->value[0] = v;
  return t;
}

template <class T, class U>
Tensor<T> from_data(Shape shape, const std::vector<U>& data) {
  require(shape_numel(shape) == static_cast<int64_t>(data.size()),
          "from_data: shape " + shape_str(shape) + " does not match buffer of " +
              std::to_string(data.size()));
  auto t = make_tensor<T>(std::move(shape));
  for (size_t i = 0; i < data.size(); ++i) t->value[i] = static_cast<T>(data[i]);
  return t;
}

template <class T>
Tensor<T> randn(Shape shape, Rng& rng, double stddev = 1.0) {
  auto t = make_tensor<T>(std::move(shape));
  for (T& v : t->value) v = static_cast<T>(rng.normal() * stddev);
  return t;
}

template <class T>
Tensor<T> clone(const Tensor<T>& a) {
  auto t = make_tensor<T>(a->shape);
  t->value = a->value;
  return t;
}

}  // namespace vcomp::nn
