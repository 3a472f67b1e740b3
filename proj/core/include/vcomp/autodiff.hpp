#pragma once

#include <functional>
#include <vector>

#include "vcomp/tensor.hpp"

namespace vcomp::nn {

// Ordered record of primitive applications. Ops append themselves while a
// Recording scope is active on the current thread; backward replays the
// record once, in reverse.
template <class T>
class Tape {
 public:
  struct Node {
    std::function<void()> backward;
  };

  static Tape*& current() {
    thread_local Tape* cur = nullptr;
    return cur;
  }

  void record(std::function<void()> fn) { nodes_.push_back({std::move(fn)}); }
  size_t size() const { return nodes_.size(); }

  void backward_from(const Tensor<T>& loss) {
    require(loss->numel() == 1, "backward: loss must be scalar, got shape " +
                                    shape_str(loss->shape));
    loss->ensure_grad();
    loss->grad[0] = T(1);
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) it->backward();
  }

 private:
  std::vector<Node> nodes_;
};

// RAII scope that makes `tape` the recording target for this thread.
template <class T>
class Recording {
 public:
  explicit Recording(Tape<T>& tape) : prev_(Tape<T>::current()) {
    Tape<T>::current() = &tape;
  }
  ~Recording() { Tape<T>::current() = prev_; }
  Recording(const Recording&) = delete;
  Recording& operator=(const Recording&) = delete;

 private:
  Tape<T>* prev_;
};

template <class T>
void backward(const Tensor<T>& loss) {
  Tape<T>* tape = Tape<T>::current();
  require(tape != nullptr, "backward: no active recording");
  tape->backward_from(loss);
}

// Helpers used by op implementations.

template <class T>
bool tracing(std::initializer_list<Tensor<T>> inputs) {
  if (Tape<T>::current() == nullptr) return false;
  for (const auto& t : inputs)
    if (t && t->on_tape) return true;
  return false;
}

template <class T>
void record_node(Tensor<T> out, std::function<void()> fn) {
  out->on_tape = true;
  Tape<T>::current()->record(std::move(fn));
}

}  // namespace vcomp::nn
