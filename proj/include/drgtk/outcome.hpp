#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace drgtk {

/// Either a value or a failure description (a witness, a reason).
/// Small stand-in for std::expected, which is not available in C++20.
template <typename T, typename E>
class Outcome {
 public:
  Outcome(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Outcome(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw std::logic_error("Outcome::value() on a failure");
    return std::get<0>(data_);
  }
  const E& error() const {
    if (ok()) throw std::logic_error("Outcome::error() on a success");
    return std::get<1>(data_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, E> data_;
};

}  // namespace drgtk
