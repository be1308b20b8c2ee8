#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxgenus {

// Malformed input: bad JSON, invalid Coxeter matrix, unknown builtin name.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parabolic subgroup was required to be finite but is not.
class NotFiniteType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |W_J| exceeds the materialization cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string subset, std::string order)
      : std::runtime_error("order over cap: W_" + subset + " has order " +
                           order),
        subset_(std::move(subset)),
        order_(std::move(order)) {}

  const std::string& subset() const noexcept { return subset_; }
  // Decimal string; orders can exceed 64 bits.
  const std::string& order() const noexcept { return order_; }

 private:
  std::string subset_;
  std::string order_;
};

// Polynomial division left a nonzero remainder.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d_k o d_{k+1} != 0 where a chain complex was expected.
class ChainConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dense matrix would exceed kMaxDenseEntries.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxgenus
