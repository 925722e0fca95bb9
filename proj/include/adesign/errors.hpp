#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adesign {

struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotPrime : ParameterError {
  int value;
  explicit NotPrime(int n) : ParameterError("not prime: " + std::to_string(n)), value(n) {}
};

struct NotPrimePower : ParameterError {
  int value;
  explicit NotPrimePower(int n)
      : ParameterError("not a prime power: " + std::to_string(n)), value(n) {}
};

struct SizeExceeded : ParameterError {
  using ParameterError::ParameterError;
};

struct TooLarge : ParameterError {
  using ParameterError::ParameterError;
};

struct PrescriptionError : ParameterError {
  using ParameterError::ParameterError;
};

// thinning probability out of its working regime; carries the raw value so the
// caller can decide to override
struct RegimeError : std::runtime_error {
  double raw_p;
  int k, t;
  RegimeError(double raw, int k_, int t_)
      : std::runtime_error("outside thinning regime: raw p = " + std::to_string(raw)),
        raw_p(raw), k(k_), t(t_) {}
};

struct RetriesExhausted : std::runtime_error {
  uint64_t attempts;
  explicit RetriesExhausted(uint64_t n)
      : std::runtime_error("no verified family within " + std::to_string(n) + " attempts"),
        attempts(n) {}
};

struct BlockTooSmall : ParameterError {
  int size;
  explicit BlockTooSmall(int u)
      : ParameterError("block of size " + std::to_string(u) + " not larger than k"), size(u) {}
};

}  // namespace adesign
