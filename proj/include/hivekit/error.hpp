#pragma once

#include <stdexcept>
#include <string>

namespace hivekit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input, mismatched rings, violated preconditions.
struct InputError : Error {
  using Error::Error;
};

// Enumeration refused because the predicted candidate count exceeds the cap.
struct BudgetError : Error {
  using Error::Error;
};

// The min and max formulas disagree at some hive entry.
struct DualityError : Error {
  std::size_t s, t;
  DualityError(std::size_t s_, std::size_t t_, const std::string& what)
      : Error(what), s(s_), t(t_) {}
};

// A hive or filling failed validation.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace hivekit
