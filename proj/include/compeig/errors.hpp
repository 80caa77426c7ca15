#pragma once

#include <stdexcept>
#include <string>

namespace compeig {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidIndexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidPermutationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct HermiticityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MultiplicityMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace compeig
