#pragma once

#include <stdexcept>
#include <string>

namespace cyclicperm {

/// Input sequence is not a rearrangement of {1..n}.
class NotAPermutation : public std::invalid_argument {
public:
  explicit NotAPermutation(const std::string& what) : std::invalid_argument(what) {}
};

/// Permutation splits into more than one cycle.
class NotCyclic : public std::invalid_argument {
public:
  explicit NotCyclic(const std::string& what) : std::invalid_argument(what) {}
};

/// Arguments fall outside the range an operation is defined on.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Exhaustive search requested beyond its practical size limit.
class LimitExceeded : public std::length_error {
public:
  explicit LimitExceeded(const std::string& what) : std::length_error(what) {}
};

} // namespace cyclicperm
