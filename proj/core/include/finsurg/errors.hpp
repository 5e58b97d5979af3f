#pragma once

#include <stdexcept>
#include <string>

namespace finsurg {

/// Violation of an internal invariant that should be unreachable on valid
/// input (e.g. a representative-vector count disagreeing with |H1|).
/// Callers map this to a distinct exit code from plain bad input.
class consistency_error : public std::runtime_error {
public:
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded search ran out of budget before finding its target.
class search_exhausted : public std::runtime_error {
public:
  explicit search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finsurg
