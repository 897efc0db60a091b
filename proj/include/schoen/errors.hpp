#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schoen {

/// A series operation was called outside its domain (log of a series whose
/// constant term is not 1, composition with a non-zero constant term, ...).
class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value that must be an exact integer (a curve count) came out fractional.
class IntegralityError : public std::runtime_error {
 public:
  IntegralityError(std::string what, long index, std::string value = {})
      : std::runtime_error(std::move(what)), index_(index), value_(std::move(value)) {}
  long index() const noexcept { return index_; }
  /// The offending value as p/q, when known.
  const std::string& value() const noexcept { return value_; }

 private:
  long index_;
  std::string value_;
};

/// Two independent computations of the same table disagree.
class RouteMismatchError : public std::runtime_error {
 public:
  RouteMismatchError(std::string what, long index)
      : std::runtime_error(std::move(what)), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace schoen
