#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermatk3 {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// Raised when a group closure exceeds its element cap; carries how far it got.
struct ClosureOverflow : Error {
  std::size_t partial_count;
  explicit ClosureOverflow(std::size_t n)
      : Error("group closure exceeded cap after " + std::to_string(n) +
              " elements"),
        partial_count(n) {}
};

struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& what) : Error(what) {}
};

struct UnsupportedRadicand : Error {
  explicit UnsupportedRadicand(const std::string& what) : Error(what) {}
};

struct InfiniteFixedLocus : Error {
  explicit InfiniteFixedLocus(const std::string& what) : Error(what) {}
};

struct CacheError : Error {
  explicit CacheError(const std::string& what) : Error(what) {}
};

}  // namespace fermatk3
