#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spliceidx {

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what)
      : std::overflow_error(what) {}
};

using IndexValue = std::uint64_t;

inline IndexValue checked_add(IndexValue a, IndexValue b,
                              const char* context = "index sum") {
  IndexValue r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::string("64-bit overflow in ") + context);
  }
  return r;
}

inline IndexValue checked_mul(IndexValue a, IndexValue b,
                              const char* context = "index product") {
  IndexValue r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string("64-bit overflow in ") + context);
  }
  return r;
}

}  // namespace spliceidx
