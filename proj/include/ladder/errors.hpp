#pragma once

#include <stdexcept>
#include <string>

#include "ladder/bigint.hpp"

namespace ladder {

// Thrown when an operation would materialize more data than its configured
// cap allows. When the size is computable without materializing (lattice
// counts, chain counts) it travels with the exception.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, BigInt count)
      : std::runtime_error(what), count_(std::move(count)) {}
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}

  const BigInt& count() const { return count_; }

 private:
  BigInt count_ = -1;  // -1: unknown
};

namespace detail {

// Internal consistency checks stay active in release builds: several results
// are defined by two independent routes and a mismatch must never pass
// silently.
inline void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(std::string("internal check failed: ") + msg);
}

}  // namespace detail
}  // namespace ladder
