#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcinv {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work counter shared by a single computation. Units are weight entries
// touched (character products charge |A|*|B|, Freudenthal charges one unit
// per root-string step). Not thread safe; give each task its own.
class ComputeBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 200'000'000;

  explicit ComputeBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t units) {
    used_ += units;
    if (used_ > limit_) {
      throw ResourceLimitError("compute budget exhausted: used " + std::to_string(used_) +
                               " of " + std::to_string(limit_) + " weight entries");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

  static ComputeBudget unlimited() { return ComputeBudget(UINT64_MAX / 2); }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow (add)");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow (mul)");
  return r;
}

}  // namespace mcinv
