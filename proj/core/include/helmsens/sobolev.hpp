#ifndef HELMSENS_SOBOLEV_HPP
#define HELMSENS_SOBOLEV_HPP

#include <cstdint>
#include <string>

#include "helmsens/errors.hpp"

namespace helmsens {

// Exact smoothness exponent. All indices of interest live in (1/2)Z, so the
// value is stored as twice its rational value in an integer, plus a +inf
// sentinel. Arithmetic never touches floating point.
class SobolevIndex {
public:
  constexpr SobolevIndex() : twice_(0), inf_(false) {}

  static constexpr SobolevIndex infinity() {
    SobolevIndex s;
    s.inf_ = true;
    return s;
  }
  static constexpr SobolevIndex integer(std::int64_t n) {
    return SobolevIndex(2 * n);
  }
  static constexpr SobolevIndex half(std::int64_t twice_value) {
    return SobolevIndex(twice_value);
  }

  // Parses "3/2", "-1/2", "2", "inf".
  static SobolevIndex parse(const std::string& text);

  bool is_infinite() const { return inf_; }
  bool is_integer() const { return inf_ || twice_ % 2 == 0; }
  // Twice the value; only meaningful for finite indices.
  std::int64_t twice() const { return twice_; }
  double as_double() const;

  std::string str() const;  // "3/2", "-1/2", "2", "inf"

  friend bool operator==(const SobolevIndex& a, const SobolevIndex& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.twice_ == b.twice_);
  }
  friend bool operator!=(const SobolevIndex& a, const SobolevIndex& b) {
    return !(a == b);
  }
  friend bool operator<(const SobolevIndex& a, const SobolevIndex& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.twice_ < b.twice_;
  }
  friend bool operator<=(const SobolevIndex& a, const SobolevIndex& b) {
    return a < b || a == b;
  }
  friend bool operator>(const SobolevIndex& a, const SobolevIndex& b) {
    return b < a;
  }
  friend bool operator>=(const SobolevIndex& a, const SobolevIndex& b) {
    return b <= a;
  }

  friend SobolevIndex operator+(const SobolevIndex& a, const SobolevIndex& b) {
    if (a.inf_ || b.inf_) return infinity();
    return SobolevIndex(a.twice_ + b.twice_);
  }
  friend SobolevIndex operator-(const SobolevIndex& a, const SobolevIndex& b) {
    if (a.inf_) return infinity();
    return SobolevIndex(a.twice_ - b.twice_);
  }

  friend SobolevIndex min(const SobolevIndex& a, const SobolevIndex& b) {
    return a < b ? a : b;
  }
  friend SobolevIndex min(const SobolevIndex& a, const SobolevIndex& b,
                          const SobolevIndex& c) {
    return min(min(a, b), c);
  }

private:
  explicit constexpr SobolevIndex(std::int64_t twice)
      : twice_(twice), inf_(false) {}

  std::int64_t twice_;
  bool inf_;
};

inline SobolevIndex operator""_idx(unsigned long long n) {
  return SobolevIndex::integer(static_cast<std::int64_t>(n));
}

}  // namespace helmsens

#endif
