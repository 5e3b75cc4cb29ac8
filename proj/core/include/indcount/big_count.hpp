#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

namespace indcount {

/// Exact non-negative integer count of independent sets.
class BigCount {
 public:
  BigCount() = default;
  explicit BigCount(mpz_class value) : value_(std::move(value)) {}
  explicit BigCount(std::uint64_t value);

  static BigCount power_of_two(std::uint64_t exponent);

  const mpz_class& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

/// Natural logarithm of a count, in nats. ln 0 is represented by -infinity.
struct LogValue {
  double nats = 0.0;

  static LogValue negative_infinity() { return {-std::numeric_limits<double>::infinity()}; }
  bool finite() const noexcept { return nats > -std::numeric_limits<double>::infinity(); }

  friend auto operator<=>(const LogValue&, const LogValue&) = default;
};

/// ln(c) computed from the mantissa/exponent split of the big integer, so the
/// relative error stays near machine precision at any magnitude.
LogValue to_log(const BigCount& c);
LogValue to_log(const mpz_class& c);

}  // namespace indcount
