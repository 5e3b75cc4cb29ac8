#include "indcount/big_count.hpp"

#include <cmath>
#include <numbers>

namespace indcount {

BigCount::BigCount(std::uint64_t value) {
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

BigCount BigCount::power_of_two(std::uint64_t exponent) {
  mpz_class v;
  mpz_setbit(v.get_mpz_t(), exponent);
  return BigCount(std::move(v));
}

LogValue to_log(const mpz_class& c) {
  if (sgn(c) <= 0) return LogValue::negative_infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, c.get_mpz_t());
  return {std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2};
}

LogValue to_log(const BigCount& c) { return to_log(c.value()); }

}  // namespace indcount
