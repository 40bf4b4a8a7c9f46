#include "ultragrowth/big_index.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ultragrowth {

double log_of(const BigIndex& k) {
  if (k <= 0) throw std::domain_error("log_of: index must be positive");
  const std::size_t bits = boost::multiprecision::msb(k) + 1;
  if (bits <= 62) return std::log(static_cast<double>(k.convert_to<long long>()));
  // Keep the top 62 bits as an integer mantissa.
  const std::size_t shift = bits - 62;
  const BigIndex top = k >> shift;
  const double mantissa = static_cast<double>(top.convert_to<long long>());
  return std::log(mantissa) + static_cast<double>(shift) * std::log(2.0);
}

double to_double(const BigIndex& k) {
  if (k == 0) return 0.0;
  const std::size_t bits = boost::multiprecision::msb(k) + 1;
  if (bits > 1023) return std::numeric_limits<double>::infinity();
  return k.convert_to<double>();
}

BigIndex floor_to_index(double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("floor_to_index: argument must be finite and >= 0");
  x = std::floor(x);
  if (x < 9.0e15) return BigIndex(static_cast<long long>(x));
  int exponent = 0;
  const double m = std::frexp(x, &exponent);  // x = m * 2^exponent
  const long long mant = static_cast<long long>(std::ldexp(m, 53));
  BigIndex out(mant);
  out <<= (exponent - 53);
  return out;
}

BigIndex ipow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigIndex(base), exponent);
}

std::string to_string(const BigIndex& k) { return k.str(); }

}  // namespace ultragrowth
