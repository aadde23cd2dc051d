#include "sylab/bigint.hpp"

#include <mutex>
#include <vector>

#include "sylab/error.hpp"

namespace sylab {

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) fail(ErrorKind::ParseError, "not an integer: '" + text + "'");
  return out;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ZeroDenominator, "in '" + text + "'");
  return make_rational(num, den);
}

}  // namespace sylab
