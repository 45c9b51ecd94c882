#include "padic/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace padic {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  auto check_digits = [&](const std::string& t, bool sign_ok) {
    size_t i = 0;
    if (sign_ok && (t[0] == '+' || t[0] == '-')) i = 1;
    if (i == t.size()) throw std::invalid_argument("malformed rational literal: " + s);
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("malformed rational literal: " + s);
  };
  check_digits(num, true);
  check_digits(den, true);
  boost::multiprecision::mpz_int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  // The two-argument constructor canonicalizes (gcd 1, denominator > 0).
  return Rational(n, d);
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

long long ipow(long long base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<long long>::max() / base)
      throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

}  // namespace padic
