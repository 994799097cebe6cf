#ifndef HIGGS_RATIONAL_HPP
#define HIGGS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace higgs {

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation, which is exactly the
// canonical form we need.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b"; rejects zero denominators and non-digits.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// gcd(a/b, c/d) = gcd(a, c) / lcm(b, d); always non-negative.
Rational rational_gcd(const Rational& a, const Rational& b);

bool is_integer(const Rational& q);
bool is_rational_square(const Rational& q);

}  // namespace higgs

#endif
