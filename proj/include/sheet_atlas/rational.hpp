#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sheet_atlas {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an operation is called outside its domain. The CLI maps this
/// to exit status 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical "p/q" form, always with an explicit denominator ("3/1", "0/1").
std::string to_fraction_string(const Rational& q);

/// Short form for human-readable output ("3", "-1/4").
std::string to_short_string(const Rational& q);

/// Accepts "p", "p/q", with optional sign. Throws DomainError on malformed
/// input or zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

}  // namespace sheet_atlas
