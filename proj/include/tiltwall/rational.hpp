#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

/// Exact arbitrary-precision rational, always kept in canonical reduced
/// form (positive denominator, gcd(num, den) = 1). No floating point is
/// used anywhere in the core computations.
using Rational = mpq_class;
using Integer = mpz_class;

/// Malformed textual input (rationals, character lists, JSON payloads).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A character failed the integrality (lattice membership) check in a
/// context that demands a genuine sheaf class.
class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p", or "p/q" (q > 0 after reduction). Throws ParseError
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

Integer floor_int(const Rational& value);
Integer ceil_int(const Rational& value);

/// Rational lower/upper bounds for sqrt(value), accurate to about 1/64.
/// Used only to pick rational scan lines; never enters exact predicates.
Rational rat_sqrt_lower(const Rational& value);
Rational rat_sqrt_upper(const Rational& value);

}  // namespace tiltwall
