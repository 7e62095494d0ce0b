#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bott {

using Integer = mpz_class;
using Rational = mpq_class;

/// Scalar ring used for ring arithmetic and for every divisibility question.
///
/// TwoLocalZ is the integers localized at 2: rationals whose reduced
/// denominator is odd. Only 2-divisibility is ever queried in that ring.
enum class CoeffRing { IntegerZ, RationalQ, TwoLocalZ };

/// Raised when a value does not belong to the active coefficient ring or an
/// input violates a structural precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view to_string(CoeffRing ring);

/// Accepts the CLI spellings "z", "q" and "z2local".
std::optional<CoeffRing> parse_coeff_ring(std::string_view text);

bool in_ring(const Rational& value, CoeffRing ring);

/// value / 2 lies in the ring. In RationalQ every value is even.
bool is_even(const Rational& value, CoeffRing ring);

bool is_unit(const Rational& value, CoeffRing ring);

/// Returns value unchanged, throwing DomainError if it is not a ring element.
const Rational& require_in_ring(const Rational& value, CoeffRing ring);

/// 2-adic valuation of a nonzero rational.
long two_adic_valuation(const Rational& value);

std::string to_string(const Rational& value);

}  // namespace bott
