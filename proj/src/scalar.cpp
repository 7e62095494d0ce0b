#include "bott/scalar.hpp"

namespace bott {

std::string_view to_string(CoeffRing ring) {
  switch (ring) {
    case CoeffRing::IntegerZ:
      return "z";
    case CoeffRing::RationalQ:
      return "q";
    case CoeffRing::TwoLocalZ:
      return "z2local";
  }
  return "?";
}

std::optional<CoeffRing> parse_coeff_ring(std::string_view text) {
  if (text == "z") return CoeffRing::IntegerZ;
  if (text == "q") return CoeffRing::RationalQ;
  if (text == "z2local") return CoeffRing::TwoLocalZ;
  return std::nullopt;
}

namespace {

bool is_odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

}  // namespace

bool in_ring(const Rational& value, CoeffRing ring) {
  switch (ring) {
    case CoeffRing::IntegerZ:
      return value.get_den() == 1;
    case CoeffRing::RationalQ:
      return true;
    case CoeffRing::TwoLocalZ:
      return is_odd(value.get_den());
  }
  return false;
}

bool is_even(const Rational& value, CoeffRing ring) {
  if (!in_ring(value, ring)) return false;
  switch (ring) {
    case CoeffRing::RationalQ:
      return true;
    case CoeffRing::IntegerZ:
    case CoeffRing::TwoLocalZ:
      // Denominator is odd in both rings, so 2 | value iff 2 | numerator.
      return !is_odd(value.get_num());
  }
  return false;
}

bool is_unit(const Rational& value, CoeffRing ring) {
  if (!in_ring(value, ring)) return false;
  switch (ring) {
    case CoeffRing::IntegerZ:
      return abs(value.get_num()) == 1;
    case CoeffRing::RationalQ:
      return sgn(value) != 0;
    case CoeffRing::TwoLocalZ:
      return is_odd(value.get_num());
  }
  return false;
}

const Rational& require_in_ring(const Rational& value, CoeffRing ring) {
  if (!in_ring(value, ring)) {
    throw DomainError("coefficient " + to_string(value) + " is not an element of ring " +
                      std::string(to_string(ring)));
  }
  return value;
}

long two_adic_valuation(const Rational& value) {
  if (sgn(value) == 0) throw DomainError("2-adic valuation of zero");
  const auto num = static_cast<long>(mpz_scan1(value.get_num_mpz_t(), 0));
  const auto den = static_cast<long>(mpz_scan1(value.get_den_mpz_t(), 0));
  return num - den;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace bott
