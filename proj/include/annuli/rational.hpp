#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace annuli {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Round-toward-minus-infinity division, den != 0.
Int floor_div(const Int& num, const Int& den);
Int floor_rat(const Rat& x);

// base^e for e >= 0. Throws std::domain_error beyond the sanity cap (2^20).
Int pow_int(const Int& base, const Int& e);

// Largest r >= 0 with r^k <= x. Requires x >= 0, k >= 1.
Int nth_root_floor(const Int& x, unsigned k);
std::optional<Int> exact_nth_root(const Int& x, unsigned k);

// base^exp as an exact rational when one exists: integer exp, or base a
// perfect power matching exp's denominator. base must be > 0.
std::optional<Rat> exact_pow(const Rat& base, const Rat& exp);

struct RatInterval {
  Rat lo;
  Rat hi;

  RatInterval() = default;
  explicit RatInterval(const Rat& exact) : lo(exact), hi(exact) {}
  RatInterval(const Rat& lo_, const Rat& hi_);

  bool is_exact() const { return lo == hi; }
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

RatInterval interval_add(const RatInterval& a, const RatInterval& b);
RatInterval interval_sub(const RatInterval& a, const RatInterval& b);
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);
RatInterval interval_scale(const Rat& c, const RatInterval& a);

// Encloses base^exp, base > 0. Exact rational values collapse to lo == hi;
// otherwise the bound endpoints are dyadic with around `bits` significant
// bits (directed rounding, so lo <= base^exp <= hi always holds).
RatInterval pow_bracket(const Rat& base, const Rat& exp, unsigned bits = 96);

// Parse "3", "-7/64", "1.5". No exponent notation. Fraction denominators are
// unbounded; use parse_rat_limited for user-facing knobs.
Rat parse_rat(const std::string& s);
// Same grammar, but rejects inputs whose reduced denominator exceeds max_den.
Rat parse_rat_limited(const std::string& s, const Int& max_den);

std::string to_fraction_string(const Rat& x);  // "num/den", or "num" when den == 1
std::string to_decimal_string(const Rat& x, int significant = 12);
double to_double(const Rat& x);

}  // namespace annuli
