#include "annuli/rational.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace annuli {

namespace {

constexpr unsigned kMaxIntExponent = 1u << 20;

}  // namespace

Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("floor_div: zero divisor");
  Int q = num / den;
  Int r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Int floor_rat(const Rat& x) {
  return floor_div(numerator(x), denominator(x));
}

Int pow_int(const Int& base, const Int& e) {
  if (e < 0) throw std::domain_error("pow_int: negative exponent");
  if (e > kMaxIntExponent) throw std::domain_error("pow_int: exponent too large");
  return boost::multiprecision::pow(base, e.convert_to<unsigned>());
}

Int nth_root_floor(const Int& x, unsigned k) {
  if (x < 0) throw std::domain_error("nth_root_floor: negative radicand");
  if (k == 0) throw std::domain_error("nth_root_floor: zeroth root");
  if (x == 0 || x == 1 || k == 1) return x;
  unsigned bits = boost::multiprecision::msb(x) + 1;
  if (k >= bits) return 1;
  // Newton iteration from an over-estimate; converges monotonically down.
  Int r = Int(1) << (bits / k + 1);
  while (true) {
    Int next = ((k - 1) * r + x / pow_int(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (pow_int(r, k) > x) --r;
  while (pow_int(r + 1, k) <= x) ++r;
  return r;
}

std::optional<Int> exact_nth_root(const Int& x, unsigned k) {
  Int r = nth_root_floor(x, k);
  if (pow_int(r, k) == x) return r;
  return std::nullopt;
}

std::optional<Rat> exact_pow(const Rat& base, const Rat& exp) {
  if (base <= 0) throw std::domain_error("exact_pow: base must be positive");
  if (exp == 0 || base == 1) return Rat(1);
  Int a = numerator(exp);
  Int b = denominator(exp);
  Rat root = base;
  if (b != 1) {
    if (b > kMaxIntExponent) return std::nullopt;
    unsigned k = b.convert_to<unsigned>();
    auto rn = exact_nth_root(numerator(base), k);
    if (!rn) return std::nullopt;
    auto rd = exact_nth_root(denominator(base), k);
    if (!rd) return std::nullopt;
    root = Rat(*rn, *rd);
  }
  bool neg = a < 0;
  Int mag = neg ? Int(-a) : a;
  Rat out(pow_int(numerator(root), mag), pow_int(denominator(root), mag));
  if (neg) out = 1 / out;
  return out;
}

RatInterval::RatInterval(const Rat& lo_, const Rat& hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval interval_add(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval interval_sub(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = p1, hi = p1;
  for (const Rat* p : {&p2, &p3, &p4}) {
    if (*p < lo) lo = *p;
    if (*p > hi) hi = *p;
  }
  return RatInterval(lo, hi);
}

RatInterval interval_scale(const Rat& c, const RatInterval& a) {
  if (c >= 0) return RatInterval(c * a.lo, c * a.hi);
  return RatInterval(c * a.hi, c * a.lo);
}

namespace {

void mpz_from_int(mpz_t out, const Int& v) {
  // Hex round-trip; exact and fast enough for the sizes seen here.
  bool neg = v < 0;
  Int mag = neg ? Int(-v) : v;
  mpz_set_str(out, mag.str(0, std::ios_base::hex).c_str(), 16);
  if (neg) mpz_neg(out, out);
}

Rat rat_from_mpfr(mpfr_t v) {
  if (mpfr_zero_p(v)) return Rat(0);
  mpz_t z;
  mpz_init(z);
  mpfr_exp_t e = mpfr_get_z_2exp(z, v);
  Int mant;
  {
    char* s = mpz_get_str(nullptr, 16, z);
    mant = Int(std::string("0x") + (s[0] == '-' ? s + 1 : s));
    if (s[0] == '-') mant = -mant;
    free(s);
  }
  mpz_clear(z);
  if (e >= 0) return Rat(mant * pow_int(2, Int(e)));
  return Rat(mant, pow_int(2, Int(-static_cast<long long>(e))));
}

// One directed evaluation of base^exp. round_down selects the side.
Rat mpfr_pow_directed(const Rat& base, const Rat& exp, unsigned prec, bool round_down) {
  mpfr_rnd_t final_rnd = round_down ? MPFR_RNDD : MPFR_RNDU;
  // base > 1: pow increasing in exponent; base < 1: decreasing. base == 1 is
  // handled by the caller. Likewise pow is increasing in base iff exp > 0.
  bool base_gt1 = base > 1;
  bool exp_pos = exp > 0;
  mpfr_rnd_t exp_rnd = (round_down == base_gt1) ? MPFR_RNDD : MPFR_RNDU;
  mpfr_rnd_t base_rnd = (round_down == exp_pos) ? MPFR_RNDD : MPFR_RNDU;
  // Rounding a quotient num/den in direction R: round num with R and den the
  // opposite way, then divide with R.
  mpfr_rnd_t opp_base = (base_rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
  mpfr_rnd_t opp_exp = (exp_rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;

  mpz_t zn, zd;
  mpz_inits(zn, zd, nullptr);
  mpfr_t b, e, num, den, out;
  mpfr_inits2(prec, b, e, num, den, out, (mpfr_ptr)nullptr);

  mpz_from_int(zn, numerator(base));
  mpz_from_int(zd, denominator(base));
  mpfr_set_z(num, zn, base_rnd);
  mpfr_set_z(den, zd, opp_base);
  mpfr_div(b, num, den, base_rnd);

  mpz_from_int(zn, numerator(exp));
  mpz_from_int(zd, denominator(exp));
  mpfr_set_z(num, zn, exp_rnd);
  mpfr_set_z(den, zd, opp_exp);
  mpfr_div(e, num, den, exp_rnd);

  mpfr_pow(out, b, e, final_rnd);
  Rat result = rat_from_mpfr(out);

  mpfr_clears(b, e, num, den, out, (mpfr_ptr)nullptr);
  mpz_clears(zn, zd, nullptr);
  return result;
}

}  // namespace

RatInterval pow_bracket(const Rat& base, const Rat& exp, unsigned bits) {
  if (base <= 0) throw std::domain_error("pow_bracket: base must be positive");
  if (auto v = exact_pow(base, exp)) return RatInterval(*v);
  unsigned prec = bits < 16 ? 16 : bits;
  if (prec > (1u << 20)) throw std::domain_error("pow_bracket: precision too large");
  Rat lo = mpfr_pow_directed(base, exp, prec + 8, true);
  Rat hi = mpfr_pow_directed(base, exp, prec + 8, false);
  return RatInterval(lo, hi);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_rat: empty input");
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  Rat out;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("parse_rat: bad fraction '" + input + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("parse_rat: zero denominator");
    out = Rat(Int(num), d);
  } else {
    auto dot = s.find('.');
    std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw std::invalid_argument("parse_rat: bad number '" + input + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("parse_rat: bad number '" + input + "'");
    Int scale = pow_int(10, Int(fp.size()));
    Int mant = Int(ip.empty() ? "0" : ip) * scale + Int(fp.empty() ? "0" : fp);
    out = Rat(mant, scale);
  }
  return neg ? Rat(-out) : out;
}

Rat parse_rat_limited(const std::string& s, const Int& max_den) {
  Rat v = parse_rat(s);
  if (denominator(v) > max_den)
    throw std::invalid_argument("value '" + s + "' needs denominator > " + max_den.str());
  return v;
}

std::string to_fraction_string(const Rat& x) {
  Int num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rat& x, int significant) {
  if (significant < 1) significant = 1;
  if (x == 0) return "0";
  bool neg = x < 0;
  Rat v = neg ? Rat(-x) : x;

  auto p10 = [](long long k) {
    return k >= 0 ? Rat(pow_int(10, Int(k))) : Rat(1, pow_int(10, Int(-k)));
  };
  long long e = static_cast<long long>(numerator(v).str().size()) -
                static_cast<long long>(denominator(v).str().size());
  while (v < p10(e)) --e;
  while (v >= p10(e + 1)) ++e;

  Int scaled = floor_rat(v * p10(significant - 1 - e) + Rat(1, 2));
  if (scaled == pow_int(10, Int(significant))) {
    scaled /= 10;
    ++e;
  }
  std::string digits = scaled.str();

  std::string out;
  auto trim = [](std::string frac) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac;
  };
  if (e >= 0 && e <= 15) {
    std::string ip, fp;
    if (e + 1 >= static_cast<long long>(digits.size())) {
      ip = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      ip = digits.substr(0, e + 1);
      fp = trim(digits.substr(e + 1));
    }
    out = ip + (fp.empty() ? "" : "." + fp);
  } else if (e < 0 && e >= -5) {
    std::string fp = std::string(-e - 1, '0') + digits;
    out = "0." + trim(fp);
  } else {
    std::string fp = trim(digits.substr(1));
    out = digits.substr(0, 1) + (fp.empty() ? "" : "." + fp) + "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

double to_double(const Rat& x) {
  return x.convert_to<double>();
}

}  // namespace annuli
