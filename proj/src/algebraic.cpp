#include "annuli/algebraic.hpp"

#include <stdexcept>

namespace annuli {

std::shared_ptr<const RootField> RootField::make(const Rat& radicand, unsigned degree) {
  if (radicand <= 0) throw std::invalid_argument("RootField: radicand must be positive");
  if (degree == 0) throw std::invalid_argument("RootField: degree must be >= 1");
  Rat c = radicand;
  unsigned d = degree;
  // Pull rational p-th roots out of c for divisors p | d until no prime
  // factor of d leaves c a perfect power.
  bool changed = true;
  while (changed && d > 1) {
    changed = false;
    for (unsigned p = 2; p <= d && !changed; ++p) {
      if (d % p != 0) continue;
      auto rn = exact_nth_root(numerator(c), p);
      if (!rn) continue;
      auto rd = exact_nth_root(denominator(c), p);
      if (!rd) continue;
      c = Rat(*rn, *rd);
      d /= p;
      changed = true;
    }
  }
  if (c == 1) d = 1;
  return std::shared_ptr<const RootField>(new RootField(c, d));
}

RatInterval RootField::root_bracket(unsigned bits) const {
  if (d_ == 1) return RatInterval(c_);
  return pow_bracket(c_, Rat(1, d_), bits);
}

AlgReal::AlgReal(const Rat& value) : field_(nullptr), coef_{value} {}

AlgReal::AlgReal(FieldPtr field, std::vector<Rat> coef)
    : field_(std::move(field)), coef_(std::move(coef)) {}

AlgReal AlgReal::root(const FieldPtr& field) {
  if (!field) throw std::invalid_argument("AlgReal::root: null field");
  if (field->degree() == 1) return AlgReal(field->radicand());
  std::vector<Rat> c(field->degree(), Rat(0));
  c[1] = 1;
  return AlgReal(field, std::move(c));
}

AlgReal AlgReal::with_field(const FieldPtr& field, const Rat& value) {
  if (!field || field->degree() == 1) return AlgReal(value);
  std::vector<Rat> c(field->degree(), Rat(0));
  c[0] = value;
  return AlgReal(field, std::move(c));
}

bool AlgReal::is_rational() const {
  for (size_t i = 1; i < coef_.size(); ++i)
    if (coef_[i] != 0) return false;
  return true;
}

Rat AlgReal::as_rational() const {
  if (!is_rational()) throw std::domain_error("AlgReal: not rational");
  return coef_[0];
}

FieldPtr AlgReal::unify(const AlgReal& a, const AlgReal& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (!a.field_->same(*b.field_))
    throw std::invalid_argument("AlgReal: mixing elements of different fields");
  return a.field_;
}

std::vector<Rat> AlgReal::lifted(unsigned d) const {
  std::vector<Rat> out(d, Rat(0));
  for (size_t i = 0; i < coef_.size(); ++i) out[i] = coef_[i];
  return out;
}

AlgReal AlgReal::operator-() const {
  AlgReal out = *this;
  for (auto& c : out.coef_) c = -c;
  return out;
}

AlgReal AlgReal::operator+(const AlgReal& o) const {
  FieldPtr f = unify(*this, o);
  unsigned d = f ? f->degree() : 1;
  std::vector<Rat> a = lifted(d), b = o.lifted(d);
  for (unsigned i = 0; i < d; ++i) a[i] += b[i];
  return AlgReal(f, std::move(a));
}

AlgReal AlgReal::operator-(const AlgReal& o) const {
  return *this + (-o);
}

AlgReal AlgReal::operator*(const AlgReal& o) const {
  FieldPtr f = unify(*this, o);
  unsigned d = f ? f->degree() : 1;
  std::vector<Rat> a = lifted(d), b = o.lifted(d);
  std::vector<Rat> prod(2 * d, Rat(0));
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  // Reduce modulo u^d = c.
  std::vector<Rat> out(d, Rat(0));
  const Rat c = f ? f->radicand() : Rat(0);
  for (unsigned i = 0; i < d; ++i) out[i] = prod[i];
  for (unsigned i = d; i < 2 * d; ++i) out[i - d] += prod[i] * c;
  return AlgReal(f, std::move(out));
}

AlgReal AlgReal::operator*(const Rat& c) const {
  AlgReal out = *this;
  for (auto& x : out.coef_) x *= c;
  return out;
}

AlgReal AlgReal::operator/(const Rat& c) const {
  if (c == 0) throw std::domain_error("AlgReal: division by zero");
  return *this * Rat(1 / c);
}

AlgReal AlgReal::pow(unsigned k) const {
  AlgReal acc(Rat(1));
  AlgReal base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

RatInterval AlgReal::bracket(unsigned bits) const {
  if (!field_ || field_->degree() == 1 || is_rational()) return RatInterval(coef_[0]);
  RatInterval u = field_->root_bracket(bits);
  // Horner-free power table; u > 0 so powers keep orientation.
  RatInterval acc(coef_[0]);
  RatInterval up(Rat(1));
  for (size_t i = 1; i < coef_.size(); ++i) {
    up = interval_mul(up, u);
    if (coef_[i] == 0) continue;
    acc = interval_add(acc, interval_scale(coef_[i], up));
  }
  return acc;
}

int AlgReal::sign() const {
  bool zero = true;
  for (const auto& c : coef_)
    if (c != 0) {
      zero = false;
      break;
    }
  if (zero) return 0;
  if (is_rational()) return coef_[0] < 0 ? -1 : 1;
  for (unsigned bits = 128; bits <= (1u << 15); bits *= 2) {
    RatInterval b = bracket(bits);
    if (b.lo > 0) return 1;
    if (b.hi < 0) return -1;
  }
  // Unreachable for a nonzero element of an irreducible extension.
  throw std::logic_error("AlgReal::sign: interval refinement failed");
}

AlgReal AlgReal::abs() const {
  return sign() < 0 ? -*this : *this;
}

std::string AlgReal::decimal(int significant) const {
  if (is_rational()) return to_decimal_string(coef_[0], significant);
  unsigned bits = 64 + 4 * static_cast<unsigned>(significant);
  return to_decimal_string(bracket(bits).mid(), significant);
}

}  // namespace annuli
