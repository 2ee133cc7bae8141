#pragma once

#include <memory>
#include <vector>

#include "annuli/rational.hpp"

namespace annuli {

// Exact arithmetic in Q(u) with u = c^(1/d), c > 0 rational. The factory
// reduces (c, d) until x^d - c is irreducible over Q (by Capelli, for d with
// prime factors p it suffices that c is not a rational p-th power; c > 0
// rules out the 4|d corner case x^4 + 4c'^4). Irreducibility makes
// {1, u, ..., u^(d-1)} a Q-basis, so an element is zero iff every coordinate
// is zero, and signs can be decided by interval evaluation.
class RootField {
 public:
  static std::shared_ptr<const RootField> make(const Rat& radicand, unsigned degree);

  const Rat& radicand() const { return c_; }
  unsigned degree() const { return d_; }
  bool same(const RootField& other) const { return d_ == other.d_ && c_ == other.c_; }
  RatInterval root_bracket(unsigned bits) const;  // encloses u

 private:
  RootField(const Rat& c, unsigned d) : c_(c), d_(d) {}
  Rat c_;
  unsigned d_;
};

using FieldPtr = std::shared_ptr<const RootField>;

class AlgReal {
 public:
  AlgReal() : AlgReal(Rat(0)) {}
  AlgReal(const Rat& value);  // rational element; adopts a field on first use
  static AlgReal root(const FieldPtr& field);  // u itself
  static AlgReal with_field(const FieldPtr& field, const Rat& value);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coef_; }

  bool is_rational() const;
  Rat as_rational() const;  // throws unless is_rational()

  AlgReal operator-() const;
  AlgReal operator+(const AlgReal& o) const;
  AlgReal operator-(const AlgReal& o) const;
  AlgReal operator*(const AlgReal& o) const;
  AlgReal operator*(const Rat& c) const;
  AlgReal operator/(const Rat& c) const;
  AlgReal pow(unsigned k) const;

  int sign() const;  // exact: -1, 0, +1
  bool operator==(const AlgReal& o) const { return (*this - o).sign() == 0; }
  bool operator!=(const AlgReal& o) const { return !(*this == o); }
  bool operator<(const AlgReal& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const AlgReal& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const AlgReal& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const AlgReal& o) const { return (*this - o).sign() >= 0; }

  AlgReal abs() const;
  RatInterval bracket(unsigned bits) const;
  double approx() const { return to_double(bracket(64).mid()); }
  std::string decimal(int significant = 12) const;

 private:
  AlgReal(FieldPtr field, std::vector<Rat> coef);
  static FieldPtr unify(const AlgReal& a, const AlgReal& b);
  std::vector<Rat> lifted(unsigned d) const;

  FieldPtr field_;         // null for plain rationals
  std::vector<Rat> coef_;  // size 1, or field->degree()
};

}  // namespace annuli
