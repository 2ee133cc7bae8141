#include "annuli/algebraic.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace annuli;

TEST_CASE("field canonicalization strips rational roots") {
  auto f = RootField::make(Rat(4), 2);  // sqrt(4) = 2
  CHECK(f->degree() == 1);
  CHECK(f->radicand() == 2);

  auto g = RootField::make(Rat(4), 4);  // 4^(1/4) = sqrt(2)
  CHECK(g->degree() == 2);
  CHECK(g->radicand() == 2);

  auto h = RootField::make(Rat(8), 6);  // 8^(1/6) = sqrt(2)
  CHECK(h->degree() == 2);
  CHECK(h->radicand() == 2);

  auto k = RootField::make(Rat(1, 3), 2);
  CHECK(k->degree() == 2);
  CHECK(k->radicand() == Rat(1, 3));

  auto one = RootField::make(Rat(1), 7);
  CHECK(one->degree() == 1);

  CHECK_THROWS_AS(RootField::make(Rat(-2), 2), std::invalid_argument);
  CHECK_THROWS_AS(RootField::make(Rat(2), 0), std::invalid_argument);
}

TEST_CASE("root brackets enclose the root") {
  auto f = RootField::make(Rat(2), 2);
  RatInterval b = f->root_bracket(96);
  CHECK(b.lo * b.lo < 2);
  CHECK(b.hi * b.hi > 2);

  auto g = RootField::make(Rat(9), 2);  // degree collapses, exact
  CHECK(g->root_bracket(96).is_exact());
  CHECK(g->root_bracket(96).lo == 3);
}

TEST_CASE("ring arithmetic in a quadratic field") {
  auto f = RootField::make(Rat(2), 2);
  AlgReal u = AlgReal::root(f);          // sqrt 2
  AlgReal x = u * u;                     // 2
  CHECK(x.is_rational());
  CHECK(x.as_rational() == 2);

  AlgReal y = (u + AlgReal(Rat(1))) * (u - AlgReal(Rat(1)));  // 2 - 1 = 1
  CHECK(y.is_rational());
  CHECK(y.as_rational() == 1);

  CHECK(u.sign() == 1);
  CHECK((-u).sign() == -1);
  CHECK((u - u).sign() == 0);
  CHECK(u > AlgReal(Rat(7, 5)));       // sqrt2 > 1.4
  CHECK(u < AlgReal(Rat(3, 2)));
  CHECK(u.pow(4).as_rational() == 4);
  CHECK((u / Rat(2) * u).as_rational() == 1);
}

TEST_CASE("ring arithmetic in a cubic field") {
  auto f = RootField::make(Rat(1, 3), 3);  // u = 3^(-1/3)
  AlgReal u = AlgReal::root(f);
  CHECK((u * u * u).as_rational() == Rat(1, 3));
  // v = 3^(1/3) = u^2 * 3 since u^3 = 1/3.
  AlgReal v = u.pow(2) * Rat(3);
  CHECK((v * u).as_rational() == 1);
  CHECK((v.pow(3)).as_rational() == 3);
  CHECK(v > AlgReal(Rat(10, 7)));  // 3^(1/3) = 1.4422... vs 1.4285...
}

TEST_CASE("cubic comparison is exact near close values") {
  auto f = RootField::make(Rat(1, 3), 3);
  AlgReal u = AlgReal::root(f);            // 0.69336...
  AlgReal v = u.pow(2) * Rat(3);           // 1.44224...
  // 1.44224957^3 = 3 - tiny; check against a very close rational.
  Rat close(144224957, 100000000);
  CHECK(v > AlgReal(close));
  Rat above(144224958, 100000000);
  CHECK(v < AlgReal(above));
}

TEST_CASE("mixing different fields throws") {
  auto f = RootField::make(Rat(2), 2);
  auto g = RootField::make(Rat(3), 2);
  AlgReal a = AlgReal::root(f), b = AlgReal::root(g);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_NOTHROW(a + AlgReal(Rat(1)));
}

TEST_CASE("decimal rendering of algebraic numbers") {
  auto f = RootField::make(Rat(2), 2);
  AlgReal u = AlgReal::root(f);
  CHECK(u.decimal(12) == "1.41421356237");
  CHECK(AlgReal(Rat(1, 2)).decimal(12) == "0.5");
}
