#include <stdexcept>
#include <vector>

#include "annuli/formulas.hpp"
#include "annuli/mtp.hpp"
#include "doctest.h"

using namespace annuli;
using namespace annuli::formulas;
using namespace annuli::mtp;

namespace {

Rat R(long num, long den = 1) { return Rat(num, den); }

MtpInstance inst(std::vector<Rat> delta, std::vector<Rat> a, std::vector<Rat> t,
                 Rat kappa = Rat(0)) {
  MtpInstance m;
  m.n = static_cast<int>(delta.size());
  m.delta = std::move(delta);
  m.a = std::move(a);
  m.t = std::move(t);
  m.kappa = kappa;
  return m;
}

MtpInstance from_selection(const ExponentSelection& sel) {
  MtpInstance m;
  m.n = static_cast<int>(sel.a.size());
  m.delta.assign(sel.a.size(), Rat(1));
  m.a = sel.a;
  m.t = sel.t;
  return m;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(ww_lower_bound(inst({R(1)}, {R(1), R(1)}, {R(0)})), std::invalid_argument);
  CHECK_THROWS_AS(ww_lower_bound(inst({R(0)}, {R(1)}, {R(0)})), std::invalid_argument);
  CHECK_THROWS_AS(ww_lower_bound(inst({R(1)}, {R(1)}, {R(-1)})), std::invalid_argument);
  CHECK_THROWS_AS(ww_lower_bound(inst({R(1)}, {R(1)}, {R(0)}, R(2))), std::invalid_argument);
}

TEST_CASE("lower bound, single candidate") {
  auto r = ww_lower_bound(inst({R(1), R(1)}, {R(3, 2), R(3, 2)}, {R(1, 2), R(1, 2)}));
  CHECK(r.value == R(3, 2));
  CHECK(r.a_star == R(2));
  CHECK(r.a_star_index == 1);
  CHECK(r.k1.empty());
  CHECK(r.k2 == std::vector<int>{1, 2});
  CHECK(r.k3.empty());
  CHECK(r.table.size() == 1);
}

TEST_CASE("lower bound, two candidates") {
  auto r = ww_lower_bound(inst({R(1), R(1)}, {R(3, 2), R(3, 2)}, {R(1, 2), R(3, 2)}));
  REQUIRE(r.table.size() == 2);
  CHECK(r.table[0].candidate == R(2));
  CHECK(r.table[0].value == R(3, 2));
  CHECK(r.table[1].candidate == R(3));
  CHECK(r.table[1].value == R(4, 3));
  CHECK(r.value == R(4, 3));
  CHECK(r.a_star == R(3));
  CHECK(r.a_star_index == 2);
  CHECK(r.k2 == std::vector<int>{1, 2});
}

TEST_CASE("lower bound, zero stretch gives the full sum") {
  auto r = ww_lower_bound(inst({R(2), R(3)}, {R(1), R(2)}, {R(0), R(0)}, R(1, 2)));
  CHECK(r.value == R(5));
}

TEST_CASE("lower bound, kappa one drops the ratio term") {
  auto r = ww_lower_bound(inst({R(1), R(1)}, {R(3, 2), R(3, 2)}, {R(1, 2), R(3, 2)}, R(1)));
  CHECK(r.value == R(2));
  for (const auto& row : r.table) CHECK(row.value == R(2));
}

TEST_CASE("lower bound table partitions the indices") {
  auto r = ww_lower_bound(inst({R(1), R(2), R(3)}, {R(1), R(3, 2), R(2)},
                               {R(1, 2), R(0), R(3)}));
  for (const auto& row : r.table) {
    std::vector<bool> seen(4, false);
    for (int i : row.k1) seen[static_cast<size_t>(i)] = true;
    for (int i : row.k2) {
      CHECK(!seen[static_cast<size_t>(i)]);
      seen[static_cast<size_t>(i)] = true;
    }
    for (int i : row.k3) {
      CHECK(!seen[static_cast<size_t>(i)]);
      seen[static_cast<size_t>(i)] = true;
    }
    CHECK((seen[1] && seen[2] && seen[3]));
    CHECK(row.value >= r.value);
  }
}

TEST_CASE("ball oracle values") {
  CHECK(rynne_oracle(2, {R(1), R(2)}).value == R(4, 3));
  CHECK(rynne_oracle(2, {R(1), R(1)}).value == R(3, 2));
  auto half = rynne_oracle(2, {R(1, 2), R(1, 2)});
  CHECK(half.value == R(2));
  CHECK(!half.outside_hypotheses);
  auto low = rynne_oracle(2, {R(1, 4), R(1, 4)});
  CHECK(low.value == R(12, 5));
  CHECK(low.outside_hypotheses);
  CHECK_THROWS_AS(rynne_oracle(2, {R(1)}), std::invalid_argument);
  CHECK_THROWS_AS(rynne_oracle(1, {R(0)}), std::invalid_argument);
}

TEST_CASE("exponent selection, split case") {
  auto profile = ExponentProfile{2, {R(6, 5), R(3, 10)}, {R(1), R(1)}};
  auto sel = select_exponents(profile, 2);
  CHECK(sel.case_tag == SelectionCase::split);
  REQUIRE(sel.ell.has_value());
  CHECK(*sel.ell == 1);
  CHECK(sel.b == std::vector<Rat>{R(7, 10), R(3, 10)});
  CHECK(sel.a == std::vector<Rat>{R(17, 10), R(13, 10)});
  CHECK(sel.t == std::vector<Rat>{R(1, 2), R(1)});
}

TEST_CASE("exponent selection, all coordinates large") {
  auto profile = ExponentProfile{3, {R(1, 3), R(1, 3), R(1, 3)}, {R(2), R(1), R(1)}};
  auto sel = select_exponents(profile, 1);
  CHECK(sel.case_tag == SelectionCase::all_large);
  CHECK(!sel.ell.has_value());
  CHECK(sel.b == std::vector<Rat>{R(1, 3), R(1, 3), R(1, 3)});
  CHECK(sel.t == std::vector<Rat>{R(2), R(0), R(0)});
}

TEST_CASE("exponent selection on the unit-sum boundary") {
  auto profile = ExponentProfile{2, {R(3, 4), R(1, 4)}, {R(1), R(1)}};
  auto sel = select_exponents(profile, 1);
  CHECK(sel.case_tag == SelectionCase::split);
  REQUIRE(sel.ell.has_value());
  CHECK(*sel.ell == 0);
  CHECK(sel.b == std::vector<Rat>{R(3, 4), R(1, 4)});
  CHECK(sel.t == std::vector<Rat>{R(1), R(0)});
}

TEST_CASE("exponent selection needs unit mass") {
  auto profile = ExponentProfile{2, {R(1, 4), R(1, 4)}, {R(1), R(1)}};
  CHECK_THROWS_AS(select_exponents(profile, 1), std::domain_error);
  CHECK_THROWS_AS(select_weights(2, {R(1, 4), R(1, 4)}), std::domain_error);
  CHECK_THROWS_AS(select_exponents(profile, 0), std::invalid_argument);
  CHECK_THROWS_AS(select_exponents(profile, 3), std::invalid_argument);
}

TEST_CASE("selection weights always sum to one") {
  for (auto taus : std::vector<std::vector<Rat>>{
           {R(1), R(1)},
           {R(6, 5), R(3, 10)},
           {R(3, 4), R(1, 4)},
           {R(2), R(1, 8), R(1, 8)},
           {R(5), R(1, 16), R(1, 16), R(1, 16)}}) {
    auto sel = select_weights(static_cast<int>(taus.size()), taus);
    Rat sum(0);
    for (size_t i = 0; i < taus.size(); ++i) {
      CHECK(sel.b[i] > 0);
      CHECK(sel.t[i] >= 0);
      CHECK(sel.a[i] == 1 + sel.b[i]);
      sum += sel.b[i];
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("transference bound matches the ball oracle") {
  for (auto taus : std::vector<std::vector<Rat>>{
           {R(1), R(2)},
           {R(1), R(1)},
           {R(1, 2), R(1, 2)},
           {R(6, 5), R(3, 10)},
           {R(3, 4), R(1, 4)},
           {R(2), R(1), R(1, 2)},
           {R(3), R(1, 8), R(1, 8)}}) {
    int n = static_cast<int>(taus.size());
    auto ww = ww_lower_bound(from_selection(select_weights(n, taus)));
    CHECK(ww.value == rynne_oracle(n, taus).value);
  }
}

TEST_CASE("transference bound matches the anisotropic formula") {
  for (auto profile : std::vector<ExponentProfile>{
           ExponentProfile::isotropic(2, R(1), R(1)),
           {2, {R(2), R(1)}, {R(1), R(1)}},
           {2, {R(6, 5), R(3, 10)}, {R(1, 2), R(2)}},
           {3, {R(1), R(1, 2), R(1, 2)}, {R(1), R(1), R(3)}},
           {3, {R(1, 3), R(1, 3), R(1, 3)}, {R(2), R(1), R(1)}}}) {
    Rat best(0);
    for (int j = 1; j <= profile.n; ++j) {
      auto ww = ww_lower_bound(from_selection(select_exponents(profile, j)));
      if (ww.value > best) best = ww.value;
    }
    CHECK(best == dim_weighted(profile).value);
  }
}

TEST_CASE("face offset") {
  auto iso1 = ExponentProfile::isotropic(1, R(1), R(1));
  CHECK(shifted_rect_gamma(iso1, 1, Int(2)) == std::vector<Rat>{R(3, 16)});
  auto iso2 = ExponentProfile::isotropic(2, R(1), R(1));
  CHECK(shifted_rect_gamma(iso2, 2, Int(2)) == std::vector<Rat>{R(0), R(3, 16)});
  CHECK(gamma_scalar(R(1), R(0), Int(2)) == R(1, 8));
  CHECK(gamma_scalar(R(1, 2), R(1, 2), Int(4)) == R(3, 32));
  CHECK_THROWS_AS(gamma_scalar(R(1, 2), R(1, 2), Int(2)), std::domain_error);
  CHECK_THROWS_AS(shifted_rect_gamma(iso1, 2, Int(2)), std::invalid_argument);
  CHECK_THROWS_AS(gamma_scalar(R(1), R(0), Int(0)), std::invalid_argument);
}

TEST_CASE("shift decay condition") {
  CHECK(check_shift_condition({R(1), R(1, 2)}, R(1, 2)));
  CHECK(check_shift_condition({R(100), R(2)}, R(1, 2)));
  CHECK(!check_shift_condition({R(1), R(1, 3)}, R(1, 2)));
  CHECK_THROWS_AS(check_shift_condition({R(-1), R(1)}, R(1, 2)), std::invalid_argument);
}

TEST_CASE("volume series classification") {
  CHECK(classify_hf_series(1, R(1), R(1)) == SeriesClass::divergent);
  CHECK(classify_hf_series(2, R(1), R(3, 2)) == SeriesClass::divergent);
  CHECK(classify_hf_series(2, R(1), R(3, 2) + R(1, 1000)) == SeriesClass::convergent);
  CHECK(classify_hf_series(3, R(1, 3), R(3)) == SeriesClass::divergent);
  CHECK(classify_hf_series(3, R(1, 3), R(4)) == SeriesClass::convergent);
  CHECK_THROWS_AS(classify_hf_series(0, R(1), R(1)), std::invalid_argument);
}

TEST_CASE("series splits exactly at the dimension value") {
  for (int n = 1; n <= 4; ++n) {
    for (Rat tau : {R(1), R(3, 2), R(2), R(5, 2)}) {
      Rat s = Rat(n + 1) / (1 + tau);
      CHECK(classify_hf_series(n, tau, s) == SeriesClass::divergent);
      CHECK(classify_hf_series(n, tau, Rat(s + R(1, 1000000))) == SeriesClass::convergent);
    }
  }
}

TEST_CASE("perturbed center dimension") {
  auto ok = dim_perturbed(2, R(1), {R(1), R(1, 2)});
  REQUIRE(ok.value.has_value());
  CHECK(*ok.value == R(3, 2));
  CHECK(!dim_perturbed(2, R(1), {R(1), R(1, 3)}).value.has_value());
  CHECK(!dim_perturbed(2, R(1, 4), {R(1), R(1)}).value.has_value());
  auto iso = dim_perturbed(3, R(2), {R(5), R(1, 3)});
  REQUIRE(iso.value.has_value());
  CHECK(*iso.value == R(4, 3));
  CHECK(*iso.value == dim_isotropic_phi_zero_limit(3, R(2)).value);
}
