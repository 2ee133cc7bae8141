#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "annuli/sweep.hpp"
#include "doctest.h"

using namespace annuli;
using namespace annuli::sweep;

namespace {

Rat R(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("random profiles stay on the grid") {
  SplitMix64 rng(42);
  for (int rep = 0; rep < 50; ++rep) {
    ExponentProfile p = random_profile(rng, 3);
    p.validate();
    CHECK(p.weighted_hypothesis());
    for (const Rat& t : p.tau_psi) {
      CHECK(t >= R(1, 8));
      CHECK(t <= 4);
      CHECK(denominator(Rat(t * 8)) == 1);
    }
    for (const Rat& t : p.tau_phi) {
      CHECK(t >= R(1, 8));
      CHECK(t <= 3);
      CHECK(denominator(Rat(t * 8)) == 1);
    }
  }

  SplitMix64 a(7), b(7);
  ExponentProfile pa = random_profile(a, 2);
  ExponentProfile pb = random_profile(b, 2);
  CHECK(pa.tau_psi == pb.tau_psi);
  CHECK(pa.tau_phi == pb.tau_phi);

  SplitMix64 c(7);
  CHECK_THROWS_AS(random_profile(c, 0), std::invalid_argument);
}

TEST_CASE("consistency sweep agrees exactly") {
  auto rows = mtp_consistency_sweep(7, 24, {2, 3});
  REQUIRE(rows.size() == 24);
  std::set<std::uint64_t> seeds;
  for (size_t i = 0; i < rows.size(); ++i) {
    const TrialRow& row = rows[i];
    CHECK(row.profile.n == (i % 2 == 0 ? 2 : 3));
    CHECK(row.abs_diff == 0);
    CHECK(row.dim_mtp == row.dim_formula);
    CHECK(row.witness_j >= 1);
    CHECK(row.witness_j <= row.profile.n);
    CHECK(row.a_star > 1);
    seeds.insert(row.seed);
  }
  CHECK(seeds.size() == rows.size());
  CHECK(max_abs_diff(rows) == 0);
}

TEST_CASE("trials recompute from their recorded seed") {
  auto rows = mtp_consistency_sweep(99, 6, {2});
  const TrialRow& fifth = rows[4];
  SplitMix64 rng(fifth.seed);
  ExponentProfile again = random_profile(rng, 2);
  CHECK(again.tau_psi == fifth.profile.tau_psi);
  CHECK(again.tau_phi == fifth.profile.tau_phi);
}

TEST_CASE("sweep csv layout and determinism") {
  auto rows = mtp_consistency_sweep(7, 5, {2, 3});
  std::ostringstream a, b;
  write_sweep_csv(rows, a);
  write_sweep_csv(mtp_consistency_sweep(7, 5, {2, 3}), b);
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "seed,n,tau_psi_1,tau_psi_2,tau_psi_3,tau_phi_1,tau_phi_2,tau_phi_3,"
        "dim_formula,dim_mtp,abs_diff,witness_j,A_star");

  std::string line;
  size_t data_lines = 0;
  while (std::getline(in, line)) {
    auto fields = split_csv(line);
    REQUIRE(fields.size() == 13);
    bool narrow = fields[1] == "2";
    CHECK(fields[4].empty() == narrow);
    CHECK(fields[7].empty() == narrow);
    CHECK(fields[10] == "0");
    ++data_lines;
  }
  CHECK(data_lines == rows.size());

  std::ostringstream other;
  write_sweep_csv(mtp_consistency_sweep(8, 5, {2, 3}), other);
  CHECK(a.str() != other.str());
}

TEST_CASE("oracle sweep matches the ball formula") {
  auto rows = oracle_sweep(11, 30, {1, 2, 3});
  REQUIRE(rows.size() == 30);
  for (const OracleRow& row : rows) {
    CHECK(row.abs_diff == 0);
    CHECK(row.ww == row.rynne);
  }
  CHECK(max_abs_diff(rows) == 0);
}

TEST_CASE("oracle csv layout") {
  auto rows = oracle_sweep(3, 4, {1, 2});
  std::ostringstream out;
  write_oracle_csv(rows, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "seed,n,tau_psi_1,tau_psi_2,ww,rynne,abs_diff");
  std::string line;
  size_t data_lines = 0;
  while (std::getline(in, line)) {
    auto fields = split_csv(line);
    REQUIRE(fields.size() == 7);
    CHECK(fields[3].empty() == (fields[1] == "1"));
    CHECK(fields[6] == "0");
    ++data_lines;
  }
  CHECK(data_lines == rows.size());
}

TEST_CASE("sweep plans are validated") {
  CHECK_THROWS_AS(mtp_consistency_sweep(1, 0, {2}), std::invalid_argument);
  CHECK_THROWS_AS(mtp_consistency_sweep(1, 5, {}), std::invalid_argument);
  CHECK_THROWS_AS(oracle_sweep(1, 5, {2, 0}), std::invalid_argument);
}
