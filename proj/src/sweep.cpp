#include "annuli/sweep.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "annuli/formulas.hpp"

namespace annuli {
namespace sweep {

namespace {

void check_plan(int trials, const std::vector<int>& dims) {
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (dims.empty()) throw std::invalid_argument("sweep: dims must be nonempty");
  for (int n : dims)
    if (n < 1) throw std::invalid_argument("sweep: dims entries must be >= 1");
}

std::vector<Rat> eighth_grid(SplitMix64& rng, int n, std::uint64_t steps) {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.emplace_back(Int(1 + rng.below(steps)), Int(8));
  return out;
}

std::vector<Rat> psi_with_mass(SplitMix64& rng, int n) {
  for (;;) {
    std::vector<Rat> psi = eighth_grid(rng, n, 32);
    Rat sum(0);
    for (const Rat& t : psi) sum += t;
    if (sum >= 1) return psi;
  }
}

}  // namespace

ExponentProfile random_profile(SplitMix64& rng, int n) {
  if (n < 1) throw std::invalid_argument("sweep: n must be >= 1");
  ExponentProfile p;
  p.n = n;
  p.tau_psi = psi_with_mass(rng, n);
  p.tau_phi = eighth_grid(rng, n, 24);
  return p;
}

std::vector<TrialRow> mtp_consistency_sweep(std::uint64_t seed, int trials,
                                            const std::vector<int>& dims) {
  check_plan(trials, dims);
  SplitMix64 master(seed);
  std::vector<TrialRow> rows;
  rows.reserve(static_cast<size_t>(trials));
  for (int i = 0; i < trials; ++i) {
    TrialRow row;
    row.seed = master.next();
    SplitMix64 rng(row.seed);
    int n = dims[static_cast<size_t>(i) % dims.size()];
    row.profile = random_profile(rng, n);
    row.dim_formula = formulas::dim_weighted(row.profile).value;

    bool have = false;
    for (int j = 1; j <= n; ++j) {
      mtp::ExponentSelection sel = mtp::select_exponents(row.profile, j);
      mtp::MtpInstance inst;
      inst.n = n;
      inst.delta.assign(static_cast<size_t>(n), Rat(1));
      inst.a = std::move(sel.a);
      inst.t = std::move(sel.t);
      mtp::WwResult ww = mtp::ww_lower_bound(inst);
      if (!have || ww.value > row.dim_mtp) {
        have = true;
        row.dim_mtp = ww.value;
        row.witness_j = j;
        row.a_star = ww.a_star;
      }
    }
    row.abs_diff = abs(Rat(row.dim_formula - row.dim_mtp));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rat max_abs_diff(const std::vector<TrialRow>& rows) {
  Rat worst(0);
  for (const auto& r : rows) worst = std::max(worst, r.abs_diff);
  return worst;
}

void write_sweep_csv(const std::vector<TrialRow>& rows, std::ostream& out) {
  int width = 1;
  for (const auto& r : rows) width = std::max(width, r.profile.n);

  out << "seed,n";
  for (int i = 1; i <= width; ++i) out << ",tau_psi_" << i;
  for (int i = 1; i <= width; ++i) out << ",tau_phi_" << i;
  out << ",dim_formula,dim_mtp,abs_diff,witness_j,A_star\n";

  for (const auto& r : rows) {
    out << r.seed << ',' << r.profile.n;
    for (int i = 0; i < width; ++i) {
      out << ',';
      if (i < r.profile.n) out << to_decimal_string(r.profile.tau_psi[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < width; ++i) {
      out << ',';
      if (i < r.profile.n) out << to_decimal_string(r.profile.tau_phi[static_cast<size_t>(i)]);
    }
    out << ',' << to_decimal_string(r.dim_formula) << ',' << to_decimal_string(r.dim_mtp)
        << ',' << to_decimal_string(r.abs_diff) << ',' << r.witness_j << ','
        << to_decimal_string(r.a_star) << '\n';
  }
}

std::vector<OracleRow> oracle_sweep(std::uint64_t seed, int trials,
                                    const std::vector<int>& dims) {
  check_plan(trials, dims);
  SplitMix64 master(seed);
  std::vector<OracleRow> rows;
  rows.reserve(static_cast<size_t>(trials));
  for (int i = 0; i < trials; ++i) {
    OracleRow row;
    row.seed = master.next();
    SplitMix64 rng(row.seed);
    row.n = dims[static_cast<size_t>(i) % dims.size()];
    row.tau_psi = psi_with_mass(rng, row.n);

    mtp::ExponentSelection sel = mtp::select_weights(row.n, row.tau_psi);
    mtp::MtpInstance inst;
    inst.n = row.n;
    inst.delta.assign(static_cast<size_t>(row.n), Rat(1));
    inst.a = std::move(sel.a);
    inst.t = std::move(sel.t);
    row.ww = mtp::ww_lower_bound(inst).value;
    row.rynne = mtp::rynne_oracle(row.n, row.tau_psi).value;
    row.abs_diff = abs(Rat(row.ww - row.rynne));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rat max_abs_diff(const std::vector<OracleRow>& rows) {
  Rat worst(0);
  for (const auto& r : rows) worst = std::max(worst, r.abs_diff);
  return worst;
}

void write_oracle_csv(const std::vector<OracleRow>& rows, std::ostream& out) {
  int width = 1;
  for (const auto& r : rows) width = std::max(width, r.n);

  out << "seed,n";
  for (int i = 1; i <= width; ++i) out << ",tau_psi_" << i;
  out << ",ww,rynne,abs_diff\n";

  for (const auto& r : rows) {
    out << r.seed << ',' << r.n;
    for (int i = 0; i < width; ++i) {
      out << ',';
      if (i < r.n) out << to_decimal_string(r.tau_psi[static_cast<size_t>(i)]);
    }
    out << ',' << to_decimal_string(r.ww) << ',' << to_decimal_string(r.rynne) << ','
        << to_decimal_string(r.abs_diff) << '\n';
  }
}

}  // namespace sweep
}  // namespace annuli
