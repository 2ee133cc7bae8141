#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "annuli/mtp.hpp"
#include "annuli/profile.hpp"
#include "annuli/rng.hpp"

namespace annuli {
namespace sweep {

// One transference-vs-formula trial.
struct TrialRow {
  std::uint64_t seed = 0;  // per-trial seed drawn from the master stream
  ExponentProfile profile;
  Rat dim_formula;
  Rat dim_mtp;  // max over j of the transference bound for the face rect in j
  Rat abs_diff;
  int witness_j = 0;  // outer argmax, smallest index on ties
  Rat a_star;         // A* of the winning evaluation
};

// Exponents on the 1/8 grid: each tau_psi_i in [1/8, 4], the vector redrawn
// until its sum is at least 1; each tau_phi_i in [1/8, 3].
ExponentProfile random_profile(SplitMix64& rng, int n);

// `trials` rows cycling through `dims`. Every trial runs off its own recorded
// seed, so any subset can be recomputed independently of the rest.
std::vector<TrialRow> mtp_consistency_sweep(std::uint64_t seed, int trials,
                                            const std::vector<int>& dims);

Rat max_abs_diff(const std::vector<TrialRow>& rows);

// Header seed,n,tau_psi_*,tau_phi_*,dim_formula,dim_mtp,abs_diff,witness_j,
// A_star with the exponent columns padded to the widest n in the batch.
// Decimals carry 12 significant digits.
void write_sweep_csv(const std::vector<TrialRow>& rows, std::ostream& out);

// Ball-oracle trial: weights from tau_psi alone, no face adjustment.
struct OracleRow {
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<Rat> tau_psi;
  Rat ww;
  Rat rynne;
  Rat abs_diff;
};

std::vector<OracleRow> oracle_sweep(std::uint64_t seed, int trials,
                                    const std::vector<int>& dims);

Rat max_abs_diff(const std::vector<OracleRow>& rows);

// Header seed,n,tau_psi_*,ww,rynne,abs_diff, padded like the sweep CSV.
void write_oracle_csv(const std::vector<OracleRow>& rows, std::ostream& out);

}  // namespace sweep
}  // namespace annuli
