#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annuli/profile.hpp"

namespace annuli {
namespace mtp {

// Rectangle-to-rectangle transference instance: unit scaling exponents
// delta, base exponents a, stretch exponents t, interpolation weight kappa.
struct MtpInstance {
  int n = 0;
  std::vector<Rat> delta;
  std::vector<Rat> a;
  std::vector<Rat> t;   // all >= 0
  Rat kappa = Rat(0);   // in [0, 1]; 0 unless a sharper local estimate is known
  void validate() const;
};

struct WwBreakdown {
  Rat candidate;  // the A value
  Rat value;
  std::vector<int> k1, k2, k3;  // 1-based index partition at this A
};

struct WwResult {
  Rat value;
  Rat a_star;
  int a_star_index = 0;  // smallest 1-based i with a_i + t_i == a_star
  std::vector<int> k1, k2, k3;
  std::vector<WwBreakdown> table;  // every candidate, ascending
};

// min over candidates A in {a_i + t_i} of
//   sum_{K1} delta + sum_{K2} delta + kappa sum_{K3} delta
//   + (1-kappa) (sum_{K3} a delta - sum_{K2} t delta) / A
// with K1 = {a_i >= A}, K2 = {a_i + t_i <= A} \ K1, K3 = the rest.
// Ties pick the smallest A, then the smallest index.
WwResult ww_lower_bound(const MtpInstance& inst);

struct RynneResult {
  Rat value;
  bool outside_hypotheses = false;  // sum tau < 1
};
// min over j of (n + 1 + sum_{tau_i < tau_j} (tau_j - tau_i)) / (1 + tau_j).
RynneResult rynne_oracle(int n, const std::vector<Rat>& tau);

enum class SelectionCase { all_large, split };

struct ExponentSelection {
  std::vector<Rat> b;  // positive, sums to 1 exactly
  std::vector<Rat> a;  // 1 + b
  std::vector<Rat> t;  // all >= 0
  SelectionCase case_tag = SelectionCase::all_large;
  std::optional<int> ell;  // split case only; 0 on the exact sum == 1 boundary
};

// Exponent choice for the face rect in coordinate j (1-based): t_j absorbs
// the thickness exponent tau_phi_j. Requires sum tau_psi >= 1.
ExponentSelection select_exponents(const ExponentProfile& profile, int j);
// Same weights with no face duty (for checking against the ball oracle).
ExponentSelection select_weights(int n, const std::vector<Rat>& tau_psi);

// Center offset of the face rect: zero except coordinate j, where
// gamma_j = (2 - phi_j(q)) psi_j(q) / (2q). Exact rational arithmetic;
// throws std::domain_error when a q-power is irrational.
std::vector<Rat> shifted_rect_gamma(const ExponentProfile& profile, int j, const Int& q);
// Scalar version; tau_phi_j == 0 gives the phi == 1 limit psi_j(q)/(2q).
Rat gamma_scalar(const Rat& tau_psi_j, const Rat& tau_phi_j, const Int& q);

struct PowerLawDecay {
  Rat coefficient;  // C >= 0 in |shift(q)| <= C q^-g
  Rat exponent;     // g
};

// Center drift is harmless when it decays at least as fast as required.
bool check_shift_condition(const PowerLawDecay& decay, const Rat& required_exponent);

enum class SeriesClass { divergent, convergent };
// sum_q q^n f(q^-(1+tau_psi)) with f(r) = r^s: divergent iff
// n - (1+tau_psi)s >= -1, i.e. s <= (n+1)/(1+tau_psi).
SeriesClass classify_hf_series(int n, const Rat& tau_psi, const Rat& s);

struct PerturbedDimension {
  std::optional<Rat> value;  // empty when outside the hypotheses
  std::string reason;
};
// Dimension of the drifted ball limsup set: (n+1)/(1+tau_psi) when
// tau_psi >= 1/n and the drift decay exponent is at least 1/n.
PerturbedDimension dim_perturbed(int n, const Rat& tau_psi, const PowerLawDecay& shift);

}  // namespace mtp
}  // namespace annuli
