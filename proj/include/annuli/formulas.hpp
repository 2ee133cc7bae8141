#pragma once

#include "annuli/profile.hpp"

namespace annuli {
namespace formulas {

// min{(n+1)/(1+tau_psi), (n+1+(n-1)tau_phi)/(1+tau_psi+tau_phi)}.
// Hypothesis tau_psi >= 1/n is flagged, not enforced.
DimensionResult dim_isotropic(int n, const Rat& tau_psi, const Rat& tau_phi);

// Branch values, exposed so witnesses can be re-evaluated independently.
Rat isotropic_first_branch(int n, const Rat& tau_psi);
Rat isotropic_second_branch(int n, const Rat& tau_psi, const Rat& tau_phi);

// Limit evaluations in the thickness exponent.
DimensionResult dim_isotropic_phi_zero_limit(int n, const Rat& tau_psi);
DimensionResult dim_isotropic_phi_infinity_limit(int n, const Rat& tau_psi);

// max over j of min over k of the weighted branch values.
DimensionResult dim_weighted(const ExponentProfile& profile);

// tau_k for target j: tau_psi_j + tau_phi_j when k == j, else tau_psi_k.
Rat weighted_tau(const ExponentProfile& profile, int j, int k);
Rat weighted_branch(const ExponentProfile& profile, int j, int k);

// Exponent at which the two isotropic branches swap: 2/(n-1). Meaningless
// in dimension 1 (the first branch is smaller for every thickness).
Rat threshold(int n);

enum class Regime { inner_sensitive, insensitive, boundary };
Regime regime(int n, const Rat& tau_psi);
const char* regime_name(Regime r);

struct ExactOrderBound {
  Rat bound;       // (n+1+(n-1)eps) / (1+tau_psi+eps)
  Rat comparison;  // (n+1)/(1+tau_psi); bound < comparison whenever asserted
};
// Only asserted below the threshold; throws std::domain_error otherwise.
ExactOrderBound exact_order_upper_bound(int n, const Rat& tau_psi, const Rat& eps);

}  // namespace formulas
}  // namespace annuli
