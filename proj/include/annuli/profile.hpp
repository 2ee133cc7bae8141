#pragma once

#include <optional>
#include <vector>

#include "annuli/rational.hpp"

namespace annuli {

// Decay exponents of a power-law approximation problem: per coordinate i,
// the outer radius shrinks like q^-tau_psi_i (relative to 1/q) and the
// annular thickness fraction like q^-tau_phi_i.
struct ExponentProfile {
  int n = 0;
  std::vector<Rat> tau_psi;
  std::vector<Rat> tau_phi;

  static ExponentProfile isotropic(int n, const Rat& tau_psi, const Rat& tau_phi);

  bool is_isotropic() const;
  Rat tau_psi_sum() const;
  // Hypothesis of the weighted dimension formula.
  bool weighted_hypothesis() const { return tau_psi_sum() >= 1; }
  void validate() const;  // throws std::invalid_argument
};

enum class Branch { first, second, boundary };
const char* branch_name(Branch b);

// A dimension value together with the optimizer that produced it. Indices
// are 1-based to match the j/k ranges the formulas are written in.
struct DimensionResult {
  Rat value;
  Branch branch = Branch::first;
  std::optional<int> witness_j;
  std::vector<int> witness_k;  // per-j inner argmin; empty when not applicable
  bool tie = false;
  bool outside_hypotheses = false;

  double value_as_double() const { return to_double(value); }
};

}  // namespace annuli
