#include "annuli/formulas.hpp"

#include <stdexcept>

namespace annuli {

ExponentProfile ExponentProfile::isotropic(int n, const Rat& tau_psi, const Rat& tau_phi) {
  ExponentProfile p;
  p.n = n;
  p.tau_psi.assign(static_cast<size_t>(n > 0 ? n : 0), tau_psi);
  p.tau_phi.assign(static_cast<size_t>(n > 0 ? n : 0), tau_phi);
  p.validate();
  return p;
}

bool ExponentProfile::is_isotropic() const {
  for (int i = 1; i < n; ++i)
    if (tau_psi[i] != tau_psi[0] || tau_phi[i] != tau_phi[0]) return false;
  return true;
}

Rat ExponentProfile::tau_psi_sum() const {
  Rat s = 0;
  for (const auto& t : tau_psi) s += t;
  return s;
}

void ExponentProfile::validate() const {
  if (n < 1) throw std::invalid_argument("profile: n must be >= 1");
  if (tau_psi.size() != static_cast<size_t>(n) || tau_phi.size() != static_cast<size_t>(n))
    throw std::invalid_argument("profile: exponent vectors must have length n");
  for (const auto& t : tau_psi)
    if (t <= 0) throw std::invalid_argument("profile: tau_psi entries must be positive");
  for (const auto& t : tau_phi)
    if (t <= 0) throw std::invalid_argument("profile: tau_phi entries must be positive");
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::first: return "first";
    case Branch::second: return "second";
    case Branch::boundary: return "boundary";
  }
  return "?";
}

namespace formulas {

namespace {

void check_scalar(int n, const Rat& tau_psi, const Rat& tau_phi) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (tau_psi <= 0) throw std::invalid_argument("tau_psi must be positive");
  if (tau_phi <= 0) throw std::invalid_argument("tau_phi must be positive");
}

}  // namespace

Rat isotropic_first_branch(int n, const Rat& tau_psi) {
  return Rat(n + 1) / (1 + tau_psi);
}

Rat isotropic_second_branch(int n, const Rat& tau_psi, const Rat& tau_phi) {
  return (n + 1 + (n - 1) * tau_phi) / (1 + tau_psi + tau_phi);
}

DimensionResult dim_isotropic(int n, const Rat& tau_psi, const Rat& tau_phi) {
  check_scalar(n, tau_psi, tau_phi);
  Rat first = isotropic_first_branch(n, tau_psi);
  Rat second = isotropic_second_branch(n, tau_psi, tau_phi);
  DimensionResult out;
  out.outside_hypotheses = tau_psi * n < 1;
  if (first < second) {
    out.value = first;
    out.branch = Branch::first;
  } else if (second < first) {
    out.value = second;
    out.branch = Branch::second;
  } else {
    out.value = first;
    out.branch = Branch::boundary;
    out.tie = true;
  }
  return out;
}

DimensionResult dim_isotropic_phi_zero_limit(int n, const Rat& tau_psi) {
  check_scalar(n, tau_psi, 1);
  // Both branches meet at (n+1)/(1+tau_psi) as tau_phi -> 0.
  DimensionResult out;
  out.value = isotropic_first_branch(n, tau_psi);
  out.branch = Branch::boundary;
  out.outside_hypotheses = tau_psi * n < 1;
  return out;
}

DimensionResult dim_isotropic_phi_infinity_limit(int n, const Rat& tau_psi) {
  check_scalar(n, tau_psi, 1);
  Rat first = isotropic_first_branch(n, tau_psi);
  Rat second_limit = n >= 2 ? Rat(n - 1) : Rat(0);
  DimensionResult out;
  out.outside_hypotheses = tau_psi * n < 1;
  if (first < second_limit) {
    out.value = first;
    out.branch = Branch::first;
  } else if (second_limit < first) {
    out.value = second_limit;
    out.branch = Branch::second;
  } else {
    out.value = first;
    out.branch = Branch::boundary;
    out.tie = true;
  }
  return out;
}

Rat weighted_tau(const ExponentProfile& profile, int j, int k) {
  if (j < 1 || j > profile.n || k < 1 || k > profile.n)
    throw std::invalid_argument("weighted_tau: index out of range");
  if (k == j) return profile.tau_psi[j - 1] + profile.tau_phi[j - 1];
  return profile.tau_psi[k - 1];
}

Rat weighted_branch(const ExponentProfile& profile, int j, int k) {
  Rat tk = weighted_tau(profile, j, k);
  Rat num = profile.n + 1;
  for (int i = 1; i <= profile.n; ++i) {
    if (i == j) continue;
    if (profile.tau_psi[i - 1] < tk) num += tk - profile.tau_psi[i - 1];
  }
  Rat slack = tk - profile.tau_psi[j - 1] - profile.tau_phi[j - 1];
  if (slack > 0) num += slack;
  return num / (1 + tk);
}

DimensionResult dim_weighted(const ExponentProfile& profile) {
  profile.validate();
  const int n = profile.n;
  DimensionResult out;
  out.outside_hypotheses = !profile.weighted_hypothesis();
  out.witness_k.assign(static_cast<size_t>(n), 0);

  std::vector<Rat> best(static_cast<size_t>(n));
  std::vector<bool> inner_tie(static_cast<size_t>(n), false);
  std::vector<bool> inner_mixed(static_cast<size_t>(n), false);
  for (int j = 1; j <= n; ++j) {
    Rat min_val;
    int min_k = 0;
    int hits = 0;
    bool hit_self = false, hit_other = false;
    for (int k = 1; k <= n; ++k) {
      Rat v = weighted_branch(profile, j, k);
      if (min_k == 0 || v < min_val) {
        min_val = v;
        min_k = k;
        hits = 1;
        hit_self = k == j;
        hit_other = k != j;
      } else if (v == min_val) {
        ++hits;
        hit_self = hit_self || k == j;
        hit_other = hit_other || k != j;
      }
    }
    best[j - 1] = min_val;
    out.witness_k[j - 1] = min_k;
    inner_tie[j - 1] = hits > 1;
    inner_mixed[j - 1] = hit_self && hit_other;
  }

  int arg_j = 1;
  int outer_hits = 1;
  for (int j = 2; j <= n; ++j) {
    if (best[j - 1] > best[arg_j - 1]) {
      arg_j = j;
      outer_hits = 1;
    } else if (best[j - 1] == best[arg_j - 1]) {
      ++outer_hits;
    }
  }

  out.value = best[arg_j - 1];
  out.witness_j = arg_j;
  out.tie = outer_hits > 1 || inner_tie[arg_j - 1];
  int kstar = out.witness_k[arg_j - 1];
  if (inner_mixed[arg_j - 1])
    out.branch = Branch::boundary;
  else
    out.branch = kstar == arg_j ? Branch::second : Branch::first;
  return out;
}

Rat threshold(int n) {
  if (n < 2)
    throw std::invalid_argument("threshold: defined only for dimension >= 2");
  return Rat(2, n - 1);
}

Regime regime(int n, const Rat& tau_psi) {
  Rat t = threshold(n);
  if (tau_psi <= 0) throw std::invalid_argument("regime: tau_psi must be positive");
  if (tau_psi < t) return Regime::inner_sensitive;
  if (tau_psi > t) return Regime::insensitive;
  return Regime::boundary;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::inner_sensitive: return "inner-sensitive";
    case Regime::insensitive: return "insensitive";
    case Regime::boundary: return "boundary";
  }
  return "?";
}

ExactOrderBound exact_order_upper_bound(int n, const Rat& tau_psi, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("exact_order_upper_bound: eps must be positive");
  Regime r = regime(n, tau_psi);  // validates n and tau_psi
  if (r != Regime::inner_sensitive)
    throw std::domain_error(
        "exact_order_upper_bound: only asserted for tau_psi below the threshold");
  ExactOrderBound out;
  out.bound = (n + 1 + (n - 1) * eps) / (1 + tau_psi + eps);
  out.comparison = isotropic_first_branch(n, tau_psi);
  return out;
}

}  // namespace formulas
}  // namespace annuli
