#include "annuli/mtp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace annuli {
namespace mtp {

void MtpInstance::validate() const {
  if (n < 1) throw std::invalid_argument("mtp: n must be >= 1");
  size_t un = static_cast<size_t>(n);
  if (delta.size() != un || a.size() != un || t.size() != un)
    throw std::invalid_argument("mtp: vectors must have length n");
  for (const auto& d : delta)
    if (d <= 0) throw std::invalid_argument("mtp: delta entries must be positive");
  for (const auto& v : a)
    if (v <= 0) throw std::invalid_argument("mtp: a entries must be positive");
  for (const auto& v : t)
    if (v < 0) throw std::invalid_argument("mtp: t entries must be >= 0");
  if (kappa < 0 || kappa > 1) throw std::invalid_argument("mtp: kappa must lie in [0, 1]");
}

WwResult ww_lower_bound(const MtpInstance& inst) {
  inst.validate();
  const int n = inst.n;

  // Candidate list: distinct a_i + t_i ascending, remembering the smallest
  // index that produces each value.
  std::vector<std::pair<Rat, int>> cands;
  for (int i = 0; i < n; ++i) {
    Rat v = inst.a[i] + inst.t[i];
    auto it = std::find_if(cands.begin(), cands.end(),
                           [&](const auto& c) { return c.first == v; });
    if (it == cands.end()) cands.emplace_back(v, i + 1);
  }
  std::sort(cands.begin(), cands.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  WwResult out;
  bool have = false;
  for (const auto& [A, first_index] : cands) {
    WwBreakdown row;
    row.candidate = A;
    Rat fixed(0), ratio_num(0);
    for (int i = 0; i < n; ++i) {
      if (inst.a[i] >= A) {
        row.k1.push_back(i + 1);
        fixed += inst.delta[i];
      } else if (inst.a[i] + inst.t[i] <= A) {
        row.k2.push_back(i + 1);
        fixed += inst.delta[i];
        ratio_num -= inst.t[i] * inst.delta[i];
      } else {
        row.k3.push_back(i + 1);
        fixed += inst.kappa * inst.delta[i];
        ratio_num += inst.a[i] * inst.delta[i];
      }
    }
    row.value = fixed + (1 - inst.kappa) * ratio_num / A;
    if (!have || row.value < out.value) {
      have = true;
      out.value = row.value;
      out.a_star = A;
      out.a_star_index = first_index;
      out.k1 = row.k1;
      out.k2 = row.k2;
      out.k3 = row.k3;
    }
    out.table.push_back(std::move(row));
  }
  return out;
}

RynneResult rynne_oracle(int n, const std::vector<Rat>& tau) {
  if (n < 1 || tau.size() != static_cast<size_t>(n))
    throw std::invalid_argument("rynne_oracle: tau must have length n >= 1");
  Rat sum(0);
  for (const auto& v : tau) {
    if (v <= 0) throw std::invalid_argument("rynne_oracle: tau entries must be positive");
    sum += v;
  }
  RynneResult out;
  out.outside_hypotheses = sum < 1;
  bool have = false;
  for (int j = 0; j < n; ++j) {
    Rat num = n + 1;
    for (int i = 0; i < n; ++i)
      if (tau[i] < tau[j]) num += tau[j] - tau[i];
    Rat v = num / (1 + tau[j]);
    if (!have || v < out.value) {
      have = true;
      out.value = v;
    }
  }
  return out;
}

namespace {

// Shared weight construction. Requires sum tau_psi >= 1.
std::pair<std::vector<Rat>, ExponentSelection> base_weights(int n,
                                                            const std::vector<Rat>& tau_psi) {
  if (n < 1 || tau_psi.size() != static_cast<size_t>(n))
    throw std::invalid_argument("select: tau_psi must have length n >= 1");
  Rat sum(0);
  for (const auto& v : tau_psi) {
    if (v <= 0) throw std::invalid_argument("select: tau_psi entries must be positive");
    sum += v;
  }
  if (sum < 1)
    throw std::domain_error("select: needs sum of tau_psi >= 1");

  ExponentSelection sel;
  std::vector<Rat> b(static_cast<size_t>(n));
  Rat inv_n(1, n);
  bool all_large = true;
  for (const auto& v : tau_psi) all_large = all_large && v >= inv_n;

  if (all_large) {
    sel.case_tag = SelectionCase::all_large;
    std::fill(b.begin(), b.end(), inv_n);
  } else {
    sel.case_tag = SelectionCase::split;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return tau_psi[x] > tau_psi[y]; });
    // tail[l] = sum of sorted tau_psi strictly after position l (1-based l).
    std::vector<Rat> tail(static_cast<size_t>(n) + 1, Rat(0));
    for (int l = n - 1; l >= 1; --l)
      tail[l] = tail[l + 1] + tau_psi[order[static_cast<size_t>(l)]];
    int ell = 0;
    for (int l = n - 1; l >= 1; --l) {
      if (tau_psi[order[static_cast<size_t>(l - 1)]] * l > 1 - tail[l]) {
        ell = l;
        break;
      }
    }
    sel.ell = ell;
    if (ell == 0) {
      // Exact boundary sum == 1: the exponents are already unit weights.
      b = tau_psi;
    } else {
      Rat avg = (1 - tail[ell]) / ell;
      for (int pos = 0; pos < n; ++pos) {
        size_t idx = static_cast<size_t>(order[static_cast<size_t>(pos)]);
        b[idx] = pos < ell ? avg : tau_psi[idx];
      }
    }
  }

  Rat check(0);
  for (const auto& v : b) {
    if (v <= 0) throw std::logic_error("select: nonpositive weight");
    check += v;
  }
  if (check != 1) throw std::logic_error("select: weights do not sum to 1");
  return {b, sel};
}

}  // namespace

ExponentSelection select_exponents(const ExponentProfile& profile, int j) {
  profile.validate();
  if (j < 1 || j > profile.n) throw std::invalid_argument("select_exponents: j out of range");
  auto [b, sel] = base_weights(profile.n, profile.tau_psi);
  sel.b = b;
  sel.a.resize(b.size());
  sel.t.resize(b.size());
  for (int i = 0; i < profile.n; ++i) {
    sel.a[i] = 1 + b[i];
    Rat target = profile.tau_psi[i];
    if (i + 1 == j) target += profile.tau_phi[i];
    sel.t[i] = target - b[i];
    if (sel.t[i] < 0) throw std::logic_error("select_exponents: negative stretch");
  }
  return sel;
}

ExponentSelection select_weights(int n, const std::vector<Rat>& tau_psi) {
  auto [b, sel] = base_weights(n, tau_psi);
  sel.b = b;
  sel.a.resize(b.size());
  sel.t.resize(b.size());
  for (int i = 0; i < n; ++i) {
    sel.a[i] = 1 + b[i];
    sel.t[i] = tau_psi[i] - b[i];
    if (sel.t[i] < 0) throw std::logic_error("select_weights: negative stretch");
  }
  return sel;
}

Rat gamma_scalar(const Rat& tau_psi_j, const Rat& tau_phi_j, const Int& q) {
  if (q < 1) throw std::invalid_argument("gamma: q must be >= 1");
  if (tau_psi_j <= 0) throw std::invalid_argument("gamma: tau_psi must be positive");
  if (tau_phi_j < 0) throw std::invalid_argument("gamma: tau_phi must be >= 0");
  auto psi_over_q = exact_pow(Rat(q), -(1 + tau_psi_j));
  auto phi = exact_pow(Rat(q), Rat(-tau_phi_j));
  if (!psi_over_q || !phi)
    throw std::domain_error("gamma: q-power is irrational for these exponents");
  return (2 - *phi) * *psi_over_q / 2;
}

std::vector<Rat> shifted_rect_gamma(const ExponentProfile& profile, int j, const Int& q) {
  profile.validate();
  if (j < 1 || j > profile.n) throw std::invalid_argument("gamma: j out of range");
  std::vector<Rat> out(static_cast<size_t>(profile.n), Rat(0));
  out[j - 1] = gamma_scalar(profile.tau_psi[j - 1], profile.tau_phi[j - 1], q);
  return out;
}

bool check_shift_condition(const PowerLawDecay& decay, const Rat& required_exponent) {
  if (decay.coefficient < 0)
    throw std::invalid_argument("shift condition: coefficient must be >= 0");
  return decay.exponent >= required_exponent;
}

SeriesClass classify_hf_series(int n, const Rat& tau_psi, const Rat& s) {
  if (n < 1) throw std::invalid_argument("series: n must be >= 1");
  if (tau_psi <= 0) throw std::invalid_argument("series: tau_psi must be positive");
  if (s <= 0) throw std::invalid_argument("series: s must be positive");
  return n - (1 + tau_psi) * s >= -1 ? SeriesClass::divergent : SeriesClass::convergent;
}

PerturbedDimension dim_perturbed(int n, const Rat& tau_psi, const PowerLawDecay& shift) {
  if (n < 1) throw std::invalid_argument("dim_perturbed: n must be >= 1");
  if (tau_psi <= 0) throw std::invalid_argument("dim_perturbed: tau_psi must be positive");
  PerturbedDimension out;
  Rat inv_n(1, n);
  if (tau_psi < inv_n) {
    out.reason = "tau_psi below 1/n";
    return out;
  }
  if (!check_shift_condition(shift, inv_n)) {
    out.reason = "shift decays too slowly (needs exponent >= 1/n)";
    return out;
  }
  out.value = Rat(n + 1) / (1 + tau_psi);
  out.reason = "critical series exponent, shift admissible";
  return out;
}

}  // namespace mtp
}  // namespace annuli
