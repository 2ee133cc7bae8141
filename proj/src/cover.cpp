#include "annuli/cover.hpp"

#include <ostream>
#include <stdexcept>

namespace annuli {
namespace cover {

namespace {

Rat tau_for(const ExponentProfile& profile, int j, int k) {
  if (k == j) return profile.tau_psi[j - 1] + profile.tau_phi[j - 1];
  return profile.tau_psi[k - 1];
}

void check_indices(const ExponentProfile& profile, int j, int k) {
  profile.validate();
  if (j < 1 || j > profile.n) throw std::invalid_argument("cover: j out of range");
  if (k < 1 || k > profile.n) throw std::invalid_argument("cover: k out of range");
}

RatInterval clamp_at_one(const RatInterval& iv) {
  RatInterval out = iv;
  if (out.lo < 1) out.lo = 1;
  if (out.hi < 1) out.hi = 1;
  return out;
}

}  // namespace

RatInterval predicted_cover_count(const ExponentProfile& profile, const Int& q, int j, int k,
                                  unsigned bits) {
  check_indices(profile, j, k);
  if (q < 1) throw std::invalid_argument("cover: q must be >= 1");
  Rat tau_k = tau_for(profile, j, k);
  RatInterval total = clamp_at_one(
      pow_bracket(Rat(q), Rat(tau_k - profile.tau_psi[j - 1] - profile.tau_phi[j - 1]), bits));
  for (int i = 1; i <= profile.n; ++i) {
    if (i == j) continue;
    RatInterval factor =
        clamp_at_one(pow_bracket(Rat(q), Rat(tau_k - profile.tau_psi[i - 1]), bits));
    total = interval_mul(total, factor);
  }
  return total;
}

Int measured_cover_count(const geom::Rect& rect, const Rat& r) {
  if (r <= 0) throw std::invalid_argument("cover: cell radius must be positive");
  Rat side = 2 * r;
  Int cells = 1;
  for (size_t i = 0; i < rect.center.size(); ++i) {
    const Rat& rad = rect.radii[i].value();
    Int hi = floor_rat(Rat((rect.center[i] + rad) / side));
    Int lo = floor_rat(Rat((rect.center[i] - rad) / side));
    cells *= hi - lo + 1;
  }
  return cells;
}

CriticalResult critical_exponent(const ExponentProfile& profile) {
  profile.validate();
  const int n = profile.n;
  CriticalResult out;
  out.outside_hypotheses = !profile.weighted_hypothesis();
  out.witness_k.resize(static_cast<size_t>(n));

  bool have_outer = false;
  for (int j = 1; j <= n; ++j) {
    bool have_inner = false;
    Rat inner_best(0);
    int inner_arg = 0;
    for (int k = 1; k <= n; ++k) {
      Rat tau_k = tau_for(profile, j, k);
      // Exponent of the s-sum at scale q^-(1+tau_k): n dimensions of centers,
      // plus one stretched factor per coordinate the ball is thinner than.
      Rat exponent = n;
      for (int i = 1; i <= n; ++i) {
        if (i == j) continue;
        if (profile.tau_psi[i - 1] < tau_k) exponent += tau_k - profile.tau_psi[i - 1];
      }
      Rat face = tau_k - profile.tau_psi[j - 1] - profile.tau_phi[j - 1];
      if (face > 0) exponent += face;
      // Divergence boundary of sum q^(exponent) (q^-(1+tau_k))^s.
      Rat s = (exponent + 1) / (1 + tau_k);
      out.table.push_back({j, k, tau_k, s});
      if (!have_inner || s < inner_best) {
        have_inner = true;
        inner_best = s;
        inner_arg = k;
      }
    }
    out.witness_k[static_cast<size_t>(j - 1)] = inner_arg;
    if (!have_outer || inner_best > out.value) {
      have_outer = true;
      out.value = inner_best;
      out.witness_j = j;
    }
  }
  return out;
}

std::vector<CoverReport> comparability_report(const ExponentProfile& profile,
                                              const std::vector<Int>& qs, unsigned bits) {
  profile.validate();
  std::vector<CoverReport> out;
  for (const Int& q : qs) {
    if (q < 1) throw std::invalid_argument("cover: q must be >= 1");
    std::vector<Int> origin(static_cast<size_t>(profile.n), Int(0));
    geom::RationalPoint p(origin, q);
    for (int j = 1; j <= profile.n; ++j) {
      geom::Rect rect = geom::shifted_rect(p, profile, j, 1, bits);
      for (int k = 1; k <= profile.n; ++k) {
        CoverReport row;
        row.q = q;
        row.j = j;
        row.k = k;
        auto scale = exact_pow(Rat(q), Rat(-(1 + tau_for(profile, j, k))));
        if (!scale) throw std::domain_error("cover: scale is irrational for this q");
        row.scale = *scale;
        RatInterval predicted = predicted_cover_count(profile, q, j, k, bits);
        if (!predicted.is_exact())
          throw std::domain_error("cover: predicted count is irrational for this q");
        row.predicted = predicted.lo;
        row.measured = measured_cover_count(rect, row.scale);
        row.ratio = Rat(row.measured) / row.predicted;
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

void write_cover_csv(const std::vector<CoverReport>& reports, std::ostream& out) {
  out << "q,j,k,predicted,measured,ratio,scale_num,scale_den\n";
  for (const auto& r : reports) {
    out << r.q.str() << ',' << r.j << ',' << r.k << ',' << to_decimal_string(r.predicted)
        << ',' << r.measured.str() << ',' << to_decimal_string(r.ratio) << ','
        << numerator(r.scale).str() << ',' << denominator(r.scale).str() << '\n';
  }
}

}  // namespace cover
}  // namespace annuli
