#pragma once

#include <iosfwd>
#include <vector>

#include "annuli/geometry.hpp"
#include "annuli/profile.hpp"

namespace annuli {
namespace cover {

// Ball count predicted for covering the face rect in coordinate j at scale
// q^-(1+tau_k), with tau_k = tau_psi_j + tau_phi_j when k == j and tau_psi_k
// otherwise:
//   max{1, q^(tau_k - tau_psi_j - tau_phi_j)} * prod_{i != j} max{1, q^(tau_k - tau_psi_i)}
// Exact (zero-width interval) whenever every q-power is rational.
RatInterval predicted_cover_count(const ExponentProfile& profile, const Int& q, int j, int k,
                                  unsigned bits = 96);

// Number of grid cells of side 2r meeting the closed rectangle, on the grid
// anchored at the origin:
//   prod_i (floor((c_i + rho_i) / (2r)) - floor((c_i - rho_i) / (2r)) + 1)
// Cells are half-open [2rm, 2r(m+1)), so a face lying exactly on a cell wall
// counts the cell opening at that wall. Radii must be exact.
Int measured_cover_count(const geom::Rect& rect, const Rat& r);

// One s-sum critical exponent per (j, k): the s solving
//   n + sum_{i != j: tau_psi_i < tau_k} (tau_k - tau_psi_i)
//     + max{0, tau_k - tau_psi_j - tau_phi_j} - (1 + tau_k) s = -1.
struct CriticalEntry {
  int j = 0;
  int k = 0;
  Rat tau_k;
  Rat s;
};

struct CriticalResult {
  Rat value;  // max over j of min over k
  int witness_j = 0;
  std::vector<int> witness_k;  // inner argmin for each j (1-based)
  std::vector<CriticalEntry> table;  // all n^2 entries, j-major
  bool outside_hypotheses = false;
};

CriticalResult critical_exponent(const ExponentProfile& profile);

struct CoverReport {
  Int q;
  int j = 0;
  int k = 0;
  Rat predicted;
  Int measured;
  Rat ratio;  // measured / predicted
  Rat scale;  // ball radius q^-(1+tau_k)
};

// Predicted vs measured counts for the sign=+1 face rects at p = 0, all
// (j, k) pairs, each listed q. Needs every scale and prediction to come out
// exactly rational; throws std::domain_error otherwise.
std::vector<CoverReport> comparability_report(const ExponentProfile& profile,
                                              const std::vector<Int>& qs, unsigned bits = 96);

// CSV with header q,j,k,predicted,measured,ratio,scale_num,scale_den.
// Predicted and ratio are 12-significant-digit decimals.
void write_cover_csv(const std::vector<CoverReport>& reports, std::ostream& out);

}  // namespace cover
}  // namespace annuli
