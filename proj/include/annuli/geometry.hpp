#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "annuli/algebraic.hpp"
#include "annuli/profile.hpp"
#include "annuli/rng.hpp"

namespace annuli {
namespace geom {

// p/q with integer p_i in [0, q], living in the closed unit cube.
struct RationalPoint {
  std::vector<Int> p;
  Int q;

  RationalPoint() : q(1) {}
  RationalPoint(std::vector<Int> p_, Int q_);
  int dim() const { return static_cast<int>(p.size()); }
  std::vector<Rat> coords() const;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct Norm {
  std::optional<Rat> rho;  // empty: max norm

  static Norm inf() { return {}; }
  static Norm lp(const Rat& rho);
  bool is_inf() const { return !rho.has_value(); }
  bool integer_rho() const { return rho && denominator(*rho) == 1; }
  friend bool operator==(const Norm&, const Norm&) = default;
};

// Radius known exactly, or enclosed in [lo, hi] when the true value is
// irrational. Family builders keep the full enclosure so callers can pick
// whichever conservative direction they need.
struct RadiusBound {
  Rat lo;
  Rat hi;

  RadiusBound() = default;
  RadiusBound(const Rat& exact) : lo(exact), hi(exact) {}
  RadiusBound(const Rat& lo_, const Rat& hi_);
  static RadiusBound from_interval(const RatInterval& iv) { return {iv.lo, iv.hi}; }

  bool is_exact() const { return lo == hi; }
  const Rat& value() const;  // throws unless exact
  friend bool operator==(const RadiusBound&, const RadiusBound&) = default;
};

// Open ball in the given norm.
struct Ball {
  std::vector<Rat> center;
  RadiusBound radius;
  Norm norm;
  bool rounded_inward = false;
  friend bool operator==(const Ball&, const Ball&) = default;
};

// Closed axis-aligned box, possibly degenerate (zero radius).
struct Rect {
  std::vector<Rat> center;
  std::vector<RadiusBound> radii;
  bool rounded_inward = false;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Open max-norm annulus: inner < ||x - c||_inf < outer.
struct Annulus {
  std::vector<Rat> center;
  RadiusBound outer;
  RadiusBound inner;
  friend bool operator==(const Annulus&, const Annulus&) = default;
};

// Open box minus a closed inner box: |x_i - c_i| < outer_i for all i, and
// |x_j - c_j| > inner_j for at least one j.
struct RectAnnulus {
  std::vector<Rat> center;
  std::vector<RadiusBound> outer;
  std::vector<RadiusBound> inner;
  friend bool operator==(const RectAnnulus&, const RectAnnulus&) = default;
};

// ||x - c||_inf < r and ||x - c||_rho > r: the sliver between the max-norm
// ball and the rho-norm ball of one common radius.
struct QuasiAnnulus {
  std::vector<Rat> center;
  RadiusBound radius;
  Norm inner_norm;
  friend bool operator==(const QuasiAnnulus&, const QuasiAnnulus&) = default;
};

using Shape = std::variant<Ball, Rect, Annulus, RectAnnulus, QuasiAnnulus>;

int shape_dim(const Shape& s);
void validate(const Shape& s);  // throws std::invalid_argument

// Part of the shape possibly sticks out of [0,1]^n (by bounding box).
bool shape_clipped(const Shape& s);
// Measure-zero inner hole (all inner radii exactly 0); families produce
// these at q = 1, where the thickness fraction is 1.
bool shape_degenerate(const Shape& s);

enum class Region { inside, outside, indeterminate };

// Tri-state membership. "inside"/"outside" are certificates; "indeterminate"
// can only appear with non-exact radius enclosures or non-integer rho norms
// (which are compared in floating point with tolerance 1e-12).
Region classify(const Shape& s, const std::vector<Rat>& x);

// Superset reading: everything not certainly outside counts as contained.
bool contains(const Shape& s, const std::vector<Rat>& x);

// ---- power-law families around p/q ----
// Scale conventions: outer radius psi(q)/q = q^-(1+tau_psi) per coordinate,
// relative thickness phi(q) = q^-tau_phi.

Ball ball_family(const RationalPoint& p, const Rat& tau_psi, const Norm& norm,
                 unsigned bits = 96);
Annulus annulus_family(const RationalPoint& p, const Rat& tau_psi, const Rat& tau_phi,
                       unsigned bits = 96);
RectAnnulus rect_annulus_family(const RationalPoint& p, const ExponentProfile& profile,
                                unsigned bits = 96);
QuasiAnnulus quasi_annulus_family(const RationalPoint& p, const Rat& tau_psi,
                                  const Rat& rho, unsigned bits = 96);

// Box hugging the face of the rect-annulus in coordinate j (1-based), offset
// by sign * (2 - phi_j) psi_j / (2q) and phi_j psi_j / (2q) thick there.
Rect shifted_rect(const RationalPoint& p, const ExponentProfile& profile, int j,
                  int sign, unsigned bits = 96);

// The 2n shifted rects for j = 1..n, + before -, whose union is the closure
// of the rect-annulus up to shared faces.
std::vector<Rect> rect_annulus_decompose(const RationalPoint& p,
                                         const ExponentProfile& profile,
                                         unsigned bits = 96);

// ---- membership scan ----

struct ScanOptions {
  bool coprime_only = false;
  unsigned bits = 96;
};

// All q <= q_max and p in {0..q}^n whose rect-annulus contains x, in
// (q ascending, p lexicographic) order.
std::vector<RationalPoint> membership_scan(const std::vector<Rat>& x,
                                           const ExponentProfile& profile, const Int& q_max,
                                           const ScanOptions& opts = {});

// ---- inscribed cube ----

enum class CubeStyle {
  corrected,   // offset r(1+u)/2, half-width r(1-u)/2, u = n^(-1/rho)
  as_printed,  // offset r(v+u)/2, half-width r(v-u), v = n^(1/rho)
};

// Axis-aligned cube sitting inside the quasi-annulus of radius r at p/q.
// Coordinates live in Q(n^(1/rho)) and are kept exact.
struct InscribedCube {
  int n = 0;
  std::vector<Rat> base;  // p/q
  std::vector<int> signs;
  Rat r;
  Rat rho;
  CubeStyle style = CubeStyle::corrected;
  FieldPtr field;
  AlgReal offset;      // distance from base to cube center, per coordinate
  AlgReal half_width;  // half the side
  bool signs_adjusted = false;

  AlgReal center_coord(int i) const;  // 1-based
  std::vector<AlgReal> corner(const std::vector<int>& eps) const;
};

// signs requests the octant (per-coordinate +-1); a coordinate whose
// requested side exits [0,1] is flipped when the other side fits, and the
// construction fails only if neither side fits. rho may be rational.
InscribedCube inscribed_cube(const RationalPoint& p, const Rat& r, const Rat& rho,
                             std::vector<int> signs, CubeStyle style = CubeStyle::corrected);

struct CubeCertificate {
  struct Corner {
    std::vector<int> eps;  // +1: far face in that coordinate
    int inf_cmp;           // sign of ||y - base||_inf - r
    int rho_cmp;           // sign of ||y - base||_rho - r
  };
  std::vector<Corner> corners;
  bool inf_ok = true;  // every corner has inf_cmp <= 0
  bool rho_ok = true;  // every corner has rho_cmp >= 0
  bool ok() const { return inf_ok && rho_ok; }
};

// Exact corner checks against the quasi-annulus boundary. Integer rho only.
CubeCertificate corner_certificate(const InscribedCube& cube);

// Conservative rational cube inside the algebraic one, as a max-norm ball.
Ball cube_to_shape(const InscribedCube& cube, unsigned bits = 96);

// ---- measure and sampling helpers ----

Rat rect_volume(const Rect& r);
Rat rect_union_volume(const std::vector<Rect>& rects);  // inclusion-exclusion
Rat rect_annulus_volume(const RectAnnulus& a);

std::vector<Rat> sample_rect_interior(const Rect& r, SplitMix64& rng,
                                      unsigned grid_bits = 20);
std::vector<Rat> sample_rect_annulus_interior(const RectAnnulus& a, SplitMix64& rng,
                                              unsigned grid_bits = 20,
                                              int max_tries = 100000);

}  // namespace geom
}  // namespace annuli
