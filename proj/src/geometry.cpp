#include "annuli/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace annuli {
namespace geom {

namespace {

constexpr unsigned kMaxBits = 1u << 14;
constexpr unsigned kMaxIntegerRho = 1024;
constexpr double kFloatTol = 1e-12;

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat rat_pow_uint(const Rat& base, unsigned e) {
  Rat acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::vector<Rat> diffs(const std::vector<Rat>& center, const std::vector<Rat>& x) {
  if (center.size() != x.size())
    throw std::invalid_argument("point dimension does not match shape dimension");
  std::vector<Rat> d(x.size());
  for (size_t i = 0; i < x.size(); ++i) d[i] = rat_abs(x[i] - center[i]);
  return d;
}

// Sign of ||d|| - r. Exact for the max norm and integer rho; floating with
// absolute tolerance 1e-12 otherwise (empty when within tolerance).
std::optional<int> norm_cmp(const std::vector<Rat>& d, const Norm& norm, const Rat& r) {
  if (norm.is_inf()) {
    Rat m(0);
    for (const auto& v : d)
      if (v > m) m = v;
    if (m < r) return -1;
    if (m > r) return 1;
    return 0;
  }
  const Rat& rho = *norm.rho;
  if (norm.integer_rho()) {
    if (numerator(rho) > kMaxIntegerRho)
      throw std::domain_error("norm exponent too large");
    unsigned e = numerator(rho).convert_to<unsigned>();
    Rat sum(0);
    for (const auto& v : d) sum += rat_pow_uint(v, e);
    Rat re = rat_pow_uint(r, e);
    if (sum < re) return -1;
    if (sum > re) return 1;
    return 0;
  }
  double e = to_double(rho);
  double sum = 0;
  for (const auto& v : d) {
    double dv = to_double(v);
    if (dv > 0) sum += std::pow(dv, e);
  }
  double re = std::pow(to_double(r), e);
  if (std::abs(sum - re) <= kFloatTol) return std::nullopt;
  return sum < re ? -1 : 1;
}

}  // namespace

RationalPoint::RationalPoint(std::vector<Int> p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
  if (q < 1) throw std::invalid_argument("RationalPoint: q must be >= 1");
  for (const auto& c : p)
    if (c < 0 || c > q) throw std::invalid_argument("RationalPoint: p_i must lie in [0, q]");
}

std::vector<Rat> RationalPoint::coords() const {
  std::vector<Rat> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i], q);
  return out;
}

Norm Norm::lp(const Rat& rho) {
  if (rho <= 0) throw std::invalid_argument("Norm: rho must be positive");
  Norm n;
  n.rho = rho;
  return n;
}

RadiusBound::RadiusBound(const Rat& lo_, const Rat& hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw std::invalid_argument("RadiusBound: lo > hi");
}

const Rat& RadiusBound::value() const {
  if (!is_exact()) throw std::domain_error("RadiusBound: not exact");
  return lo;
}

int shape_dim(const Shape& s) {
  return std::visit([](const auto& v) { return static_cast<int>(v.center.size()); }, s);
}

void validate(const Shape& s) {
  int n = shape_dim(s);
  if (n < 1) throw std::invalid_argument("shape: empty center");
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Ball>) {
          if (v.radius.lo <= 0) throw std::invalid_argument("ball: radius must be positive");
          if (v.norm.rho && *v.norm.rho <= 0)
            throw std::invalid_argument("ball: norm exponent must be positive");
        } else if constexpr (std::is_same_v<T, Rect>) {
          if (v.radii.size() != static_cast<size_t>(n))
            throw std::invalid_argument("rect: radii size mismatch");
          for (const auto& r : v.radii)
            if (r.lo < 0) throw std::invalid_argument("rect: radii must be >= 0");
        } else if constexpr (std::is_same_v<T, Annulus>) {
          if (v.outer.lo <= 0) throw std::invalid_argument("annulus: outer radius must be positive");
          if (v.inner.lo < 0) throw std::invalid_argument("annulus: inner radius must be >= 0");
          if (v.inner.lo > v.outer.hi)
            throw std::invalid_argument("annulus: inner radius exceeds outer");
          if (v.inner.is_exact() && v.outer.is_exact() && v.inner.lo >= v.outer.lo)
            throw std::invalid_argument("annulus: inner radius must be below outer");
        } else if constexpr (std::is_same_v<T, RectAnnulus>) {
          if (v.outer.size() != static_cast<size_t>(n) || v.inner.size() != static_cast<size_t>(n))
            throw std::invalid_argument("rect-annulus: radii size mismatch");
          for (int i = 0; i < n; ++i) {
            if (v.outer[i].lo <= 0)
              throw std::invalid_argument("rect-annulus: outer radii must be positive");
            if (v.inner[i].lo < 0)
              throw std::invalid_argument("rect-annulus: inner radii must be >= 0");
            if (v.inner[i].lo > v.outer[i].hi)
              throw std::invalid_argument("rect-annulus: inner radius exceeds outer");
            if (v.inner[i].is_exact() && v.outer[i].is_exact() && v.inner[i].lo >= v.outer[i].lo)
              throw std::invalid_argument("rect-annulus: inner radius must be below outer");
          }
        } else if constexpr (std::is_same_v<T, QuasiAnnulus>) {
          if (v.radius.lo <= 0)
            throw std::invalid_argument("quasi-annulus: radius must be positive");
          if (v.inner_norm.is_inf())
            throw std::invalid_argument("quasi-annulus: inner norm must differ from max norm");
          if (*v.inner_norm.rho <= 0)
            throw std::invalid_argument("quasi-annulus: norm exponent must be positive");
        }
      },
      s);
}

bool shape_clipped(const Shape& s) {
  const auto& center = std::visit([](const auto& v) -> const std::vector<Rat>& { return v.center; }, s);
  int n = static_cast<int>(center.size());
  std::vector<Rat> reach(n);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        for (int i = 0; i < n; ++i) {
          if constexpr (std::is_same_v<T, Ball>) reach[i] = v.radius.hi;
          else if constexpr (std::is_same_v<T, Rect>) reach[i] = v.radii[i].hi;
          else if constexpr (std::is_same_v<T, Annulus>) reach[i] = v.outer.hi;
          else if constexpr (std::is_same_v<T, RectAnnulus>) reach[i] = v.outer[i].hi;
          else reach[i] = v.radius.hi;
        }
      },
      s);
  for (int i = 0; i < n; ++i)
    if (center[i] - reach[i] < 0 || center[i] + reach[i] > 1) return true;
  return false;
}

bool shape_degenerate(const Shape& s) {
  if (const auto* a = std::get_if<Annulus>(&s))
    return a->inner.is_exact() && a->inner.lo == 0;
  if (const auto* ra = std::get_if<RectAnnulus>(&s)) {
    for (const auto& r : ra->inner)
      if (!r.is_exact() || r.lo != 0) return false;
    return true;
  }
  return false;
}

Region classify(const Shape& s, const std::vector<Rat>& x) {
  return std::visit(
      [&](const auto& v) -> Region {
        using T = std::decay_t<decltype(v)>;
        std::vector<Rat> d = diffs(v.center, x);
        if constexpr (std::is_same_v<T, Ball>) {
          auto lo = norm_cmp(d, v.norm, v.radius.lo);
          if (lo && *lo < 0) return Region::inside;
          auto hi = norm_cmp(d, v.norm, v.radius.hi);
          if (hi && *hi >= 0) return Region::outside;
          return Region::indeterminate;
        } else if constexpr (std::is_same_v<T, Rect>) {
          bool all_in = true;
          for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] > v.radii[i].hi) return Region::outside;
            if (d[i] > v.radii[i].lo) all_in = false;
          }
          return all_in ? Region::inside : Region::indeterminate;
        } else if constexpr (std::is_same_v<T, Annulus>) {
          Rat m(0);
          for (const auto& t : d)
            if (t > m) m = t;
          if (m >= v.outer.hi || m <= v.inner.lo) return Region::outside;
          if (m < v.outer.lo && m > v.inner.hi) return Region::inside;
          return Region::indeterminate;
        } else if constexpr (std::is_same_v<T, RectAnnulus>) {
          bool out_certain = false, out_possible = false;
          bool esc_certain = false, esc_possible = false;
          for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] >= v.outer[i].hi) out_certain = true;
            if (d[i] >= v.outer[i].lo) out_possible = true;
            if (d[i] > v.inner[i].hi) esc_certain = true;
            if (d[i] > v.inner[i].lo) esc_possible = true;
          }
          if (out_certain || !esc_possible) return Region::outside;
          if (!out_possible && esc_certain) return Region::inside;
          return Region::indeterminate;
        } else {
          auto inf_lo = norm_cmp(d, Norm::inf(), v.radius.lo);
          auto inf_hi = norm_cmp(d, Norm::inf(), v.radius.hi);
          auto rho_lo = norm_cmp(d, v.inner_norm, v.radius.lo);
          auto rho_hi = norm_cmp(d, v.inner_norm, v.radius.hi);
          if ((inf_hi && *inf_hi >= 0) || (rho_lo && *rho_lo <= 0)) return Region::outside;
          if (inf_lo && *inf_lo < 0 && rho_hi && *rho_hi > 0) return Region::inside;
          return Region::indeterminate;
        }
      },
      s);
}

bool contains(const Shape& s, const std::vector<Rat>& x) {
  return classify(s, x) != Region::outside;
}

namespace {

RatInterval qpow(const Int& q, const Rat& e, unsigned bits) {
  return pow_bracket(Rat(q), e, bits);
}

void check_family_args(const RationalPoint& p, const Rat& tau_psi) {
  if (p.dim() < 1) throw std::invalid_argument("family: empty point");
  if (tau_psi <= 0) throw std::invalid_argument("family: tau_psi must be positive");
}

}  // namespace

Ball ball_family(const RationalPoint& p, const Rat& tau_psi, const Norm& norm, unsigned bits) {
  check_family_args(p, tau_psi);
  Ball b;
  b.center = p.coords();
  b.radius = RadiusBound::from_interval(qpow(p.q, -(1 + tau_psi), bits));
  b.norm = norm;
  validate(Shape(b));
  return b;
}

Annulus annulus_family(const RationalPoint& p, const Rat& tau_psi, const Rat& tau_phi,
                       unsigned bits) {
  check_family_args(p, tau_psi);
  if (tau_phi <= 0) throw std::invalid_argument("family: tau_phi must be positive");
  RatInterval outer = qpow(p.q, -(1 + tau_psi), bits);
  RatInterval phi = qpow(p.q, -tau_phi, bits);
  RatInterval inner = interval_mul(interval_sub(RatInterval(Rat(1)), phi), outer);
  Annulus a;
  a.center = p.coords();
  a.outer = RadiusBound::from_interval(outer);
  a.inner = RadiusBound::from_interval(inner);
  validate(Shape(a));
  return a;
}

RectAnnulus rect_annulus_family(const RationalPoint& p, const ExponentProfile& profile,
                                unsigned bits) {
  profile.validate();
  if (p.dim() != profile.n)
    throw std::invalid_argument("family: point dimension does not match profile");
  RectAnnulus a;
  a.center = p.coords();
  a.outer.resize(profile.n);
  a.inner.resize(profile.n);
  for (int i = 0; i < profile.n; ++i) {
    RatInterval outer = qpow(p.q, -(1 + profile.tau_psi[i]), bits);
    RatInterval phi = qpow(p.q, -profile.tau_phi[i], bits);
    RatInterval inner = interval_mul(interval_sub(RatInterval(Rat(1)), phi), outer);
    a.outer[i] = RadiusBound::from_interval(outer);
    a.inner[i] = RadiusBound::from_interval(inner);
  }
  validate(Shape(a));
  return a;
}

QuasiAnnulus quasi_annulus_family(const RationalPoint& p, const Rat& tau_psi, const Rat& rho,
                                  unsigned bits) {
  check_family_args(p, tau_psi);
  QuasiAnnulus a;
  a.center = p.coords();
  a.radius = RadiusBound::from_interval(qpow(p.q, -(1 + tau_psi), bits));
  a.inner_norm = Norm::lp(rho);
  validate(Shape(a));
  return a;
}

Rect shifted_rect(const RationalPoint& p, const ExponentProfile& profile, int j, int sign,
                  unsigned bits) {
  profile.validate();
  if (p.dim() != profile.n)
    throw std::invalid_argument("shifted_rect: point dimension does not match profile");
  if (j < 1 || j > profile.n) throw std::invalid_argument("shifted_rect: j out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("shifted_rect: sign must be +-1");

  std::vector<Rat> base = p.coords();
  for (unsigned b = bits; b <= kMaxBits; b *= 2) {
    Rect r;
    r.center = base;
    r.radii.resize(profile.n);
    bool ok = true;
    for (int i = 0; i < profile.n && ok; ++i) {
      RatInterval psiq = qpow(p.q, -(1 + profile.tau_psi[i]), b);
      if (i + 1 == j) {
        RatInterval phi = qpow(p.q, -profile.tau_phi[i], b);
        RatInterval slab_lo = interval_mul(interval_sub(RatInterval(Rat(1)), phi), psiq);
        if (slab_lo.is_exact() && psiq.is_exact()) {
          r.center[i] += sign * (slab_lo.lo + psiq.lo) / 2;
          r.radii[i] = RadiusBound((psiq.lo - slab_lo.lo) / 2);
        } else {
          // Certified inner slab [a, c] of the true [inner edge, outer edge].
          Rat a = slab_lo.hi, c = psiq.lo;
          if (a >= c) {
            ok = false;
            continue;
          }
          r.center[i] += sign * (a + c) / 2;
          r.radii[i] = RadiusBound((c - a) / 2);
          r.rounded_inward = true;
        }
      } else {
        if (psiq.is_exact()) {
          r.radii[i] = RadiusBound(psiq.lo);
        } else {
          r.radii[i] = RadiusBound(psiq.lo);
          r.rounded_inward = true;
        }
      }
    }
    if (ok) {
      validate(Shape(r));
      return r;
    }
  }
  throw std::runtime_error("shifted_rect: radius enclosure too wide at maximum precision");
}

std::vector<Rect> rect_annulus_decompose(const RationalPoint& p, const ExponentProfile& profile,
                                         unsigned bits) {
  std::vector<Rect> out;
  out.reserve(2 * static_cast<size_t>(profile.n));
  for (int j = 1; j <= profile.n; ++j)
    for (int sign : {1, -1}) out.push_back(shifted_rect(p, profile, j, sign, bits));
  return out;
}

std::vector<RationalPoint> membership_scan(const std::vector<Rat>& x,
                                           const ExponentProfile& profile, const Int& q_max,
                                           const ScanOptions& opts) {
  profile.validate();
  if (static_cast<int>(x.size()) != profile.n)
    throw std::invalid_argument("membership_scan: point dimension does not match profile");
  if (q_max < 1) throw std::invalid_argument("membership_scan: q_max must be >= 1");
  if (q_max > 1000000) throw std::domain_error("membership_scan: q_max above supported range");

  std::vector<RationalPoint> hits;
  for (Int q = 1; q <= q_max; ++q) {
    std::vector<Int> pv(static_cast<size_t>(profile.n), Int(0));
    while (true) {
      bool take = true;
      if (opts.coprime_only) {
        Int g = q;
        for (const auto& c : pv) g = boost::multiprecision::gcd(g, c);
        take = g == 1;
      }
      if (take) {
        RationalPoint point(pv, q);
        Region reg = Region::indeterminate;
        for (unsigned b = opts.bits; b <= kMaxBits; b *= 2) {
          reg = classify(Shape(rect_annulus_family(point, profile, b)), x);
          if (reg != Region::indeterminate) break;
        }
        if (reg == Region::indeterminate)
          throw std::runtime_error("membership_scan: could not resolve membership");
        if (reg == Region::inside) hits.push_back(point);
      }
      // lexicographic odometer over {0..q}^n
      int i = profile.n - 1;
      while (i >= 0 && pv[i] == q) {
        pv[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++pv[i];
    }
  }
  return hits;
}

AlgReal InscribedCube::center_coord(int i) const {
  if (i < 1 || i > n) throw std::invalid_argument("center_coord: index out of range");
  return AlgReal(base[i - 1]) + offset * Rat(signs[i - 1]);
}

std::vector<AlgReal> InscribedCube::corner(const std::vector<int>& eps) const {
  if (static_cast<int>(eps.size()) != n)
    throw std::invalid_argument("corner: pattern size mismatch");
  std::vector<AlgReal> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw std::invalid_argument("corner: pattern entries must be +-1");
    y[i] = center_coord(i + 1) + half_width * Rat(eps[i]);
  }
  return y;
}

InscribedCube inscribed_cube(const RationalPoint& p, const Rat& r, const Rat& rho,
                             std::vector<int> signs, CubeStyle style) {
  int n = p.dim();
  if (n < 2) throw std::invalid_argument("inscribed_cube: needs dimension >= 2");
  if (r <= 0) throw std::invalid_argument("inscribed_cube: radius must be positive");
  if (rho <= 0) throw std::invalid_argument("inscribed_cube: rho must be positive");
  if (static_cast<int>(signs.size()) != n)
    throw std::invalid_argument("inscribed_cube: signs size mismatch");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("inscribed_cube: signs must be +-1");
  Int s_num = numerator(rho), t_den = denominator(rho);
  if (s_num > 64 || t_den > 64)
    throw std::domain_error("inscribed_cube: rho outside supported range");

  InscribedCube cube;
  cube.n = n;
  cube.base = p.coords();
  cube.signs = std::move(signs);
  cube.r = r;
  cube.rho = rho;
  cube.style = style;
  // u = n^(-1/rho) = (n^-t)^(1/s) for rho = s/t.
  cube.field = RootField::make(Rat(1, pow_int(Int(n), t_den)), s_num.convert_to<unsigned>());
  AlgReal u = AlgReal::root(cube.field);
  if (style == CubeStyle::corrected) {
    cube.offset = (u + AlgReal(Rat(1))) * (r / 2);
    cube.half_width = (AlgReal(Rat(1)) - u) * (r / 2);
  } else {
    // v = n^(1/rho) = u^(d-1)/c in the canonical field.
    AlgReal v = AlgReal::root(cube.field).pow(cube.field->degree() - 1) / cube.field->radicand();
    cube.offset = (v + u) * (r / 2);
    cube.half_width = (v - u) * r;
  }
  if (cube.half_width.sign() <= 0)
    throw std::domain_error("inscribed_cube: degenerate cube");

  AlgReal lo_mag = cube.offset - cube.half_width;
  AlgReal hi_mag = cube.offset + cube.half_width;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 2 && !placed; ++attempt) {
      int s = attempt == 0 ? cube.signs[i] : -cube.signs[i];
      AlgReal lo = s > 0 ? AlgReal(cube.base[i]) + lo_mag : AlgReal(cube.base[i]) - hi_mag;
      AlgReal hi = s > 0 ? AlgReal(cube.base[i]) + hi_mag : AlgReal(cube.base[i]) - lo_mag;
      if (lo.sign() >= 0 && (AlgReal(Rat(1)) - hi).sign() >= 0) {
        if (attempt == 1) {
          cube.signs[i] = s;
          cube.signs_adjusted = true;
        }
        placed = true;
      }
    }
    if (!placed)
      throw std::domain_error("inscribed_cube: cube does not fit inside the unit cube");
  }
  return cube;
}

CubeCertificate corner_certificate(const InscribedCube& cube) {
  if (denominator(cube.rho) != 1)
    throw std::domain_error("corner_certificate: integer rho required");
  unsigned e = numerator(cube.rho).convert_to<unsigned>();
  if (cube.n > 12) throw std::domain_error("corner_certificate: dimension too large");

  AlgReal far = cube.offset + cube.half_width;
  AlgReal near_mag = (cube.offset - cube.half_width).abs();
  AlgReal far_pow = far.pow(e);
  AlgReal near_pow = near_mag.pow(e);
  Rat r_pow = rat_pow_uint(cube.r, e);

  // inf and rho comparisons only depend on how many coordinates sit on the
  // far face; precompute per count.
  std::vector<int> inf_by_count(static_cast<size_t>(cube.n) + 1);
  std::vector<int> rho_by_count(static_cast<size_t>(cube.n) + 1);
  for (int f = 0; f <= cube.n; ++f) {
    AlgReal max_d = f > 0 ? far : near_mag;
    inf_by_count[f] = (max_d - AlgReal(cube.r)).sign();
    AlgReal sum = far_pow * Rat(f) + near_pow * Rat(cube.n - f);
    rho_by_count[f] = (sum - AlgReal(r_pow)).sign();
  }

  CubeCertificate cert;
  for (unsigned mask = 0; mask < (1u << cube.n); ++mask) {
    CubeCertificate::Corner c;
    c.eps.resize(static_cast<size_t>(cube.n));
    int f = 0;
    for (int i = 0; i < cube.n; ++i) {
      bool far_face = (mask >> i) & 1u;
      c.eps[i] = far_face ? 1 : -1;
      f += far_face ? 1 : 0;
    }
    c.inf_cmp = inf_by_count[f];
    c.rho_cmp = rho_by_count[f];
    cert.inf_ok = cert.inf_ok && c.inf_cmp <= 0;
    cert.rho_ok = cert.rho_ok && c.rho_cmp >= 0;
    cert.corners.push_back(std::move(c));
  }
  return cert;
}

Ball cube_to_shape(const InscribedCube& cube, unsigned bits) {
  for (unsigned b = bits; b <= kMaxBits; b *= 2) {
    std::vector<Rat> center(static_cast<size_t>(cube.n));
    Rat max_err(0);
    bool exact = true;
    for (int i = 0; i < cube.n; ++i) {
      RatInterval ci = cube.center_coord(i + 1).bracket(b);
      center[i] = ci.mid();
      Rat err = ci.width() / 2;
      if (err > max_err) max_err = err;
      exact = exact && ci.is_exact();
    }
    RatInterval h = cube.half_width.bracket(b);
    Rat radius = h.lo - max_err;
    if (radius <= 0) continue;
    Ball out;
    out.center = std::move(center);
    out.radius = RadiusBound(radius);
    out.norm = Norm::inf();
    out.rounded_inward = !(exact && h.is_exact());
    validate(Shape(out));
    return out;
  }
  throw std::runtime_error("cube_to_shape: could not certify a rational cube");
}

Rat rect_volume(const Rect& r) {
  Rat v(1);
  for (const auto& rad : r.radii) v *= 2 * rad.value();
  return v;
}

Rat rect_union_volume(const std::vector<Rect>& rects) {
  if (rects.empty()) return Rat(0);
  if (rects.size() > 20) throw std::domain_error("rect_union_volume: too many rects");
  size_t n = rects[0].center.size();
  for (const auto& r : rects)
    if (r.center.size() != n) throw std::invalid_argument("rect_union_volume: mixed dimensions");

  Rat total(0);
  size_t m = rects.size();
  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    std::vector<Rat> lo(n), hi(n);
    bool first = true, empty = false;
    for (size_t r = 0; r < m && !empty; ++r) {
      if (!((mask >> r) & 1)) continue;
      for (size_t i = 0; i < n; ++i) {
        Rat l = rects[r].center[i] - rects[r].radii[i].value();
        Rat h = rects[r].center[i] + rects[r].radii[i].value();
        if (first) {
          lo[i] = l;
          hi[i] = h;
        } else {
          if (l > lo[i]) lo[i] = l;
          if (h < hi[i]) hi[i] = h;
        }
        if (lo[i] > hi[i]) {
          empty = true;
          break;
        }
      }
      first = false;
    }
    if (empty) continue;
    Rat vol(1);
    for (size_t i = 0; i < n; ++i) vol *= hi[i] - lo[i];
    int bits = __builtin_popcountll(static_cast<unsigned long long>(mask));
    total += (bits % 2 == 1) ? vol : Rat(-vol);
  }
  return total;
}

Rat rect_annulus_volume(const RectAnnulus& a) {
  Rat outer(1), inner(1);
  for (size_t i = 0; i < a.center.size(); ++i) {
    outer *= 2 * a.outer[i].value();
    inner *= 2 * a.inner[i].value();
  }
  return outer - inner;
}

std::vector<Rat> sample_rect_interior(const Rect& r, SplitMix64& rng, unsigned grid_bits) {
  if (grid_bits < 2 || grid_bits > 62)
    throw std::invalid_argument("sample_rect_interior: bad grid");
  Int grid = Int(1) << grid_bits;
  std::vector<Rat> x(r.center.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const Rat& rad = r.radii[i].value();
    if (rad <= 0) throw std::domain_error("sample_rect_interior: degenerate rect");
    Int k = Int(rng.below((1ull << grid_bits) - 1)) + 1;
    x[i] = r.center[i] + rad * Rat(2 * k - grid, grid);
  }
  return x;
}

std::vector<Rat> sample_rect_annulus_interior(const RectAnnulus& a, SplitMix64& rng,
                                              unsigned grid_bits, int max_tries) {
  Rect outer;
  outer.center = a.center;
  outer.radii = a.outer;
  Shape shape(a);
  for (int t = 0; t < max_tries; ++t) {
    std::vector<Rat> x = sample_rect_interior(outer, rng, grid_bits);
    if (classify(shape, x) == Region::inside) return x;
  }
  throw std::runtime_error("sample_rect_annulus_interior: rejection sampling exhausted");
}

}  // namespace geom
}  // namespace annuli
