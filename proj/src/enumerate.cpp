#include "annuli/enumerate.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "annuli/shape_json.hpp"

namespace annuli {
namespace enumerate {

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::ball: return "ball";
    case FamilyKind::annulus: return "annulus";
    case FamilyKind::rect_annulus: return "rect_annulus";
    case FamilyKind::quasi_annulus: return "quasi_annulus";
    case FamilyKind::shifted_rect: return "shifted_rect";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
  if (s == "ball") return FamilyKind::ball;
  if (s == "annulus") return FamilyKind::annulus;
  if (s == "rect_annulus") return FamilyKind::rect_annulus;
  if (s == "quasi_annulus") return FamilyKind::quasi_annulus;
  if (s == "shifted_rect") return FamilyKind::shifted_rect;
  throw std::invalid_argument("unknown family kind '" + s + "'");
}

void FamilySpec::validate() const {
  profile.validate();
  bool isotropic_kind = kind == FamilyKind::ball || kind == FamilyKind::annulus ||
                        kind == FamilyKind::quasi_annulus;
  if (isotropic_kind && !profile.is_isotropic())
    throw std::invalid_argument("family spec: this kind needs an isotropic profile");
  if (kind == FamilyKind::quasi_annulus) {
    if (!rho) throw std::invalid_argument("family spec: quasi-annulus needs rho");
    if (*rho <= 0) throw std::invalid_argument("family spec: rho must be positive");
  }
  if (kind == FamilyKind::shifted_rect) {
    if (j < 1 || j > profile.n) throw std::invalid_argument("family spec: j out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("family spec: sign must be +-1");
  }
}

namespace {

void check_range(const Int& q_lo, const Int& q_hi) {
  if (q_lo < 1) throw std::invalid_argument("enumerate: q_lo must be >= 1");
  if (q_lo > q_hi) throw std::invalid_argument("enumerate: q_lo must not exceed q_hi");
}

// sum_{d | q} mu(d) (q/d + 1)^n, accumulated over the squarefree divisors
// built from q's distinct prime factors.
Int coprime_count_for(const Int& q, int n) {
  std::vector<Int> primes;
  Int m = q;
  for (Int f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      primes.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) primes.push_back(m);

  Int total = 0;
  size_t np = primes.size();
  for (size_t mask = 0; mask < (size_t(1) << np); ++mask) {
    Int d = 1;
    int parity = 1;
    for (size_t i = 0; i < np; ++i) {
      if ((mask >> i) & 1) {
        d *= primes[i];
        parity = -parity;
      }
    }
    total += parity * pow_int(Int(q / d + 1), Int(n));
  }
  return total;
}

geom::Shape build_shape(const FamilySpec& spec, const geom::RationalPoint& p) {
  switch (spec.kind) {
    case FamilyKind::ball:
      return geom::Shape(
          geom::ball_family(p, spec.profile.tau_psi[0], spec.norm, spec.bits));
    case FamilyKind::annulus:
      return geom::Shape(geom::annulus_family(p, spec.profile.tau_psi[0],
                                              spec.profile.tau_phi[0], spec.bits));
    case FamilyKind::rect_annulus:
      return geom::Shape(geom::rect_annulus_family(p, spec.profile, spec.bits));
    case FamilyKind::quasi_annulus:
      return geom::Shape(
          geom::quasi_annulus_family(p, spec.profile.tau_psi[0], *spec.rho, spec.bits));
    case FamilyKind::shifted_rect:
      return geom::Shape(geom::shifted_rect(p, spec.profile, spec.j, spec.sign, spec.bits));
  }
  throw std::logic_error("enumerate: unhandled family kind");
}

}  // namespace

Int count(const FamilySpec& spec, const Int& q_lo, const Int& q_hi) {
  spec.validate();
  check_range(q_lo, q_hi);
  Int total = 0;
  for (Int q = q_lo; q <= q_hi; ++q)
    total += spec.coprime_only ? coprime_count_for(q, spec.profile.n)
                               : pow_int(Int(q + 1), Int(spec.profile.n));
  return total;
}

void stream(const FamilySpec& spec, const Int& q_lo, const Int& q_hi,
            const std::function<void(const EnumeratedShape&)>& sink) {
  Int announced = count(spec, q_lo, q_hi);
  if (announced > std::numeric_limits<long long>::max())
    throw std::domain_error("enumerate: announced count overflows a 64-bit counter");

  const int n = spec.profile.n;
  for (Int q = q_lo; q <= q_hi; ++q) {
    std::vector<Int> pv(static_cast<size_t>(n), Int(0));
    while (true) {
      bool take = true;
      if (spec.coprime_only) {
        Int g = q;
        for (const auto& c : pv) g = boost::multiprecision::gcd(g, c);
        take = g == 1;
      }
      if (take) {
        EnumeratedShape item;
        item.p = geom::RationalPoint(pv, q);
        item.shape = build_shape(spec, item.p);
        item.clipped = geom::shape_clipped(item.shape);
        item.degenerate = geom::shape_degenerate(item.shape);
        sink(item);
      }
      int i = n - 1;
      while (i >= 0 && pv[i] == q) {
        pv[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++pv[i];
    }
  }
}

std::vector<EnumeratedShape> collect(const FamilySpec& spec, const Int& q_lo, const Int& q_hi) {
  std::vector<EnumeratedShape> out;
  stream(spec, q_lo, q_hi, [&](const EnumeratedShape& s) { out.push_back(s); });
  return out;
}

void write_ndjson(const FamilySpec& spec, const Int& q_lo, const Int& q_hi, std::ostream& out) {
  stream(spec, q_lo, q_hi, [&](const EnumeratedShape& s) {
    nlohmann::json line;
    nlohmann::json pv = nlohmann::json::array();
    for (const auto& c : s.p.p) pv.push_back(c.str());
    line["p"] = pv;
    line["q"] = s.p.q.str();
    line["clipped"] = s.clipped;
    line["degenerate"] = s.degenerate;
    line["shape"] = geom::shape_to_json(s.shape);
    out << line.dump() << '\n';
  });
}

}  // namespace enumerate
}  // namespace annuli
