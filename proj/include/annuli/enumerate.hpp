#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "annuli/geometry.hpp"
#include "annuli/profile.hpp"

namespace annuli {
namespace enumerate {

enum class FamilyKind { ball, annulus, rect_annulus, quasi_annulus, shifted_rect };

const char* family_kind_name(FamilyKind k);
FamilyKind family_kind_from_string(const std::string& s);

// One shape per center p/q, p in {0..q}^n. Ball, annulus, and quasi-annulus
// kinds are isotropic and ignore the thickness exponents; rect-annulus and
// shifted-rect use the whole profile.
struct FamilySpec {
  FamilyKind kind = FamilyKind::annulus;
  ExponentProfile profile;
  std::optional<Rat> rho;  // required iff quasi_annulus
  geom::Norm norm;         // ball only
  int j = 1;               // shifted_rect only
  int sign = 1;            // shifted_rect only
  bool coprime_only = false;  // experimental: skip p with gcd(p_1..p_n, q) > 1
  unsigned bits = 96;

  void validate() const;  // throws std::invalid_argument
};

struct EnumeratedShape {
  geom::RationalPoint p;
  geom::Shape shape;
  bool clipped = false;
  bool degenerate = false;
};

// Number of shapes stream() emits, without building any. Unfiltered this is
// sum of (q+1)^n; in coprime mode each q contributes
// sum_{d | q} mu(d) (q/d + 1)^n by Moebius inversion.
Int count(const FamilySpec& spec, const Int& q_lo, const Int& q_hi);

// Emits shapes ordered by (q ascending, p lexicographic). Throws
// std::domain_error before emitting anything if the announced count does not
// fit a signed 64-bit counter. Chunked by q internally; the order is part of
// the contract, so two runs serialize identically.
void stream(const FamilySpec& spec, const Int& q_lo, const Int& q_hi,
            const std::function<void(const EnumeratedShape&)>& sink);

std::vector<EnumeratedShape> collect(const FamilySpec& spec, const Int& q_lo, const Int& q_hi);

// One JSON object per line: {"p": [...], "q": "...", "clipped": ...,
// "degenerate": ..., "shape": {...}}, integers as decimal strings.
void write_ndjson(const FamilySpec& spec, const Int& q_lo, const Int& q_hi, std::ostream& out);

}  // namespace enumerate
}  // namespace annuli
