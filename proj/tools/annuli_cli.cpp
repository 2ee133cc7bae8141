#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "annuli/cover.hpp"
#include "annuli/enumerate.hpp"
#include "annuli/formulas.hpp"
#include "annuli/geometry.hpp"
#include "annuli/mtp.hpp"
#include "annuli/shape_json.hpp"
#include "annuli/sweep.hpp"
#include "json.hpp"

namespace {

using namespace annuli;
using nlohmann::json;

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

const Int kMaxDen = pow_int(Int(10), Int(6));

Rat arg_rat(const std::string& s) { return parse_rat_limited(s, kMaxDen); }

std::vector<Rat> arg_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(arg_rat(item));
  if (out.empty()) throw std::invalid_argument("empty list: '" + s + "'");
  return out;
}

std::vector<Int> arg_int_list(const std::string& s) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(Int(item));
  if (out.empty()) throw std::invalid_argument("empty list: '" + s + "'");
  return out;
}

std::vector<int> arg_dims(const std::string& s) {
  std::vector<int> out;
  for (const Int& v : arg_int_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

// Lists broadcast a single value across all n coordinates.
std::vector<Rat> spread(std::vector<Rat> v, int n, const char* flag) {
  if (static_cast<int>(v.size()) == n) return v;
  if (v.size() == 1) return std::vector<Rat>(static_cast<size_t>(n), v[0]);
  throw std::invalid_argument(std::string(flag) + ": expected 1 or n values");
}

ExponentProfile arg_profile(int n, const std::string& psi, const std::string& phi) {
  ExponentProfile p;
  p.n = n;
  p.tau_psi = spread(arg_rat_list(psi), n, "--tau-psi");
  p.tau_phi = spread(arg_rat_list(phi), n, "--tau-phi");
  p.validate();
  return p;
}

std::string show(const Rat& x) {
  return to_fraction_string(x) + " ~= " + to_decimal_string(x);
}

json rat_list_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_fraction_string(x));
  return a;
}

json profile_json(const ExponentProfile& p) {
  return json{{"n", p.n},
              {"tau_psi", rat_list_json(p.tau_psi)},
              {"tau_phi", rat_list_json(p.tau_phi)}};
}

json dimension_json(const DimensionResult& r) {
  json out{{"value", to_fraction_string(r.value)},
           {"value_decimal", to_decimal_string(r.value)},
           {"branch", branch_name(r.branch)},
           {"tie", r.tie},
           {"outside_hypotheses", r.outside_hypotheses}};
  if (r.witness_j) out["witness_j"] = *r.witness_j;
  if (!r.witness_k.empty()) out["witness_k"] = r.witness_k;
  return out;
}

void print_dimension(const DimensionResult& r) {
  std::cout << "dim = " << show(r.value) << "\n";
  std::cout << "branch = " << branch_name(r.branch) << (r.tie ? " (tie)" : "") << "\n";
  if (r.witness_j) {
    std::cout << "witness j = " << *r.witness_j;
    if (!r.witness_k.empty()) {
      std::cout << ", inner k = (";
      for (size_t i = 0; i < r.witness_k.size(); ++i)
        std::cout << (i ? ", " : "") << r.witness_k[i];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  if (r.outside_hypotheses) std::cout << "note: outside theorem hypotheses\n";
}

// Output files land in ANNULI_OUT_DIR unless the path is absolute.
std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("ANNULI_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

// Runs fn against the chosen stream; "" means stdout.
template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return kExitClean;
  }
  std::string full = resolve_out(path);
  std::ofstream out(full, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << full << " for writing\n";
    return kExitIo;
  }
  fn(out);
  out.flush();
  if (!out) {
    std::cerr << "write to " << full << " failed\n";
    return kExitIo;
  }
  return kExitClean;
}

struct DimArgs {
  int n = 0;
  std::string tau_psi, tau_phi;
  bool weighted = false;
  bool as_json = false;
};

int run_dim(const DimArgs& a) {
  DimensionResult res;
  json config{{"command", "dim"}, {"n", a.n}, {"weighted", a.weighted}};
  if (a.weighted) {
    ExponentProfile p = arg_profile(a.n, a.tau_psi, a.tau_phi);
    config["tau_psi"] = rat_list_json(p.tau_psi);
    config["tau_phi"] = rat_list_json(p.tau_phi);
    res = formulas::dim_weighted(p);
  } else {
    std::vector<Rat> psi = arg_rat_list(a.tau_psi);
    std::vector<Rat> phi = arg_rat_list(a.tau_phi);
    if (psi.size() != 1 || phi.size() != 1)
      throw std::invalid_argument("scalar exponents expected; pass --weighted for lists");
    config["tau_psi"] = rat_list_json(psi);
    config["tau_phi"] = rat_list_json(phi);
    res = formulas::dim_isotropic(a.n, psi[0], phi[0]);
  }
  if (a.as_json) {
    std::cout << json{{"config", config}, {"result", dimension_json(res)}}.dump(2) << "\n";
  } else {
    print_dimension(res);
  }
  return kExitClean;
}

struct RegimeArgs {
  int n = 0;
  std::string tau_psi;
};

int run_regime(const RegimeArgs& a) {
  Rat tau = arg_rat(a.tau_psi);
  formulas::Regime r = formulas::regime(a.n, tau);
  std::cout << "regime = " << formulas::regime_name(r) << "\n";
  if (a.n > 1) std::cout << "threshold = " << show(formulas::threshold(a.n)) << "\n";
  return kExitClean;
}

struct ExactOrderArgs {
  int n = 0;
  std::string tau_psi, eps;
};

int run_exact_order(const ExactOrderArgs& a) {
  auto b = formulas::exact_order_upper_bound(a.n, arg_rat(a.tau_psi), arg_rat(a.eps));
  std::cout << "bound = " << show(b.bound) << "\n";
  std::cout << "ball value = " << show(b.comparison) << "\n";
  return kExitClean;
}

struct MtpArgs {
  std::string delta, a, t;
  std::string kappa = "0";
  bool table = false;
  bool as_json = false;
};

int run_mtp(const MtpArgs& args) {
  mtp::MtpInstance inst;
  inst.delta = arg_rat_list(args.delta);
  inst.a = arg_rat_list(args.a);
  inst.t = arg_rat_list(args.t);
  inst.kappa = arg_rat(args.kappa);
  inst.n = static_cast<int>(inst.delta.size());
  mtp::WwResult res = mtp::ww_lower_bound(inst);

  if (args.as_json) {
    json config{{"command", "mtp"},
                {"n", inst.n},
                {"delta", rat_list_json(inst.delta)},
                {"a", rat_list_json(inst.a)},
                {"t", rat_list_json(inst.t)},
                {"kappa", to_fraction_string(inst.kappa)}};
    json table = json::array();
    for (const auto& row : res.table)
      table.push_back(json{{"candidate", to_fraction_string(row.candidate)},
                           {"value", to_fraction_string(row.value)},
                           {"k1", row.k1},
                           {"k2", row.k2},
                           {"k3", row.k3}});
    json result{{"value", to_fraction_string(res.value)},
                {"value_decimal", to_decimal_string(res.value)},
                {"a_star", to_fraction_string(res.a_star)},
                {"a_star_index", res.a_star_index},
                {"table", table}};
    std::cout << json{{"config", config}, {"result", result}}.dump(2) << "\n";
    return kExitClean;
  }

  std::cout << "bound = " << show(res.value) << "\n";
  std::cout << "A* = " << to_fraction_string(res.a_star) << " (index " << res.a_star_index
            << ")\n";
  auto dump = [](const char* name, const std::vector<int>& k) {
    std::cout << name << " = {";
    for (size_t i = 0; i < k.size(); ++i) std::cout << (i ? ", " : "") << k[i];
    std::cout << "}\n";
  };
  dump("K1", res.k1);
  dump("K2", res.k2);
  dump("K3", res.k3);
  if (args.table) {
    for (const auto& row : res.table)
      std::cout << "A = " << to_fraction_string(row.candidate) << " -> "
                << show(row.value) << "\n";
  }
  return kExitClean;
}

struct SelectArgs {
  int n = 0;
  std::string tau_psi, tau_phi;
  int j = 0;
  bool as_json = false;
};

int run_select(const SelectArgs& args) {
  ExponentProfile p = arg_profile(args.n, args.tau_psi, args.tau_phi);
  mtp::ExponentSelection sel = mtp::select_exponents(p, args.j);
  const char* tag = sel.case_tag == mtp::SelectionCase::all_large ? "all-large" : "split";

  if (args.as_json) {
    json config{{"command", "select"},
                {"profile", profile_json(p)},
                {"j", args.j}};
    json result{{"b", rat_list_json(sel.b)},
                {"a", rat_list_json(sel.a)},
                {"t", rat_list_json(sel.t)},
                {"case", tag}};
    if (sel.ell) result["ell"] = *sel.ell;
    std::cout << json{{"config", config}, {"result", result}}.dump(2) << "\n";
    return kExitClean;
  }

  auto dump = [](const char* name, const std::vector<Rat>& v) {
    std::cout << name << " = (";
    for (size_t i = 0; i < v.size(); ++i)
      std::cout << (i ? ", " : "") << to_decimal_string(v[i]);
    std::cout << ")\n";
  };
  dump("b", sel.b);
  dump("a", sel.a);
  dump("t", sel.t);
  std::cout << "case = " << tag;
  if (sel.ell) std::cout << " (ell = " << *sel.ell << ")";
  std::cout << "\n";
  return kExitClean;
}

struct SeriesArgs {
  int n = 0;
  std::string tau_psi, s;
};

int run_series(const SeriesArgs& a) {
  mtp::SeriesClass c = mtp::classify_hf_series(a.n, arg_rat(a.tau_psi), arg_rat(a.s));
  std::cout << (c == mtp::SeriesClass::divergent ? "divergent" : "convergent") << "\n";
  return kExitClean;
}

struct PerturbedArgs {
  int n = 0;
  std::string tau_psi;
  std::string coeff = "1";
  std::string exp;
};

int run_perturbed(const PerturbedArgs& a) {
  mtp::PowerLawDecay decay{arg_rat(a.coeff), arg_rat(a.exp)};
  mtp::PerturbedDimension res = mtp::dim_perturbed(a.n, arg_rat(a.tau_psi), decay);
  if (res.value) {
    std::cout << "dim = " << show(*res.value) << "\n";
    return kExitClean;
  }
  std::cout << "unknown: " << res.reason << "\n";
  return kExitClean;
}

struct CriticalArgs {
  int n = 0;
  std::string tau_psi, tau_phi;
  bool table = false;
  bool as_json = false;
};

int run_critical(const CriticalArgs& a) {
  ExponentProfile p = arg_profile(a.n, a.tau_psi, a.tau_phi);
  cover::CriticalResult res = cover::critical_exponent(p);

  if (a.as_json) {
    json table = json::array();
    for (const auto& e : res.table)
      table.push_back(json{{"j", e.j},
                           {"k", e.k},
                           {"tau_k", to_fraction_string(e.tau_k)},
                           {"s", to_fraction_string(e.s)}});
    json result{{"value", to_fraction_string(res.value)},
                {"value_decimal", to_decimal_string(res.value)},
                {"witness_j", res.witness_j},
                {"witness_k", res.witness_k},
                {"outside_hypotheses", res.outside_hypotheses},
                {"table", table}};
    std::cout << json{{"config", json{{"command", "critical"}, {"profile", profile_json(p)}}},
                      {"result", result}}
                     .dump(2)
              << "\n";
    return kExitClean;
  }

  std::cout << "s = " << show(res.value) << "\n";
  std::cout << "witness j = " << res.witness_j << "\n";
  if (res.outside_hypotheses) std::cout << "note: outside theorem hypotheses\n";
  if (a.table) {
    for (const auto& e : res.table)
      std::cout << "j = " << e.j << ", k = " << e.k << ": tau_k = "
                << to_fraction_string(e.tau_k) << ", s = " << show(e.s) << "\n";
  }
  return kExitClean;
}

struct VerifyGeomArgs {
  int n = 2;
  std::string q = "2";
  std::string tau_psi = "1", tau_phi = "1";
  std::string p;  // center numerators; default all 1
  int samples = 1000;
  std::uint64_t seed = 0;
};

geom::RationalPoint center_of(const VerifyGeomArgs& a) {
  Int q(a.q);
  std::vector<Int> nums;
  if (a.p.empty()) {
    nums.assign(static_cast<size_t>(a.n), Int(1));
  } else {
    nums = arg_int_list(a.p);
  }
  return geom::RationalPoint(nums, q);
}

int run_verify_decomposition(const VerifyGeomArgs& a) {
  ExponentProfile profile = arg_profile(a.n, a.tau_psi, a.tau_phi);
  geom::RationalPoint p = center_of(a);
  geom::RectAnnulus annulus = geom::rect_annulus_family(p, profile);
  std::vector<geom::Rect> rects = geom::rect_annulus_decompose(p, profile);
  geom::Shape annulus_shape(annulus);
  SplitMix64 rng(a.seed);

  long long forward = 0, backward = 0, violations = 0;
  for (int i = 0; i < a.samples; ++i) {
    if (i % 2 == 0) {
      const geom::Rect& rect = rects[static_cast<size_t>(i / 2) % rects.size()];
      std::vector<Rat> x = geom::sample_rect_interior(rect, rng);
      ++forward;
      if (geom::classify(annulus_shape, x) != geom::Region::inside) ++violations;
    } else {
      std::vector<Rat> x = geom::sample_rect_annulus_interior(annulus, rng);
      ++backward;
      bool hit = false;
      for (const auto& rect : rects)
        if (geom::contains(geom::Shape(rect), x)) {
          hit = true;
          break;
        }
      if (!hit) ++violations;
    }
  }
  std::cout << "rect-interior samples into the open region: " << forward << "\n";
  std::cout << "region-interior samples into the rect union: " << backward << "\n";
  std::cout << "violations: " << violations << "\n";

  bool area_ok = true;
  if (a.n <= 2) {
    Rat union_vol = geom::rect_union_volume(rects);
    Rat region_vol = geom::rect_annulus_volume(annulus);
    area_ok = union_vol == region_vol;
    std::cout << "union volume = " << to_fraction_string(union_vol)
              << (area_ok ? " == " : " != ") << to_fraction_string(region_vol)
              << " region volume\n";
  }
  return (violations == 0 && area_ok) ? kExitClean : kExitViolation;
}

int run_verify_sandwich(const VerifyGeomArgs& a) {
  ExponentProfile profile = arg_profile(a.n, a.tau_psi, a.tau_phi);
  geom::RationalPoint p = center_of(a);
  geom::Shape annulus(geom::rect_annulus_family(p, profile));
  SplitMix64 rng(a.seed);

  long long violations = 0;
  for (int j = 1; j <= profile.n; ++j) {
    for (int sign : {1, -1}) {
      geom::Rect rect = geom::shifted_rect(p, profile, j, sign);
      for (int i = 0; i < a.samples; ++i) {
        std::vector<Rat> x = geom::sample_rect_interior(rect, rng);
        if (geom::classify(annulus, x) != geom::Region::inside) ++violations;
      }
    }
  }
  std::cout << "samples: " << (static_cast<long long>(a.samples) * 2 * profile.n) << "\n";
  std::cout << "violations: " << violations << "\n";
  return violations == 0 ? kExitClean : kExitViolation;
}

struct VerifyCubeArgs {
  int n = 2;
  std::string rho = "2";
  std::string r = "1/8";
  std::string p;  // numerators; default all 1 over q
  std::string q = "2";
  bool printed = false;
  bool expect_fail = false;
};

int run_verify_cube(const VerifyCubeArgs& a) {
  std::vector<Int> nums;
  if (a.p.empty()) {
    nums.assign(static_cast<size_t>(a.n), Int(1));
  } else {
    nums = arg_int_list(a.p);
  }
  geom::RationalPoint base(nums, Int(a.q));
  geom::CubeStyle style = a.printed ? geom::CubeStyle::as_printed : geom::CubeStyle::corrected;

  bool ok = false;
  try {
    geom::InscribedCube cube = geom::inscribed_cube(
        base, arg_rat(a.r), arg_rat(a.rho), std::vector<int>(static_cast<size_t>(a.n), 1),
        style);
    geom::CubeCertificate cert = geom::corner_certificate(cube);
    for (const auto& corner : cert.corners) {
      std::cout << "corner (";
      for (size_t i = 0; i < corner.eps.size(); ++i)
        std::cout << (i ? "," : "") << (corner.eps[i] > 0 ? "+" : "-");
      std::cout << "): inf " << (corner.inf_cmp <= 0 ? "ok" : "VIOLATED") << ", lp "
                << (corner.rho_cmp >= 0 ? "ok" : "VIOLATED") << "\n";
    }
    ok = cert.ok();
  } catch (const std::domain_error& e) {
    std::cout << "construction failed: " << e.what() << "\n";
    ok = false;
  }
  std::cout << "certificate: " << (ok ? "pass" : "fail") << "\n";
  if (a.expect_fail) return ok ? kExitViolation : kExitClean;
  return ok ? kExitClean : kExitViolation;
}

struct CoverArgs {
  int n = 0;
  std::string tau_psi, tau_phi;
  std::string q;
  std::string out;
};

int run_cover(const CoverArgs& a) {
  ExponentProfile p = arg_profile(a.n, a.tau_psi, a.tau_phi);
  std::vector<Int> qs = arg_int_list(a.q);
  std::vector<cover::CoverReport> rows = cover::comparability_report(p, qs);

  int rc = with_output(a.out, [&](std::ostream& out) { cover::write_cover_csv(rows, out); });
  if (rc != kExitClean) return rc;

  long long out_of_bracket = 0;
  for (const auto& row : rows)
    if (row.ratio < Rat(1, 8) || row.ratio > 8) ++out_of_bracket;
  if (out_of_bracket > 0) {
    std::cerr << out_of_bracket << " ratios outside [1/8, 8]\n";
    return kExitViolation;
  }
  return kExitClean;
}

struct SweepArgs {
  int trials = 200;
  std::uint64_t seed = 0;
  std::string dims = "2,3,4";
  bool oracle = false;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  std::vector<int> dims = arg_dims(a.dims);
  Rat tol(Int(1), pow_int(Int(10), Int(9)));

  if (a.oracle) {
    auto rows = sweep::oracle_sweep(a.seed, a.trials, dims);
    int rc = with_output(a.out, [&](std::ostream& out) { sweep::write_oracle_csv(rows, out); });
    if (rc != kExitClean) return rc;
    Rat worst = sweep::max_abs_diff(rows);
    if (worst > tol) {
      std::cerr << "max |ww - rynne| = " << to_decimal_string(worst) << " exceeds 1e-9\n";
      return kExitViolation;
    }
    return kExitClean;
  }

  auto rows = sweep::mtp_consistency_sweep(a.seed, a.trials, dims);
  int rc = with_output(a.out, [&](std::ostream& out) { sweep::write_sweep_csv(rows, out); });
  if (rc != kExitClean) return rc;
  Rat worst = sweep::max_abs_diff(rows);
  if (worst > tol) {
    std::cerr << "max |dim_formula - dim_mtp| = " << to_decimal_string(worst)
              << " exceeds 1e-9\n";
    return kExitViolation;
  }
  return kExitClean;
}

struct FamilyArgs {
  std::string kind = "annulus";
  int n = 0;
  std::string tau_psi = "1", tau_phi = "1";
  std::string rho;
  std::string norm = "inf";
  int j = 1;
  int sign = 1;
  bool coprime = false;
  std::string q_lo = "1", q_hi = "1";
  std::string out;
};

enumerate::FamilySpec family_of(const FamilyArgs& a) {
  enumerate::FamilySpec spec;
  std::string kind = a.kind;
  for (char& c : kind)
    if (c == '-') c = '_';
  spec.kind = enumerate::family_kind_from_string(kind);
  spec.profile = arg_profile(a.n, a.tau_psi, a.tau_phi);
  if (!a.rho.empty()) spec.rho = arg_rat(a.rho);
  spec.norm = geom::norm_from_string(a.norm);
  spec.j = a.j;
  spec.sign = a.sign;
  spec.coprime_only = a.coprime;
  spec.validate();
  return spec;
}

int run_count(const FamilyArgs& a) {
  enumerate::FamilySpec spec = family_of(a);
  std::cout << enumerate::count(spec, Int(a.q_lo), Int(a.q_hi)).str() << "\n";
  return kExitClean;
}

int run_stream(const FamilyArgs& a) {
  enumerate::FamilySpec spec = family_of(a);
  return with_output(a.out, [&](std::ostream& out) {
    enumerate::write_ndjson(spec, Int(a.q_lo), Int(a.q_hi), out);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff dimension toolkit for rational-centred annuli"};
  app.require_subcommand(1);
  int rc = kExitClean;

  auto guard = [&rc](auto fn) {
    return [&rc, fn]() {
      try {
        rc = fn();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitUsage;
      } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitUsage;
      } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        rc = kExitIo;
      }
    };
  };

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the limsup set");
  dim_cmd->add_option("--n", dim.n, "ambient dimension")->required();
  dim_cmd->add_option("--tau-psi", dim.tau_psi, "radius decay exponent(s)")->required();
  dim_cmd->add_option("--tau-phi", dim.tau_phi, "thickness decay exponent(s)")->required();
  dim_cmd->add_flag("--weighted", dim.weighted, "per-coordinate exponent lists");
  dim_cmd->add_flag("--json", dim.as_json, "JSON output");
  dim_cmd->callback(guard([&dim]() { return run_dim(dim); }));

  RegimeArgs regime;
  auto* regime_cmd = app.add_subcommand("regime", "Thickness sensitivity of the dimension");
  regime_cmd->add_option("--n", regime.n, "ambient dimension")->required();
  regime_cmd->add_option("--tau-psi", regime.tau_psi, "radius decay exponent")->required();
  regime_cmd->callback(guard([&regime]() { return run_regime(regime); }));

  ExactOrderArgs exact;
  auto* exact_cmd = app.add_subcommand("exact-order", "Upper bound for exact-order sets");
  exact_cmd->add_option("--n", exact.n, "ambient dimension")->required();
  exact_cmd->add_option("--tau-psi", exact.tau_psi, "radius decay exponent")->required();
  exact_cmd->add_option("--eps", exact.eps, "outer-order margin")->required();
  exact_cmd->callback(guard([&exact]() { return run_exact_order(exact); }));

  MtpArgs mtp_args;
  auto* mtp_cmd = app.add_subcommand("mtp", "Rectangle transference lower bound");
  mtp_cmd->add_option("--delta", mtp_args.delta, "ambient exponents")->required();
  mtp_cmd->add_option("--a", mtp_args.a, "base exponents")->required();
  mtp_cmd->add_option("--t", mtp_args.t, "stretch exponents")->required();
  mtp_cmd->add_option("--kappa", mtp_args.kappa, "interpolation weight (default 0)");
  mtp_cmd->add_flag("--table", mtp_args.table, "print every candidate");
  mtp_cmd->add_flag("--json", mtp_args.as_json, "JSON output");
  mtp_cmd->callback(guard([&mtp_args]() { return run_mtp(mtp_args); }));

  SelectArgs select;
  auto* select_cmd = app.add_subcommand("select", "Exponent choice for a face rect");
  select_cmd->add_option("--n", select.n, "ambient dimension")->required();
  select_cmd->add_option("--tau-psi", select.tau_psi, "radius decay exponents")->required();
  select_cmd->add_option("--tau-phi", select.tau_phi, "thickness decay exponents")->required();
  select_cmd->add_option("--j", select.j, "face coordinate (1-based)")->required();
  select_cmd->add_flag("--json", select.as_json, "JSON output");
  select_cmd->callback(guard([&select]() { return run_select(select); }));

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Hausdorff sum divergence class");
  series_cmd->add_option("--n", series.n, "ambient dimension")->required();
  series_cmd->add_option("--tau-psi", series.tau_psi, "radius decay exponent")->required();
  series_cmd->add_option("--s", series.s, "measure exponent")->required();
  series_cmd->callback(guard([&series]() { return run_series(series); }));

  PerturbedArgs perturbed;
  auto* pert_cmd = app.add_subcommand("perturbed", "Dimension with drifting centres");
  pert_cmd->add_option("--n", perturbed.n, "ambient dimension")->required();
  pert_cmd->add_option("--tau-psi", perturbed.tau_psi, "radius decay exponent")->required();
  pert_cmd->add_option("--decay-coeff", perturbed.coeff, "drift coefficient (default 1)");
  pert_cmd->add_option("--decay-exp", perturbed.exp, "drift decay exponent")->required();
  pert_cmd->callback(guard([&perturbed]() { return run_perturbed(perturbed); }));

  CriticalArgs critical;
  auto* crit_cmd = app.add_subcommand("critical", "Covering-sum critical exponent");
  crit_cmd->add_option("--n", critical.n, "ambient dimension")->required();
  crit_cmd->add_option("--tau-psi", critical.tau_psi, "radius decay exponents")->required();
  crit_cmd->add_option("--tau-phi", critical.tau_phi, "thickness decay exponents")->required();
  crit_cmd->add_flag("--table", critical.table, "print the per-(j,k) table");
  crit_cmd->add_flag("--json", critical.as_json, "JSON output");
  crit_cmd->callback(guard([&critical]() { return run_critical(critical); }));

  auto* verify_cmd = app.add_subcommand("verify", "Constructive geometry checks");
  verify_cmd->require_subcommand(1);

  VerifyGeomArgs decomp;
  auto* decomp_cmd = verify_cmd->add_subcommand(
      "decomposition", "Face rects tile the closed rect-annulus");
  decomp_cmd->add_option("--n", decomp.n, "ambient dimension");
  decomp_cmd->add_option("--q", decomp.q, "denominator");
  decomp_cmd->add_option("--tau-psi", decomp.tau_psi, "radius decay exponents");
  decomp_cmd->add_option("--tau-phi", decomp.tau_phi, "thickness decay exponents");
  decomp_cmd->add_option("--p", decomp.p, "center numerators (default all 1)");
  decomp_cmd->add_option("--samples", decomp.samples, "sample count");
  decomp_cmd->add_option("--seed", decomp.seed, "RNG seed")->required();
  decomp_cmd->callback(guard([&decomp]() { return run_verify_decomposition(decomp); }));

  VerifyGeomArgs sandwich;
  auto* sandwich_cmd = verify_cmd->add_subcommand(
      "sandwich", "Face rect interiors satisfy the strict inequalities");
  sandwich_cmd->add_option("--n", sandwich.n, "ambient dimension");
  sandwich_cmd->add_option("--q", sandwich.q, "denominator");
  sandwich_cmd->add_option("--tau-psi", sandwich.tau_psi, "radius decay exponents");
  sandwich_cmd->add_option("--tau-phi", sandwich.tau_phi, "thickness decay exponents");
  sandwich_cmd->add_option("--p", sandwich.p, "center numerators (default all 1)");
  sandwich_cmd->add_option("--samples", sandwich.samples, "samples per rect");
  sandwich_cmd->add_option("--seed", sandwich.seed, "RNG seed")->required();
  sandwich_cmd->callback(guard([&sandwich]() { return run_verify_sandwich(sandwich); }));

  VerifyCubeArgs cube;
  auto* cube_cmd = verify_cmd->add_subcommand(
      "cube", "Inscribed cube corner certificate");
  cube_cmd->add_option("--n", cube.n, "ambient dimension");
  cube_cmd->add_option("--rho", cube.rho, "norm parameter (integer for the certificate)");
  cube_cmd->add_option("--r", cube.r, "quasi-annulus radius");
  cube_cmd->add_option("--p", cube.p, "base numerators (default all 1)");
  cube_cmd->add_option("--q", cube.q, "base denominator");
  cube_cmd->add_flag("--printed", cube.printed, "use the uncorrected constants");
  cube_cmd->add_flag("--expect-fail", cube.expect_fail, "exit 0 iff the certificate fails");
  cube_cmd->callback(guard([&cube]() { return run_verify_cube(cube); }));

  CoverArgs cover_args;
  auto* cover_cmd = app.add_subcommand("cover", "Predicted vs measured covering counts");
  cover_cmd->add_option("--n", cover_args.n, "ambient dimension")->required();
  cover_cmd->add_option("--tau-psi", cover_args.tau_psi, "radius decay exponents")->required();
  cover_cmd->add_option("--tau-phi", cover_args.tau_phi, "thickness decay exponents")
      ->required();
  cover_cmd->add_option("--q", cover_args.q, "comma-separated denominators")->required();
  cover_cmd->add_option("--out", cover_args.out, "CSV path (default stdout)");
  cover_cmd->callback(guard([&cover_args]() { return run_cover(cover_args); }));

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Random-profile consistency sweep");
  sweep_cmd->add_option("--trials", sweep_args.trials, "trial count (default 200)");
  sweep_cmd->add_option("--seed", sweep_args.seed, "master seed")->required();
  sweep_cmd->add_option("--dims", sweep_args.dims, "dimension cycle (default 2,3,4)");
  sweep_cmd->add_flag("--oracle", sweep_args.oracle, "ball-oracle sweep instead");
  sweep_cmd->add_option("--out", sweep_args.out, "CSV path (default stdout)");
  sweep_cmd->callback(guard([&sweep_args]() { return run_sweep(sweep_args); }));

  FamilyArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Number of shapes in a family range");
  count_cmd->add_option("--kind", count_args.kind, "family kind");
  count_cmd->add_option("--n", count_args.n, "ambient dimension")->required();
  count_cmd->add_option("--tau-psi", count_args.tau_psi, "radius decay exponents");
  count_cmd->add_option("--tau-phi", count_args.tau_phi, "thickness decay exponents");
  count_cmd->add_option("--rho", count_args.rho, "quasi-annulus norm parameter");
  count_cmd->add_option("--norm", count_args.norm, "ball norm (default inf)");
  count_cmd->add_option("--j", count_args.j, "shifted-rect coordinate");
  count_cmd->add_option("--sign", count_args.sign, "shifted-rect side");
  count_cmd->add_flag("--coprime", count_args.coprime, "coprime centers only");
  count_cmd->add_option("--q-lo", count_args.q_lo, "lowest denominator")->required();
  count_cmd->add_option("--q-hi", count_args.q_hi, "highest denominator")->required();
  count_cmd->callback(guard([&count_args]() { return run_count(count_args); }));

  FamilyArgs stream_args;
  auto* stream_cmd = app.add_subcommand("stream", "NDJSON dump of a family range");
  stream_cmd->add_option("--kind", stream_args.kind, "family kind");
  stream_cmd->add_option("--n", stream_args.n, "ambient dimension")->required();
  stream_cmd->add_option("--tau-psi", stream_args.tau_psi, "radius decay exponents");
  stream_cmd->add_option("--tau-phi", stream_args.tau_phi, "thickness decay exponents");
  stream_cmd->add_option("--rho", stream_args.rho, "quasi-annulus norm parameter");
  stream_cmd->add_option("--norm", stream_args.norm, "ball norm (default inf)");
  stream_cmd->add_option("--j", stream_args.j, "shifted-rect coordinate");
  stream_cmd->add_option("--sign", stream_args.sign, "shifted-rect side");
  stream_cmd->add_flag("--coprime", stream_args.coprime, "coprime centers only");
  stream_cmd->add_option("--q-lo", stream_args.q_lo, "lowest denominator")->required();
  stream_cmd->add_option("--q-hi", stream_args.q_hi, "highest denominator")->required();
  stream_cmd->add_option("--out", stream_args.out, "NDJSON path (default stdout)");
  stream_cmd->callback(guard([&stream_args]() { return run_stream(stream_args); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return rc;
}
