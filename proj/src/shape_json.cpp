#include "annuli/shape_json.hpp"

#include <stdexcept>

namespace annuli {
namespace geom {

using nlohmann::json;

json rat_to_json(const Rat& x) {
  return to_fraction_string(x);
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational fields must be \"num/den\" strings");
  return parse_rat(j.get<std::string>());
}

json bound_to_json(const RadiusBound& b) {
  if (b.is_exact()) return rat_to_json(b.lo);
  return json{{"lo", rat_to_json(b.lo)}, {"hi", rat_to_json(b.hi)}};
}

RadiusBound bound_from_json(const json& j) {
  if (j.is_string()) return RadiusBound(rat_from_json(j));
  if (j.is_object() && j.contains("lo") && j.contains("hi"))
    return RadiusBound(rat_from_json(j.at("lo")), rat_from_json(j.at("hi")));
  throw std::invalid_argument("radius bound must be a string or {lo, hi}");
}

std::string norm_to_string(const Norm& n) {
  if (n.is_inf()) return "inf";
  return to_fraction_string(*n.rho);
}

Norm norm_from_string(const std::string& s) {
  if (s == "inf") return Norm::inf();
  return Norm::lp(parse_rat(s));
}

namespace {

json center_to_json(const std::vector<Rat>& c) {
  json out = json::array();
  for (const auto& x : c) out.push_back(rat_to_json(x));
  return out;
}

std::vector<Rat> center_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("center must be a nonempty array");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

json bounds_to_json(const std::vector<RadiusBound>& v) {
  json out = json::array();
  for (const auto& b : v) out.push_back(bound_to_json(b));
  return out;
}

std::vector<RadiusBound> bounds_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("radii must be an array");
  std::vector<RadiusBound> out;
  for (const auto& e : j) out.push_back(bound_from_json(e));
  return out;
}

}  // namespace

json shape_to_json(const Shape& s) {
  json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        out["center"] = center_to_json(v.center);
        if constexpr (std::is_same_v<T, Ball>) {
          out["kind"] = "ball";
          out["radius"] = bound_to_json(v.radius);
          out["norm"] = norm_to_string(v.norm);
          out["rounded_inward"] = v.rounded_inward;
        } else if constexpr (std::is_same_v<T, Rect>) {
          out["kind"] = "rect";
          out["radii"] = bounds_to_json(v.radii);
          out["rounded_inward"] = v.rounded_inward;
        } else if constexpr (std::is_same_v<T, Annulus>) {
          out["kind"] = "annulus";
          out["outer"] = bound_to_json(v.outer);
          out["inner"] = bound_to_json(v.inner);
        } else if constexpr (std::is_same_v<T, RectAnnulus>) {
          out["kind"] = "rect_annulus";
          out["outer"] = bounds_to_json(v.outer);
          out["inner"] = bounds_to_json(v.inner);
        } else {
          out["kind"] = "quasi_annulus";
          out["radius"] = bound_to_json(v.radius);
          out["inner_norm"] = norm_to_string(v.inner_norm);
        }
      },
      s);
  return out;
}

Shape shape_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("shape JSON must be an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  Shape out;
  if (kind == "ball") {
    Ball b;
    b.center = center_from_json(j.at("center"));
    b.radius = bound_from_json(j.at("radius"));
    b.norm = norm_from_string(j.at("norm").get<std::string>());
    b.rounded_inward = j.value("rounded_inward", false);
    out = b;
  } else if (kind == "rect") {
    Rect r;
    r.center = center_from_json(j.at("center"));
    r.radii = bounds_from_json(j.at("radii"));
    r.rounded_inward = j.value("rounded_inward", false);
    out = r;
  } else if (kind == "annulus") {
    Annulus a;
    a.center = center_from_json(j.at("center"));
    a.outer = bound_from_json(j.at("outer"));
    a.inner = bound_from_json(j.at("inner"));
    out = a;
  } else if (kind == "rect_annulus") {
    RectAnnulus a;
    a.center = center_from_json(j.at("center"));
    a.outer = bounds_from_json(j.at("outer"));
    a.inner = bounds_from_json(j.at("inner"));
    out = a;
  } else if (kind == "quasi_annulus") {
    QuasiAnnulus a;
    a.center = center_from_json(j.at("center"));
    a.radius = bound_from_json(j.at("radius"));
    a.inner_norm = norm_from_string(j.at("inner_norm").get<std::string>());
    out = a;
  } else {
    throw std::invalid_argument("unknown shape kind '" + kind + "'");
  }
  validate(out);
  return out;
}

}  // namespace geom
}  // namespace annuli
