#include "pslens/io.hpp"

#include <limits>
#include <sstream>

namespace pslens::io {

Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer in JSON, got " + j.dump());
}

Json to_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(to_json(v));
  return out;
}

Json to_json(const LaurentPoly& poly) {
  Json out = Json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
    out.push_back(Json::array({it->first, to_json(it->second)}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of [exp, coeff] pairs");
  LaurentPoly::Terms terms;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
      throw ParseError("bad polynomial term " + pair.dump());
    terms[pair[0].get<Exponent>()] += integer_from_json(pair[1]);
  }
  return LaurentPoly(std::move(terms));
}

Json to_json(const LensSpace& lens) { return {{"p", to_json(lens.p)}, {"q", to_json(lens.q)}}; }

LensSpace lens_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) throw ParseError("lens JSON needs p and q");
  return {integer_from_json(j.at("p")), integer_from_json(j.at("q"))};
}

Json to_json(const LensSum& sum) {
  Json out = Json::array();
  for (const LensSpace& lens : sum.summands()) out.push_back(to_json(lens));
  return out;
}

LensSum lens_sum_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("lens sum JSON must be an array");
  std::vector<LensSpace> summands;
  for (const Json& item : j) summands.push_back(lens_from_json(item));
  return LensSum(summands);
}

Json to_json(const Slope& slope) { return Json::array({to_json(slope.p()), to_json(slope.q())}); }

Slope slope_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("slope JSON must be [p, q]");
  return Slope(integer_from_json(j[0]), integer_from_json(j[1]));
}

Json to_json(const SeifertClass& cls) {
  Json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, cover::SolidTorus>) out["kind"] = "SolidTorus";
        else if constexpr (std::is_same_v<T, cover::TwistedIBundleKlein>) out["kind"] = "TwistedIBundleKlein";
        else if constexpr (std::is_same_v<T, cover::SFSOverDisk>) {
          out["kind"] = "SFSOverDisk";
          out["orders"] = to_json(v.orders);
        } else if constexpr (std::is_same_v<T, cover::SFSOverSphere>) {
          out["kind"] = "SFSOverSphere";
          out["orders"] = to_json(v.orders);
        } else if constexpr (std::is_same_v<T, cover::DegenerateFibration>) out["kind"] = "DegenerateFibration";
        else if constexpr (std::is_same_v<T, cover::ConnectedSumLike>) out["kind"] = "ConnectedSumLike";
        else if constexpr (std::is_same_v<T, cover::Lens>) {
          out["kind"] = "LensSpace";
          out["lens"] = v.lens.to_string();
        } else out["kind"] = "Other";
      },
      cls);
  out["text"] = describe(cls);
  return out;
}

Json to_json(const SurgeryResult& result) {
  Json out;
  if (const auto* lens = std::get_if<surgery::LensResult>(&result)) {
    out["kind"] = "Lens";
    out["lens"] = lens->lens.to_string();
  } else if (const auto* sum = std::get_if<surgery::Reducible>(&result)) {
    out["kind"] = "Sum";
    out["sum"] = sum->sum.to_string();
  } else {
    out["kind"] = "NotLensIntegral";
    out["orders"] = to_json(std::get<surgery::NotLens>(result).orders);
  }
  return out;
}

Json to_json(const TunnelVerdict& verdict) {
  Json out;
  out["verdict"] = to_string(verdict.kind);
  out["failed_gate"] = verdict.failed_gate ? Json(to_string(*verdict.failed_gate)) : Json(nullptr);
  out["alpha_cover"] = describe(verdict.alpha_cover);
  out["beta_cover"] = describe(verdict.beta_cover);
  Json gates = Json::array();
  for (const GateResult& g : verdict.gates)
    gates.push_back({{"gate", to_string(g.gate)}, {"passed", g.passed}, {"detail", g.detail}});
  out["gates"] = gates;
  return out;
}

Json to_json(const HsphereClasses& classes) {
  return {{"plus", to_json(classes.plus)}, {"minus", to_json(classes.minus)}};
}

namespace {

Json optional_poly(const std::optional<LaurentPoly>& poly) {
  return poly ? Json(poly->to_string()) : Json(nullptr);
}

}  // namespace

Json to_json(const FamilyReport& r) {
  Json out;
  out["n"] = to_json(r.n);
  out["p"] = to_json(r.p);
  out["q"] = to_json(r.q);
  out["lens_space"] = {{"raw", r.lens_space().to_string()}, {"canonical", canonical(r.lens_space()).to_string()}};
  out["torus_knot"] = {{"a", to_json(r.torus_knot.a)},
                       {"b", to_json(r.torus_knot.b)},
                       {"mirrored", r.torus_knot.mirrored},
                       {"genuine", r.torus_knot.genuine()}};
  out["delta_T"] = optional_poly(r.delta_t);
  out["delta_K"] = optional_poly(r.delta_k);
  out["genus_K"] = r.genus_k ? to_json(*r.genus_k) : Json(nullptr);
  out["hfk_rank_reported"] = to_json(r.hfk_rank_reported);
  out["tunnel"] = to_json(r.tunnel);
  out["cf_identity_ok"] = r.cf_identity_ok;

  const auto& ls = r.lens_surgery_check;
  out["lens_surgery_check"] = {{"applicable", ls.applicable},
                               {"result", ls.result ? to_json(*ls.result) : Json(nullptr)},
                               {"modular_identity", ls.modular_identity},
                               {"unoriented", ls.unoriented},
                               {"oriented", ls.oriented}};
  const auto& rc = r.reducible_check;
  out["reducible_check"] = {{"applicable", rc.applicable},
                            {"result", rc.result ? to_json(*rc.result) : Json(nullptr)},
                            {"expected", rc.expected.to_string()},
                            {"unoriented", rc.unoriented},
                            {"oriented", rc.oriented}};
  const auto& ac = r.alexander_checks;
  out["alexander_checks"] = {{"applicable", ac.applicable},       {"degree_bound", ac.degree_bound},
                             {"top_exponent", ac.top_exponent},   {"lspace_form", ac.lspace_form},
                             {"value_at_one", ac.value_at_one},   {"reduction_agrees", ac.reduction_agrees},
                             {"tilde_constraints", ac.tilde_constraints}};
  out["hsphere_classes"] = r.classes_computed ? to_json(r.hsphere_classes) : Json(nullptr);
  out["berge_vii_at_p"] = r.classes_computed ? to_json(r.berge_vii_at_p) : Json(nullptr);
  out["tange_table"] = "not-evaluated";
  Json checks = Json::object();
  for (const Check& c : r.checks()) checks[c.name] = to_string(c.status);
  out["checks"] = checks;
  out["all_checks_pass"] = r.all_checks_pass();
  out["skipped"] = r.skipped;
  return out;
}

std::vector<std::string> csv_header() {
  return {"n",           "p",          "q",           "lens_canonical", "torus_a",     "torus_b",
          "mirrored",    "delta_T",    "delta_K",     "genus_K",        "hfk_rank_reported",
          "tunnel",      "cf_identity_ok", "lens_surgery", "lens_unoriented", "reducible",
          "reducible_unoriented", "hsphere_plus", "hsphere_minus", "berge_vii_at_p", "all_checks_pass"};
}

std::string set_to_string(const std::vector<Integer>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
  return out + "}";
}

std::vector<std::string> csv_row(const FamilyReport& r) {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  auto poly = [](const std::optional<LaurentPoly>& p) { return p ? p->to_string() : std::string(); };
  return {r.n.str(),
          r.p.str(),
          r.q.str(),
          canonical(r.lens_space()).to_string(),
          r.torus_knot.a.str(),
          r.torus_knot.b.str(),
          flag(r.torus_knot.mirrored),
          poly(r.delta_t),
          poly(r.delta_k),
          r.genus_k ? r.genus_k->str() : std::string(),
          r.hfk_rank_reported.str(),
          r.tunnel.to_string(),
          flag(r.cf_identity_ok),
          r.lens_surgery_check.result ? describe(*r.lens_surgery_check.result) : std::string(),
          flag(r.lens_surgery_check.unoriented),
          r.reducible_check.result ? describe(*r.reducible_check.result) : std::string(),
          flag(r.reducible_check.unoriented),
          r.classes_computed ? set_to_string(r.hsphere_classes.plus) : std::string(),
          r.classes_computed ? set_to_string(r.hsphere_classes.minus) : std::string(),
          r.classes_computed ? set_to_string(r.berge_vii_at_p) : std::string(),
          flag(r.all_checks_pass())};
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char ch : f) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out;
}

std::string to_text(const FamilyReport& r) {
  std::ostringstream os;
  os << "K_" << r.n << ": p = " << r.p << ", q = " << r.q << ", " << r.lens_space().to_string() << " = "
     << canonical(r.lens_space()).to_string() << "\n";
  os << "  companion torus knot T(" << r.torus_knot.a << "," << r.torus_knot.b << ")"
     << (r.torus_knot.mirrored ? " (mirror)" : "") << (r.torus_knot.genuine() ? "" : " (not a torus knot)") << "\n";
  if (r.delta_t) os << "  Delta_T = " << r.delta_t->to_string() << "\n";
  if (r.delta_k) os << "  Delta_K = " << r.delta_k->to_string() << "\n";
  if (r.genus_k) os << "  genus = " << *r.genus_k << "\n";
  os << "  reported HFK rank = " << r.hfk_rank_reported << "\n";
  os << "  tunnel: " << r.tunnel.to_string() << "\n";
  for (const GateResult& g : r.tunnel.gates)
    os << "    " << to_string(g.gate) << (g.passed ? " pass: " : " FAIL: ") << g.detail << "\n";
  if (r.lens_surgery_check.result)
    os << "  p-surgery on T: " << describe(*r.lens_surgery_check.result) << "\n";
  if (r.reducible_check.result)
    os << "  ab-surgery on T: " << describe(*r.reducible_check.result) << " (expected "
       << r.reducible_check.expected.to_string() << ")\n";
  if (r.classes_computed) {
    os << "  homology-sphere classes: + " << set_to_string(r.hsphere_classes.plus) << ", - "
       << set_to_string(r.hsphere_classes.minus) << "\n";
    os << "  type VII classes mod p: " << set_to_string(r.berge_vii_at_p) << "\n";
  }
  if (!r.skipped.empty()) {
    os << "  skipped (p too large):";
    for (const std::string& s : r.skipped) os << " " << s;
    os << "\n";
  }
  os << "  checks:";
  for (const Check& c : r.checks()) os << " " << c.name << "=" << to_string(c.status);
  os << "\n";
  return os.str();
}

}  // namespace pslens::io
