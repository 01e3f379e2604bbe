#include "pslens/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "pslens/io.hpp"

namespace pslens::cli {

namespace {

using io::Json;

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerifyFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One query result: a JSON object and its one-line or multi-line text form.
struct Output {
  Json json;
  std::string text;
  // Explicit CSV table; otherwise the top-level JSON fields become one row.
  std::vector<std::vector<std::string>> csv;
};

std::string csv_cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void emit(const Output& result, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      out << result.text;
      if (result.text.empty() || result.text.back() != '\n') out << '\n';
      return;
    case Format::Json:
      out << result.json.dump(2) << '\n';
      return;
    case Format::Csv:
      if (!result.csv.empty()) {
        for (const auto& row : result.csv) out << io::csv_line(row) << '\n';
        return;
      }
      std::vector<std::string> header, row;
      for (const auto& [key, value] : result.json.items()) {
        header.push_back(key);
        row.push_back(csv_cell(value));
      }
      out << io::csv_line(header) << '\n' << io::csv_line(row) << '\n';
      return;
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::vector<Integer> parse_integers(const std::vector<std::string>& words) {
  std::vector<Integer> out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(parse_integer(w));
  return out;
}

Json poly_json(const LaurentPoly& poly) { return {{"poly", poly.to_string()}, {"terms", io::to_json(poly)}}; }

Json cyclic_json(const CyclicPoly& c) {
  Json coefficients = Json::array();
  for (const Integer& x : c.coefficients()) coefficients.push_back(io::to_json(x));
  return {{"modulus", c.modulus()}, {"coefficients", coefficients}, {"poly", c.to_string()}};
}

Output classes_output(const std::string& label, const Integer& p, const std::vector<Integer>& classes) {
  Output o;
  o.json = {{"kind", label}, {"p", io::to_json(p)}, {"classes", io::to_json(classes)}};
  o.text = io::set_to_string(classes);
  return o;
}

std::string gates_text(const TunnelVerdict& v) {
  std::string out = v.to_string() + "\n";
  for (const GateResult& g : v.gates)
    out += "  " + to_string(g.gate) + (g.passed ? " pass: " : " FAIL: ") + g.detail + "\n";
  return out;
}

std::string failed_checks(const FamilyReport& r) {
  std::string out;
  for (const Check& c : r.checks()) {
    if (c.status != CheckStatus::Fail) continue;
    out += (out.empty() ? "" : ", ") + c.name;
  }
  return out;
}

Orientation orientation_of(bool oriented) { return oriented ? Orientation::Oriented : Orientation::Unoriented; }

// Holds the option storage for every verb and the handler of each leaf command.
class Cli {
 public:
  Cli() : app_("Exact calculator for lens-space surgeries, continued fractions and the K_n family", "pslens") {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--format", format_name_, "Output format: text, json or csv (default from PSLENS_FORMAT)");
    build_cf();
    build_lens();
    build_tangle();
    build_pretzel();
    build_torus_surgery();
    build_slope();
    build_classes();
    build_hedden();
    build_alex();
    build_family();
    build_census();
  }

  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << help_for_parsed();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app_.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << "\n" << help_for_parsed();
      return kUsageError;
    }

    format_ = select_format();
    if (!format_) {
      err << "usage error: unknown output format '" << requested_format_name() << "' (expected text, json or csv)\n";
      return kUsageError;
    }
    out_ = &out;
    try {
      for (auto& [command, handler] : handlers_) {
        if (command->parsed()) {
          handler();
          return kOk;
        }
      }
      err << "usage error: incomplete command\n" << help_for_parsed();
      return kUsageError;
    } catch (const VerifyFailed& e) {
      err << "verify failed: " << e.what() << "\n";
      return kVerifyFailed;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsageError;
    } catch (const ParseError& e) {
      report_error(err, "ParseError", e.what());
      return kUsageError;
    } catch (const DegenerateEvaluation& e) {
      report_error(err, "DegenerateEvaluation", e.what());
      return kDomainError;
    } catch (const DomainError& e) {
      report_error(err, "DomainError", e.what());
      return kDomainError;
    }
  }

 private:
  CLI::App app_;
  std::string format_name_;
  std::optional<Format> format_;
  bool format_defaulted_ = false;
  std::ostream* out_ = nullptr;
  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers_;

  // Option storage.
  std::vector<std::string> words_;
  std::string arg_a_, arg_b_, arg_c_, arg_p_, arg_q_, arg_n_, arg_m_, arg_poly_;
  std::string census_from_, census_to_, census_output_;
  unsigned census_threads_ = 1;
  bool oriented_ = false;
  bool verify_ = false;

  std::string requested_format_name() const {
    if (!format_name_.empty()) return format_name_;
    const char* env = std::getenv(kFormatEnv);
    return env ? env : "";
  }

  std::optional<Format> select_format() {
    const std::string name = requested_format_name();
    format_defaulted_ = name.empty();
    if (format_defaulted_) return Format::Text;
    return parse_format(name);
  }

  std::string help_for_parsed() const {
    const CLI::App* deepest = &app_;
    for (bool descended = true; descended;) {
      descended = false;
      for (const CLI::App* sub : deepest->get_subcommands([](const CLI::App* a) { return a->parsed(); })) {
        deepest = sub;
        descended = true;
        break;
      }
    }
    return deepest->help();
  }

  void report_error(std::ostream& err, const std::string& kind, const std::string& message) const {
    if (format_ == Format::Json) {
      err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    } else {
      err << "error: " << kind << ": " << message << '\n';
    }
  }

  void print(const Output& result) const { emit(result, *format_, *out_); }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& description,
                 std::function<void()> handler) {
    CLI::App* command = parent->add_subcommand(name, description);
    handlers_.emplace_back(command, std::move(handler));
    return command;
  }

  CLI::App* verb(const std::string& name, const std::string& description) {
    CLI::App* command = app_.add_subcommand(name, description);
    command->require_subcommand(1);
    return command;
  }

  static void required_option(CLI::App* command, const std::string& flag, std::string& store,
                             const std::string& description) {
    command->add_option(flag, store, description)->required();
  }

  // --- cf --------------------------------------------------------------------

  void build_cf() {
    CLI::App* cf = verb("cf", "Negative continued fractions");

    CLI::App* eval = leaf(cf, "eval", "Evaluate [a1,...,ak] = a1 - 1/(a2 - ...)", [this] {
      const std::vector<Integer> terms = parse_integers(words_);
      const Rational value = cf_eval(terms);
      print({{{"terms", io::to_json(terms)}, {"value", value.to_string()}}, value.to_string(), {}});
    });
    eval->add_option("terms", words_, "Terms, which may be negative")->required();

    CLI::App* expand = leaf(cf, "expand", "Expand p/q as a continued fraction with every later term <= -2", [this] {
      const ContinuedFraction cf = cf_expand(parse_integer(arg_p_), parse_integer(arg_q_));
      print({{{"p", arg_p_}, {"q", arg_q_}, {"terms", io::to_json(cf.terms)}}, cf.to_string(), {}});
    });
    expand->add_option("p", arg_p_)->required();
    expand->add_option("q", arg_q_)->required();

    CLI::App* bridge = leaf(cf, "two-bridge", "Two-bridge link of a continued fraction and its double cover", [this] {
      const std::vector<Integer> terms = parse_integers(words_);
      const TwoBridge b = two_bridge_from_cf(terms);
      const LensSpace cover = b.double_cover();
      Output o;
      o.json = {{"terms", io::to_json(terms)},
                {"two_bridge", b.to_string()},
                {"is_knot", b.is_knot()},
                {"double_cover", cover.to_string()},
                {"double_cover_canonical", canonical(cover).to_string()}};
      o.text = b.to_string() + ", double cover " + cover.to_string();
      print(o);
    });
    bridge->add_option("terms", words_)->required();
  }

  // --- lens ------------------------------------------------------------------

  void build_lens() {
    CLI::App* lens = verb("lens", "Lens spaces L(p,q)");

    CLI::App* normalize_cmd = leaf(lens, "normalize", "Canonical form and mirror flag", [this] {
      const NormalizedLens n = normalize(LensSpace::parse(words_.at(0)));
      Output o;
      o.json = {{"input", words_.at(0)},
                {"canonical", n.canonical.to_string()},
                {"lens", io::to_json(n.canonical)},
                {"mirror_flag", n.mirror_flag}};
      o.text = n.canonical.to_string() + (n.mirror_flag ? " (mirror flag set)" : "");
      print(o);
    });
    normalize_cmd->add_option("lens", words_, "L(p,q)")->required()->expected(1);

    CLI::App* equiv = leaf(lens, "equiv", "Homeomorphism test", [this] {
      if (words_.size() != 2) throw UsageError("lens equiv takes exactly two lens spaces");
      const LensSpace a = LensSpace::parse(words_[0]), b = LensSpace::parse(words_[1]);
      const bool result = oriented_ ? equivalent_oriented(a, b) : equivalent_unoriented(a, b);
      print({{{"a", a.to_string()},
              {"b", b.to_string()},
              {"orientation", oriented_ ? "oriented" : "unoriented"},
              {"equivalent", result}},
             bool_text(result),
             {}});
    });
    equiv->add_option("lenses", words_, "Two lens spaces")->required();
    equiv->add_flag("--oriented", oriented_, "Require an orientation-preserving homeomorphism");

    CLI::App* mirror_cmd = leaf(lens, "mirror", "Orientation reversal", [this] {
      const LensSpace m = canonical(mirror(LensSpace::parse(words_.at(0))));
      print({{{"input", words_.at(0)}, {"mirror", m.to_string()}}, m.to_string(), {}});
    });
    mirror_cmd->add_option("lens", words_)->required()->expected(1);

    CLI::App* unknot = leaf(lens, "unknot", "Lens space of r-surgery on the unknot", [this] {
      const Rational slope = Rational::parse(words_.at(0));
      const LensSpace l = lens_of_unknot_surgery(slope);
      // -p/q = r, written with p >= 0.
      const LensSpace raw = slope.numerator() >= 0 ? LensSpace{slope.numerator(), -slope.denominator()}
                                                   : LensSpace{-slope.numerator(), slope.denominator()};
      const std::string text = raw == l ? l.to_string() : raw.to_string() + " = " + l.to_string();
      print({{{"slope", slope.to_string()}, {"raw", raw.to_string()}, {"canonical", l.to_string()}}, text, {}});
    });
    unknot->add_option("slope", words_, "Rational slope p/q")->required()->expected(1);

    CLI::App* sum = leaf(lens, "sum-equiv", "Compare connected sums of lens spaces", [this] {
      if (words_.size() != 2) throw UsageError("lens sum-equiv takes exactly two sums");
      const LensSum a = LensSum::parse(words_[0]), b = LensSum::parse(words_[1]);
      const bool result = sum_equivalent(a, b, orientation_of(oriented_));
      print({{{"a", a.to_string()},
              {"b", b.to_string()},
              {"orientation", oriented_ ? "oriented" : "unoriented"},
              {"equivalent", result}},
             bool_text(result),
             {}});
    });
    sum->add_option("sums", words_, "Two sums such as \"L(2,1) # L(3,1)\"")->required();
    sum->add_flag("--oriented", oriented_);
  }

  // --- tangle / pretzel ---------------------------------------------------------

  void build_tangle() {
    CLI::App* tangle = verb("tangle", "Sums of rational tangles");

    CLI::App* cover = leaf(tangle, "cover", "Double branched cover of 1/x + 1/y", [this] {
      const TangleSum sum = TangleSum::parse(words_.at(0));
      const SeifertClass cls = tangle_sum_double_cover(sum);
      print({{{"tangle", sum.to_string()}, {"cover", io::to_json(cls)}}, describe(cls), {}});
    });
    cover->add_option("sum", words_, "\"1/x + 1/y\"")->required()->expected(1);

    CLI::App* tunnel = leaf(tangle, "tunnel", "Tunnel-number case analysis for K_n", [this] {
      const TunnelVerdict v = tunnel_verdict(parse_integer(arg_n_));
      Json j = io::to_json(v);
      j["n"] = arg_n_;
      print({j, gates_text(v), {}});
    });
    required_option(tunnel, "--n", arg_n_, "Family parameter");
  }

  void build_pretzel() {
    CLI::App* pretzel = verb("pretzel", "Pretzel links P(a,b,c)");

    CLI::App* cover = leaf(pretzel, "cover", "Double branched cover", [this] {
      const Pretzel p = Pretzel::parse(words_.at(0));
      const SeifertClass cls = pretzel_double_cover(p);
      print({{{"pretzel", p.to_string()}, {"two_bridge", pretzel_is_two_bridge(p)}, {"cover", io::to_json(cls)}},
             describe(cls),
             {}});
    });
    cover->add_option("pretzel", words_, "P(a,b,c)")->required()->expected(1);

    CLI::App* bridge = leaf(pretzel, "two-bridge", "Whether the pretzel link is two-bridge", [this] {
      const Pretzel p = Pretzel::parse(words_.at(0));
      const bool result = pretzel_is_two_bridge(p);
      print({{{"pretzel", p.to_string()}, {"two_bridge", result}}, bool_text(result), {}});
    });
    bridge->add_option("pretzel", words_)->required()->expected(1);
  }

  // --- torus-surgery / slope -------------------------------------------------------

  void build_torus_surgery() {
    CLI::App* command = app_.add_subcommand("torus-surgery", "Integral surgery on a torus knot");
    handlers_.emplace_back(command, [this] {
      const Integer a = parse_integer(arg_a_), b = parse_integer(arg_b_), m = parse_integer(arg_m_);
      const SurgeryResult result = torus_knot_integral_surgery(a, b, m);
      Json j = {{"a", arg_a_}, {"b", arg_b_}, {"m", arg_m_}};
      j["result"] = io::to_json(result);
      print({j, describe(result), {}});
    });
    required_option(command, "--a", arg_a_, "First torus parameter");
    required_option(command, "--b", arg_b_, "Second torus parameter");
    required_option(command, "--m", arg_m_, "Surgery coefficient");
  }

  void build_slope() {
    CLI::App* slope = verb("slope", "Boundary slopes p*mu + q*lambda");

    CLI::App* distance = leaf(slope, "distance", "Minimal intersection number", [this] {
      if (words_.size() != 2) throw UsageError("slope distance takes exactly two slopes");
      const Slope a = Slope::parse(words_[0]), b = Slope::parse(words_[1]);
      const Integer d = slope_distance(a, b);
      print({{{"a", io::to_json(a)}, {"b", io::to_json(b)}, {"distance", io::to_json(d)}}, d.str(), {}});
    });
    distance->add_option("slopes", words_, "Two slopes p/q")->required();

    CLI::App* involution = leaf(slope, "involution", "Image under the strong inversion", [this] {
      const Slope s = Slope::parse(words_.at(0));
      const Slope image = involution_image(s);
      print({{{"slope", io::to_json(s)},
              {"image", io::to_json(image)},
              {"distance", io::to_json(slope_distance(s, image))}},
             image.to_string(),
             {}});
    });
    involution->add_option("slope", words_)->required()->expected(1);

    CLI::App* dual = leaf(slope, "dual-linking", "Self-linking of the surgery dual of p-surgery", [this] {
      const Rational v = dual_self_linking(parse_integer(arg_p_));
      print({{{"p", arg_p_}, {"self_linking", v.to_string()}}, v.to_string(), {}});
    });
    required_option(dual, "--p", arg_p_, "Surgery coefficient");
  }

  // --- classes / hedden --------------------------------------------------------------

  void build_classes() {
    CLI::App* classes = verb("classes", "Homology classes in L(p,q)");

    CLI::App* vii = leaf(classes, "berge7", "Solutions of k^2 + k + 1 = 0 mod p", [this] {
      const Integer p = parse_integer(arg_p_);
      print(classes_output("berge7", p, berge_vii_classes(p)));
    });
    required_option(vii, "--p", arg_p_, "Order of the first homology");

    CLI::App* viii = leaf(classes, "berge8", "Solutions of k^2 - k - 1 = 0 mod p", [this] {
      const Integer p = parse_integer(arg_p_);
      print(classes_output("berge8", p, berge_viii_classes(p)));
    });
    required_option(viii, "--p", arg_p_, "Order of the first homology");

    CLI::App* hsphere = leaf(classes, "hsphere", "Classes with a homology-sphere surgery: k^2 = +-q mod p", [this] {
      const Integer p = parse_integer(arg_p_), q = parse_integer(arg_q_);
      const HsphereClasses c = hsphere_surgery_classes(p, q);
      Json j = {{"p", arg_p_}, {"q", arg_q_}};
      j.update(io::to_json(c));
      print({j, "+ " + io::set_to_string(c.plus) + "\n- " + io::set_to_string(c.minus), {}});
    });
    required_option(hsphere, "--p", arg_p_, "p");
    required_option(hsphere, "--q", arg_q_, "q");

    CLI::App* quadratic = leaf(classes, "quadratic", "Solutions of a k^2 + b k + c = 0 mod p", [this] {
      const Integer p = parse_integer(arg_p_);
      const auto roots = quadratic_solutions(parse_integer(arg_a_), parse_integer(arg_b_), parse_integer(arg_c_), p);
      print(classes_output("quadratic", p, roots));
    });
    required_option(quadratic, "--a", arg_a_, "Quadratic coefficient");
    required_option(quadratic, "--b", arg_b_, "Linear coefficient");
    required_option(quadratic, "--c", arg_c_, "Constant term");
    required_option(quadratic, "--p", arg_p_, "Modulus");
  }

  void build_hedden() {
    CLI::App* command = app_.add_subcommand("hedden", "The two almost simple knots in L(p,q)");
    handlers_.emplace_back(command, [this] {
      const Integer p = parse_integer(arg_p_), q = parse_integer(arg_q_);
      const HeddenClasses classes = hedden_classes(p, q);
      const HeddenConditions c = hedden_hs_conditions(p, q);
      Output o;
      o.json = {{"p", arg_p_},
                {"q", arg_q_},
                {"T_L", io::to_json(classes.left.k)},
                {"T_R", io::to_json(classes.right.k)},
                {"left_admits", c.left_admits},
                {"right_admits", c.right_admits},
                {"left_substitute", io::to_json(c.left_substitute)},
                {"right_substitute", io::to_json(c.right_substitute)},
                {"left_substitute_in_viii", c.left_substitute_in_viii},
                {"right_substitute_in_vii", c.right_substitute_in_vii}};
      o.text = "T_L class " + classes.left.k.str() + ", (q+1)^2 = -q: " + bool_text(c.left_admits) +
               "\nT_R class " + classes.right.k.str() + ", (q-1)^2 = -q: " + bool_text(c.right_admits);
      print(o);
    });
    required_option(command, "--p", arg_p_, "p");
    required_option(command, "--q", arg_q_, "q");
  }

  // --- alex ----------------------------------------------------------------------------

  void build_alex() {
    CLI::App* alex = verb("alex", "Alexander polynomials");

    CLI::App* torus = leaf(alex, "torus", "Symmetrized Alexander polynomial of T(a,b)", [this] {
      const LaurentPoly d = torus_alexander(parse_integer(arg_a_), parse_integer(arg_b_));
      Json j = poly_json(d);
      j["genus"] = io::to_json(genus_from_alexander(d));
      print({j, d.to_string(), {}});
    });
    required_option(torus, "--a", arg_a_, "First torus parameter");
    required_option(torus, "--b", arg_b_, "Second torus parameter");

    CLI::App* lift = leaf(alex, "lift", "Lift a base polynomial by the correction terms for odd p", [this] {
      const LaurentPoly d = correction_lift(LaurentPoly::parse(arg_poly_), parse_integer(arg_p_));
      Json j = poly_json(d);
      j["genus"] = io::to_json(genus_from_alexander(d));
      print({j, d.to_string(), {}});
    });
    required_option(lift, "--poly", arg_poly_, "Base polynomial");
    required_option(lift, "--p", arg_p_, "Odd p >= 3");

    CLI::App* reduce = leaf(alex, "reduce", "Reduction modulo t^p - 1", [this] {
      const CyclicPoly c = cyclic_reduce(LaurentPoly::parse(arg_poly_), parse_integer(arg_p_));
      Json j = cyclic_json(c);
      j["tilde_constraints"] = tilde_constraints_check(c);
      print({j, c.to_string(), {}});
    });
    required_option(reduce, "--poly", arg_poly_, "Polynomial");
    required_option(reduce, "--p", arg_p_, "Modulus p >= 1");

    CLI::App* lspace = leaf(alex, "lspace", "Test the alternating L-space form", [this] {
      const LSpaceForm f = lspace_form_check(LaurentPoly::parse(arg_poly_));
      Json exponents = Json::array();
      for (Exponent e : f.exponents) exponents.push_back(e);
      print({{{"ok", f.ok}, {"exponents", exponents}, {"diagnostic", f.diagnostic}},
             f.ok ? "true" : "false: " + f.diagnostic,
             {}});
    });
    required_option(lspace, "--poly", arg_poly_, "Polynomial");
  }

  // --- family / census -----------------------------------------------------------------

  void print_report(const FamilyReport& r) const {
    Output o;
    o.json = io::to_json(r);
    o.text = io::to_text(r);
    o.csv = {io::csv_header(), io::csv_row(r)};
    print(o);
  }

  void build_family() {
    CLI::App* family = verb("family", "The knots K_n");

    CLI::App* report = leaf(family, "report", "Every exact cross-check for one n", [this] {
      const FamilyReport r = family_report(parse_integer(arg_n_));
      print_report(r);
      if (verify_ && !r.all_checks_pass()) throw VerifyFailed("n = " + r.n.str() + ": " + failed_checks(r));
    });
    required_option(report, "--n", arg_n_, "Family parameter");
    report->add_flag("--verify", verify_, "Exit with status 3 if any check fails");

    CLI::App* params = leaf(family, "params", "p, q and the companion torus knot", [this] {
      const Integer n = parse_integer(arg_n_);
      const FamilyParams fp = family_params(n);
      const CompanionTorusKnot t = family_torus_knot(n);
      print({{{"n", arg_n_},
              {"p", io::to_json(fp.p)},
              {"q", io::to_json(fp.q)},
              {"lens_space", LensSpace{fp.p, fp.q}.to_string()},
              {"torus_a", io::to_json(t.a)},
              {"torus_b", io::to_json(t.b)},
              {"mirrored", t.mirrored}},
             "p = " + fp.p.str() + ", q = " + fp.q.str() + ", T(" + t.a.str() + "," + t.b.str() + ")" +
                 (t.mirrored ? " mirrored" : ""),
             {}});
    });
    required_option(params, "--n", arg_n_, "Family parameter");
  }

  void build_census() {
    CLI::App* census = app_.add_subcommand("census", "Family reports for a range of n, JSON lines by default");
    handlers_.emplace_back(census, [this] { run_census(); });
    required_option(census, "--from", census_from_, "First n");
    required_option(census, "--to", census_to_, "Last n");
    census->add_option("--threads", census_threads_, "Worker threads; 0 uses every core")->default_val(1);
    census->add_option("--output", census_output_, "Write to this file instead of standard output");
    census->add_flag("--verify", verify_, "Exit with status 3 if any check fails");
  }

  void run_census() {
    const Format format = format_defaulted_ ? Format::Json : *format_;
    const std::vector<FamilyReport> reports =
        census_scan(parse_integer(census_from_), parse_integer(census_to_), census_threads_);

    std::ofstream file;
    std::ostream* sink = out_;
    if (!census_output_.empty()) {
      file.open(census_output_);
      if (!file) throw UsageError("cannot open output file " + census_output_);
      sink = &file;
    }
    if (format == Format::Csv) *sink << io::csv_line(io::csv_header()) << '\n';
    std::string failures;
    for (const FamilyReport& r : reports) {
      switch (format) {
        case Format::Json: *sink << io::to_json(r).dump() << '\n'; break;
        case Format::Csv: *sink << io::csv_line(io::csv_row(r)) << '\n'; break;
        case Format::Text: *sink << io::to_text(r); break;
      }
      if (!r.all_checks_pass()) failures += (failures.empty() ? "" : "; ") + ("n = " + r.n.str() + ": " + failed_checks(r));
    }
    sink->flush();
    if (verify_ && !failures.empty()) throw VerifyFailed(failures);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  return cli.run(args, out, err);
}

}  // namespace pslens::cli
