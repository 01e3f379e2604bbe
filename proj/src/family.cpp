#include "pslens/family.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace pslens {

FamilyParams family_params(const Integer& n) { return {3 * n * n + n + 1, -3 * n + 2}; }

CompanionTorusKnot family_torus_knot(const Integer& n) {
  CompanionTorusKnot knot{abs(3 * n + 1), abs(n), n < 0};
  if (gcd(knot.a, knot.b) != 1) throw std::logic_error("family_torus_knot: gcd(3n+1, n) != 1");
  return knot;
}

bool verify_cf_identity(const Integer& n) {
  const auto [p, q] = family_params(n);
  const std::vector<Integer> terms{n, -1, -n, 3};
  return cf_eval(terms) == Rational(-p, q);
}

FamilyAlexander family_alexander(const Integer& n) {
  const CompanionTorusKnot knot = family_torus_knot(n);
  if (!knot.genuine()) throw DomainError("family_alexander: n = 0 has no companion torus knot");
  const Integer p = family_params(n).p;
  FamilyAlexander out;
  out.delta_t = torus_alexander(knot.a, knot.b);
  out.delta_k = correction_lift(out.delta_t, p);
  out.from_absolute_parameters = knot.mirrored;
  return out;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

namespace {

CheckStatus status_of(bool applicable, bool ok) {
  if (!applicable) return CheckStatus::NotApplicable;
  return ok ? CheckStatus::Pass : CheckStatus::Fail;
}

}  // namespace

std::vector<Check> FamilyReport::checks() const {
  const auto& a = alexander_checks;
  const bool genus_applicable = genus_k.has_value();
  return {
      {"p_odd", status_of(true, p % 2 != 0)},
      {"lens_well_formed", status_of(true, gcd(p, q) == 1)},
      {"cf_identity", status_of(true, cf_identity_ok)},
      {"alexander.degree_bound", status_of(a.applicable, a.degree_bound)},
      {"alexander.top_exponent", status_of(a.applicable, a.top_exponent)},
      {"alexander.lspace_form", status_of(a.applicable, a.lspace_form)},
      {"alexander.value_at_one", status_of(a.applicable, a.value_at_one)},
      {"alexander.reduction_agrees", status_of(a.applicable, a.reduction_agrees)},
      {"alexander.tilde_constraints", status_of(a.applicable, a.tilde_constraints)},
      {"genus", status_of(genus_applicable, genus_applicable && 2 * *genus_k == p + 1)},
      {"hfk_rank_metadata", status_of(genus_applicable, genus_applicable && hfk_rank_reported == 2 * *genus_k + 1)},
      {"lens_surgery.modular_identity", status_of(true, lens_surgery_check.modular_identity)},
      {"lens_surgery.unoriented", status_of(lens_surgery_check.applicable, lens_surgery_check.unoriented)},
      {"reducible.unoriented", status_of(reducible_check.applicable, reducible_check.unoriented)},
      {"hsphere.minus_nonempty", status_of(classes_computed, !hsphere_classes.minus.empty())},
  };
}

bool FamilyReport::all_checks_pass() const {
  const auto list = checks();
  return std::none_of(list.begin(), list.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

FamilyReport family_report(const Integer& n) {
  FamilyReport r;
  r.n = n;
  const auto [p, q] = family_params(n);
  r.p = p;
  r.q = q;
  r.torus_knot = family_torus_knot(n);
  r.hfk_rank_reported = p + 2;
  r.tunnel = tunnel_verdict(n);

  try {
    r.cf_identity_ok = verify_cf_identity(n);
  } catch (const DegenerateEvaluation& e) {
    r.cf_identity_error = e.what();
  }

  const LensSpace target{p, q};
  const bool genuine = r.torus_knot.genuine();
  const bool dense = p <= kDenseLimit;
  const Integer& a = r.torus_knot.a;
  const Integer& b = r.torus_knot.b;

  if (genuine && !dense) r.skipped.push_back("alexander");
  if (genuine && dense) {
    const FamilyAlexander alex = family_alexander(n);
    AlexanderChecks& c = r.alexander_checks;
    c.applicable = true;
    c.degree_bound = 2 * genus_from_alexander(alex.delta_t) < p;
    c.top_exponent = Integer(alex.delta_k.max_exponent()) == (p + 1) / 2;
    c.lspace_form = lspace_form_check(alex.delta_k).ok;
    c.value_at_one = alex.delta_k.value_at_one() == 1;
    const CyclicPoly reduced_k = cyclic_reduce(alex.delta_k, p);
    c.reduction_agrees = reduced_k == cyclic_reduce(alex.delta_t, p);
    c.tilde_constraints =
        tilde_constraints_check(reduced_k) &&
        std::none_of(reduced_k.coefficients().begin(), reduced_k.coefficients().end(),
                     [](const Integer& x) { return x == 2; });
    r.genus_k = genus_from_alexander(alex.delta_k);
    r.delta_t = alex.delta_t;
    r.delta_k = alex.delta_k;
  }

  LensSurgeryCheck& lens = r.lens_surgery_check;
  lens.modular_identity = mod(n * n * q, p) == mod(-1, p);
  if (genuine) {
    lens.applicable = true;
    lens.result = torus_knot_integral_surgery(a, b, p);
    if (const auto* hit = std::get_if<surgery::LensResult>(&*lens.result)) {
      lens.unoriented = equivalent_unoriented(hit->lens, target);
      lens.oriented = equivalent_oriented(hit->lens, target);
    }
  }

  ReducibleCheck& red = r.reducible_check;
  red.expected = LensSum({{n, -1}, {3 * n + 1, 3}});
  if (genuine) {
    red.applicable = true;
    red.result = torus_knot_integral_surgery(a, b, a * b);
    if (auto sum = as_lens_sum(*red.result)) {
      red.unoriented = sum_equivalent(*sum, red.expected, Orientation::Unoriented);
      red.oriented = sum_equivalent(*sum, red.expected, Orientation::Oriented);
    }
  }

  if (dense) {
    r.classes_computed = true;
    r.hsphere_classes = hsphere_surgery_classes(p, q);
    r.berge_vii_at_p = berge_vii_classes(p);
  } else {
    r.skipped.push_back("hsphere_classes");
    r.skipped.push_back("berge_vii_at_p");
  }
  return r;
}

std::vector<FamilyReport> census_scan(const Integer& n_min, const Integer& n_max, unsigned threads) {
  if (n_min > n_max) throw DomainError("census_scan: n_min must be <= n_max");
  const std::size_t count = static_cast<std::size_t>(to_int64(n_max - n_min + 1, "census size"));
  std::vector<FamilyReport> reports(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reports[i] = family_report(n_min + i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace pslens
