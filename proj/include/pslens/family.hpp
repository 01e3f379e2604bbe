#pragma once

// The knots K_n: p = 3n^2 + n + 1, q = -3n + 2, companion torus knot
// T(3n+1, n), and every cross-check that can be carried out exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pslens/exact.hpp"
#include "pslens/laurent.hpp"
#include "pslens/lens.hpp"
#include "pslens/seifert.hpp"
#include "pslens/surgery.hpp"

namespace pslens {

struct FamilyParams {
  Integer p;
  Integer q;
};

FamilyParams family_params(const Integer& n);

/// (|3n+1|, |n|); negative n gives the mirror torus knot. n = 0 gives (1,0),
/// which is not a torus knot.
struct CompanionTorusKnot {
  Integer a;
  Integer b;
  bool mirrored = false;

  bool genuine() const { return a >= 1 && b >= 1; }
};

CompanionTorusKnot family_torus_knot(const Integer& n);

/// cf_eval([n,-1,-n,3]) == -p/q. Propagates DegenerateEvaluation.
bool verify_cf_identity(const Integer& n);

struct FamilyAlexander {
  LaurentPoly delta_t;
  LaurentPoly delta_k;
  /// Set for n < 0, where the companion parameters were taken in absolute value.
  bool from_absolute_parameters = false;
};

/// delta_t = torus_alexander(3n+1, n), delta_k = correction_lift(delta_t, p).
/// Throws DomainError for n = 0.
FamilyAlexander family_alexander(const Integer& n);

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
};

struct LensSurgeryCheck {
  bool applicable = false;
  std::optional<SurgeryResult> result;
  bool modular_identity = false;  // n^2 q = -1 mod p, always evaluated
  bool unoriented = false;        // result ~ L(p,q) up to orientation
  bool oriented = false;          // recorded, not asserted
};

struct ReducibleCheck {
  bool applicable = false;
  std::optional<SurgeryResult> result;
  LensSum expected;  // L(n,-1) # L(3n+1,3)
  bool unoriented = false;
  bool oriented = false;  // recorded, not asserted
};

struct AlexanderChecks {
  bool applicable = false;
  bool degree_bound = false;       // 2 g(T_n) < p
  bool top_exponent = false;       // max exponent of delta_K is (p+1)/2
  bool lspace_form = false;
  bool value_at_one = false;       // delta_K(1) = 1
  bool reduction_agrees = false;   // delta_K = delta_T in Z[t]/(t^p - 1)
  bool tilde_constraints = false;  // reduction coefficients in {0,+-1}
};

/// Dense polynomials and exhaustive residue scans run only for p up to this
/// size; larger reports list the skipped parts instead.
inline constexpr std::int64_t kDenseLimit = std::int64_t{1} << 24;

struct FamilyReport {
  Integer n;
  Integer p;
  Integer q;
  CompanionTorusKnot torus_knot;
  std::optional<LaurentPoly> delta_t;
  std::optional<LaurentPoly> delta_k;
  std::optional<Integer> genus_k;
  /// p + 2. Reported metadata that follows from the genus; not a computed rank.
  Integer hfk_rank_reported;
  TunnelVerdict tunnel;
  bool cf_identity_ok = false;
  std::string cf_identity_error;  // set if the evaluation was degenerate
  LensSurgeryCheck lens_surgery_check;
  ReducibleCheck reducible_check;
  AlexanderChecks alexander_checks;
  bool classes_computed = false;
  HsphereClasses hsphere_classes;
  std::vector<Integer> berge_vii_at_p;
  /// Computations left out because p exceeds kDenseLimit.
  std::vector<std::string> skipped;

  LensSpace lens_space() const { return {p, q}; }
  std::vector<Check> checks() const;
  /// No check has status Fail.
  bool all_checks_pass() const;
};

/// Fills every field; a failing check is recorded, never thrown.
FamilyReport family_report(const Integer& n);

/// One report per n in [n_min, n_max], ordered by n. `threads` = 0 picks the
/// hardware concurrency.
std::vector<FamilyReport> census_scan(const Integer& n_min, const Integer& n_max, unsigned threads = 1);

}  // namespace pslens
