#pragma once

// Rational tangles, pretzel links, classification of their double branched
// covers, and the tangle-decomposition case analysis that decides when K_n
// has tunnel number two.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pslens/exact.hpp"
#include "pslens/lens.hpp"

namespace pslens {

struct RationalTangle {
  Rational fraction;
  friend bool operator==(const RationalTangle&, const RationalTangle&) = default;
};

struct TangleSum {
  std::vector<RationalTangle> summands;

  explicit TangleSum(std::vector<RationalTangle> parts);
  /// "1/x + 1/y"; summands print as fractions.
  std::string to_string() const;
  static TangleSum parse(std::string_view text);
};

struct Pretzel {
  Integer a, b, c;

  friend bool operator==(const Pretzel&, const Pretzel&) = default;
  std::string to_string() const;
  static Pretzel parse(std::string_view text);
};

namespace cover {
struct SolidTorus {
  friend bool operator==(const SolidTorus&, const SolidTorus&) = default;
};
struct TwistedIBundleKlein {
  friend bool operator==(const TwistedIBundleKlein&, const TwistedIBundleKlein&) = default;
};
struct SFSOverDisk {
  std::vector<Integer> orders;  // sorted ascending, each >= 2
  friend bool operator==(const SFSOverDisk&, const SFSOverDisk&) = default;
};
struct SFSOverSphere {
  std::vector<Integer> orders;
  friend bool operator==(const SFSOverSphere&, const SFSOverSphere&) = default;
};
struct DegenerateFibration {
  friend bool operator==(const DegenerateFibration&, const DegenerateFibration&) = default;
};
struct ConnectedSumLike {
  friend bool operator==(const ConnectedSumLike&, const ConnectedSumLike&) = default;
};
struct Lens {
  LensSpace lens;  // canonical
  friend bool operator==(const Lens&, const Lens&) = default;
};
struct Other {
  friend bool operator==(const Other&, const Other&) = default;
};
}  // namespace cover

using SeifertClass = std::variant<cover::SolidTorus, cover::TwistedIBundleKlein, cover::SFSOverDisk,
                                  cover::SFSOverSphere, cover::DegenerateFibration, cover::ConnectedSumLike,
                                  cover::Lens, cover::Other>;

/// "solid torus", "D^2(3,7)", "S^2(2,3,5)", "L(8,3)", ...
std::string describe(const SeifertClass& cls);

/// Double branched cover of the tangle sum 1/x + 1/y.
SeifertClass tangle_sum_double_cover(const Integer& x, const Integer& y);
/// Same, for a parsed sum whose summands are both of the form 1/x.
SeifertClass tangle_sum_double_cover(const TangleSum& sum);

/// True iff some parameter is +-1.
bool pretzel_is_two_bridge(const Pretzel& pretzel);

SeifertClass pretzel_double_cover(const Pretzel& pretzel);

enum class Gate { G1, G2, G3, G4 };
std::string to_string(Gate gate);

struct GateResult {
  Gate gate = Gate::G1;
  bool passed = false;
  std::string detail;
};

enum class TunnelKind { TunnelNumberTwo, TunnelNumberOne, Excluded };
std::string to_string(TunnelKind kind);

struct TunnelVerdict {
  TunnelKind kind = TunnelKind::Excluded;
  /// The first failing gate, which decides `kind`.
  std::optional<Gate> failed_gate;
  /// Every gate, evaluated independently.
  std::array<GateResult, 4> gates;
  SeifertClass alpha_cover;  // cover of 1/(n+2) + 1/3
  SeifertClass beta_cover;   // cover of 1/(1-n) + 1/(-2)

  /// "TunnelNumberTwo", "TunnelNumberOne(G1)", "Excluded(G2)".
  std::string to_string() const;
};

/// Runs the four gates for K_n:
///   G1  both tangle covers are non-degenerate D^2(a,b) (no solid torus, no degenerate fibration)
///   G2  neither cover is the twisted I-bundle D^2(2,2)
///   G3  P(1-n,2,2) is not two-bridge
///   G4  P(n+2,3,-2) is not two-bridge
TunnelVerdict tunnel_verdict(const Integer& n);

}  // namespace pslens
