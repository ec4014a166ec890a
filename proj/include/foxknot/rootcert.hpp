#pragma once

// Floating-point certification that the family's Alexander polynomial has a
// simple root on the unit circle, plus a generic sign-change root finder for
// palindromic polynomials.
//
// Certificates are not interval-arithmetic proofs: every sign test must clear
// an explicit margin, and monotonicity is checked on a finite subdivision
// bridged by a bound on |g''|.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "foxknot/family.hpp"
#include "foxknot/laurent.hpp"

namespace foxknot {

enum class CertificateKind { ExactCosine, IntervalSignChange };

std::string_view kind_name(CertificateKind k) noexcept;

struct MonotoneWitness {
  /// "exact-root" for n = 1, "panel-bound" otherwise.
  std::string method;
  std::size_t panels = 0;
  /// Smallest sin((n+3m+1/2) theta) seen at a panel node.
  double min_sine_lower_bound = 0.0;
  /// Smallest certified lower bound for -g' over all panels (n >= 2), or
  /// |g'(theta_star)| for the exact root.
  double min_slope_bound = 0.0;
};

struct RootCertificate {
  CertificateKind kind;
  double theta_lo;
  double theta_hi;
  double theta_star;
  double g_at_lo;
  double g_at_hi;
  MonotoneWitness monotone_witness;
};

inline constexpr double kDefaultBisectionTol = 1e-12;
inline constexpr double kResidualLimit = 1e-8;

/// g(theta) = f(e^{i theta}) / 2
///          = cos((N+1/2) theta) + cos((N-1/2) theta) + cos((n-3/2) theta),
/// with N = n + 3m.
double g_theta(const FamilyParams& params, double theta);

double g_prime_theta(const FamilyParams& params, double theta);

/// n = 1: the exact root (2 pi / 3) / (1 + 3m), bracketed by
/// (pi/2)/(1+3m) and pi/(1+3m). n >= 2: sign change of g on
/// ((pi/2)/(n+3m), (pi/2)/(n+3m/2-3/4)) with g strictly decreasing there; the
/// root is located by bisection to width `tol`.
/// Throws Error(CertificationFailed) naming the condition that failed.
RootCertificate certify_family_root(const FamilyParams& params, double tol = kDefaultBisectionTol);

/// |Delta(e^{i theta_star})| for the family polynomial. Throws
/// Error(ResidualTooLarge) when it is not below kResidualLimit.
double verify_root_against_delta(const FamilyParams& params, const RootCertificate& cert);

nlohmann::json to_json(const RootCertificate& cert, double residual);

struct UnitCircleRoot {
  double theta_lo;
  double theta_hi;
  double theta_star;
  bool odd_multiplicity;
  /// Numerical judgement: |P'(theta_star)| > 1e-6 * max|c_k| * span.
  bool simple;
};

inline constexpr int kDefaultGridFactor = 8;

/// Samples the centered cosine form of p at grid_factor * span + 1 evenly
/// spaced points of [0, pi] and bisects every sign change strictly inside.
/// Throws Error(NotPalindromic) or Error(OddSpan).
std::vector<UnitCircleRoot> find_simple_roots(const LaurentPoly& p, int grid_factor = kDefaultGridFactor);

}  // namespace foxknot
