#pragma once

// The (n-2)-twisted (3, 3m+2)-torus knots K(n, m): knot group presentation,
// preferred longitude, genus, and the surgery slope classifier.

#include <cstdint>
#include <string_view>

#include "foxknot/words.hpp"

namespace foxknot {

class FamilyParams {
 public:
  /// Throws Error(InvalidArgument) unless n >= 1 and m >= 1.
  FamilyParams(std::int64_t n, std::int64_t m);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
};

inline constexpr GeneratorId kGenA = 0;  // meridian
inline constexpr GeneratorId kGenW = 1;

/// <a, w | r1 r2^-1> with r1 = w^n (aw)^m a^-1 (aw)^-m and
/// r2 = (wa)^-m a (wa)^m w^(n-1); a is flagged as the meridian.
Presentation presentation(const FamilyParams& params);

/// a^-k [(wa)^m w^n] (aw)^(m-1) a [w^n (aw)^m].
Word longitude_with_meridian_power(const FamilyParams& params, std::int64_t k);

/// The preferred longitude, k = 4n + 9m - 2.
Word longitude(const FamilyParams& params);

/// n + 3m - 1.
std::int64_t genus(const FamilyParams& params);

/// 2n + 6m - 3, which is 2 * genus - 1.
std::int64_t slope_bound(const FamilyParams& params);

/// p/q with gcd(|p|, q) = 1 and q > 0.
class SurgerySlope {
 public:
  /// Throws Error(InvalidArgument) for q == 0.
  SurgerySlope(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  /// Exact comparison p/q >= bound.
  bool at_least(std::int64_t bound) const noexcept;

  friend bool operator==(const SurgerySlope&, const SurgerySlope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

enum class Verdict { NotLeftOrderable, NoConclusion };

std::string_view verdict_name(Verdict v) noexcept;

struct SurgeryClassification {
  Verdict verdict;
  std::int64_t slope_bound;
  /// Slopes sufficiently close to 0 give left-orderable groups; no effective
  /// neighbourhood is known, so this is informational only.
  bool near_zero_note;
};

/// NotLeftOrderable iff p/q >= 2n + 6m - 3, otherwise NoConclusion. Never
/// answers "left-orderable".
SurgeryClassification classify_surgery(const FamilyParams& params, const SurgerySlope& slope);

}  // namespace foxknot
