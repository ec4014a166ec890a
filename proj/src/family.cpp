#include "foxknot/family.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <numeric>

#include "foxknot/error.hpp"

namespace foxknot {

namespace {

Word a(std::int64_t k = 1) { return Word::generator(kGenA, k); }
Word w(std::int64_t k = 1) { return Word::generator(kGenW, k); }

}  // namespace

FamilyParams::FamilyParams(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    throw Error(Errc::InvalidArgument,
                "family parameters need n >= 1 and m >= 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

Presentation presentation(const FamilyParams& params) {
  const auto n = params.n();
  const auto m = params.m();
  const Word aw = a() * w();
  const Word wa = w() * a();
  const Word r1 = w(n) * aw.pow(m) * a(-1) * aw.pow(-m);
  const Word r2 = wa.pow(-m) * a() * wa.pow(m) * w(n - 1);
  return Presentation({"a", "w"}, {r1 * r2.inverse()}, kGenA);
}

Word longitude_with_meridian_power(const FamilyParams& params, std::int64_t k) {
  const auto n = params.n();
  const auto m = params.m();
  const Word aw = a() * w();
  const Word wa = w() * a();
  return a(-k) * (wa.pow(m) * w(n)) * aw.pow(m - 1) * a() * (w(n) * aw.pow(m));
}

Word longitude(const FamilyParams& params) {
  return longitude_with_meridian_power(params, 4 * params.n() + 9 * params.m() - 2);
}

std::int64_t genus(const FamilyParams& params) { return params.n() + 3 * params.m() - 1; }

std::int64_t slope_bound(const FamilyParams& params) {
  const std::int64_t bound = 2 * params.n() + 6 * params.m() - 3;
  assert(bound == 2 * genus(params) - 1);
  return bound;
}

SurgerySlope::SurgerySlope(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(Errc::InvalidArgument, "slope p/q needs q != 0");
  if (p == INT64_MIN || q == INT64_MIN) throw Error(Errc::InvalidArgument, "slope component out of range");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

bool SurgerySlope::at_least(std::int64_t bound) const noexcept {
  using boost::multiprecision::cpp_int;
  return cpp_int(p_) >= cpp_int(bound) * q_;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotLeftOrderable: return "NotLeftOrderable";
    case Verdict::NoConclusion: return "NoConclusion";
  }
  return "Unknown";
}

SurgeryClassification classify_surgery(const FamilyParams& params, const SurgerySlope& slope) {
  const std::int64_t bound = slope_bound(params);
  if (slope.at_least(bound)) return {Verdict::NotLeftOrderable, bound, false};
  return {Verdict::NoConclusion, bound, true};
}

}  // namespace foxknot
