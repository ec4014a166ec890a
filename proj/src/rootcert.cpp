#include "foxknot/rootcert.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "foxknot/alexander.hpp"
#include "foxknot/error.hpp"

namespace foxknot {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisectionSteps = 200;

double big_n(const FamilyParams& params) { return static_cast<double>(params.n() + 3 * params.m()); }

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::CertificationFailed, what); }

std::string describe(const FamilyParams& params) {
  return "(n=" + std::to_string(params.n()) + ", m=" + std::to_string(params.m()) + ")";
}

// Shrinks [lo, hi] with f(lo) > 0 > f(hi) to width tol; returns the midpoint.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  for (int step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double sign_margin(const FamilyParams& params) { return 1e-9 + 16.0 * DBL_EPSILON * (big_n(params) + 2.0); }

}  // namespace

std::string_view kind_name(CertificateKind k) noexcept {
  switch (k) {
    case CertificateKind::ExactCosine: return "ExactCosine";
    case CertificateKind::IntervalSignChange: return "IntervalSignChange";
  }
  return "Unknown";
}

double g_theta(const FamilyParams& params, double theta) {
  const double big = big_n(params);
  const double low = static_cast<double>(params.n()) - 1.5;
  return std::cos((big + 0.5) * theta) + std::cos((big - 0.5) * theta) + std::cos(low * theta);
}

double g_prime_theta(const FamilyParams& params, double theta) {
  const double big = big_n(params);
  const double low = static_cast<double>(params.n()) - 1.5;
  return -(std::sin(0.5 * theta) * std::cos(big * theta) + 2.0 * big * std::cos(0.5 * theta) * std::sin(big * theta) +
           low * std::sin(low * theta));
}

RootCertificate certify_family_root(const FamilyParams& params, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "bisection tolerance must be positive");
  const double big = big_n(params);
  const double margin = sign_margin(params);
  auto g = [&](double theta) { return g_theta(params, theta); };

  RootCertificate cert{};
  if (params.n() == 1) {
    // g = cos(theta/2) (2 cos(N theta) + 1): the root is where N theta = 2pi/3.
    cert.kind = CertificateKind::ExactCosine;
    cert.theta_star = (2.0 * kPi / 3.0) / big;
    cert.theta_lo = (kPi / 2.0) / big;
    cert.theta_hi = kPi / big;
    cert.g_at_lo = g(cert.theta_lo);
    cert.g_at_hi = g(cert.theta_hi);
    if (!(cert.g_at_lo > margin)) fail("g(theta_lo) is not positive for " + describe(params));
    if (!(cert.g_at_hi < -margin)) fail("g(theta_hi) is not negative for " + describe(params));
    if (std::abs(g(cert.theta_star)) > margin) fail("g does not vanish at the exact root for " + describe(params));
    const double slope = std::abs(g_prime_theta(params, cert.theta_star));
    if (!(slope > margin)) fail("exact root is not simple for " + describe(params));
    cert.monotone_witness = {"exact-root", 0, 0.0, slope};
    return cert;
  }

  cert.kind = CertificateKind::IntervalSignChange;
  const double lo = (kPi / 2.0) / big;
  const double hi = (kPi / 2.0) / (static_cast<double>(params.n()) + 1.5 * static_cast<double>(params.m()) - 0.75);
  if (!(0.0 < lo && lo < hi && hi <= 2.0 * kPi / 7.0)) fail("interval bounds out of order for " + describe(params));
  cert.theta_lo = lo;
  cert.theta_hi = hi;
  cert.g_at_lo = g(lo);
  cert.g_at_hi = g(hi);
  if (!(cert.g_at_lo > margin)) fail("g(theta_0) is not positive for " + describe(params));
  if (!(cert.g_at_hi < -margin)) fail("g(theta_1) is not negative for " + describe(params));

  // -g' > sin((N+1/2) theta) >= 0 on the interval; check the bound at every
  // node and bridge panels with the Lipschitz constant of g'.
  const auto panels = static_cast<std::size_t>(64.0 * big);
  const double width = (hi - lo) / static_cast<double>(panels);
  const double low = static_cast<double>(params.n()) - 1.5;
  const double lipschitz = (big + 0.5) * (big + 0.5) + big * big + low * low;
  const double bridge = 0.5 * lipschitz * width;

  double min_sine = INFINITY;
  double min_slope = INFINITY;
  double prev = 0.0;
  for (std::size_t i = 0; i <= panels; ++i) {
    const double theta = i == panels ? hi : lo + width * static_cast<double>(i);
    const double neg_slope = -g_prime_theta(params, theta);
    const double sine = std::sin((big + 0.5) * theta);
    min_sine = std::min(min_sine, sine);
    if (neg_slope < sine - margin) {
      std::ostringstream msg;
      msg << "lower bound -g' >= sin((N+1/2)theta) violated at theta=" << theta << " for " << describe(params);
      fail(msg.str());
    }
    if (i > 0) min_slope = std::min(min_slope, std::min(prev, neg_slope) - bridge);
    prev = neg_slope;
  }
  if (!(min_slope > 0.0)) {
    std::ostringstream msg;
    msg << "monotonicity not certified (panel bound " << min_slope << ") for " << describe(params);
    fail(msg.str());
  }
  cert.monotone_witness = {"panel-bound", panels, min_sine, min_slope};
  cert.theta_star = bisect(g, lo, hi, tol);
  if (!(lo < cert.theta_star && cert.theta_star < hi)) fail("bisection left the interval for " + describe(params));
  return cert;
}

double verify_root_against_delta(const FamilyParams& params, const RootCertificate& cert) {
  if (!(cert.theta_star > 0.0 && cert.theta_star < 2.0 * kPi / 3.0)) {
    throw Error(Errc::InvalidArgument, "theta_star must lie in (0, 2pi/3)");
  }
  const LaurentPoly delta = closed_form_family(params.n(), params.m());
  const double residual = std::abs(eval_unit_circle(delta, cert.theta_star));
  if (!(residual < kResidualLimit)) {
    std::ostringstream msg;
    msg << "residual " << residual << " at theta=" << cert.theta_star << " for " << describe(params);
    throw Error(Errc::ResidualTooLarge, msg.str());
  }
  return residual;
}

nlohmann::json to_json(const RootCertificate& cert, double residual) {
  return {{"kind", kind_name(cert.kind)}, {"theta_lo", cert.theta_lo}, {"theta_hi", cert.theta_hi},
          {"theta_star", cert.theta_star}, {"g_lo", cert.g_at_lo}, {"g_hi", cert.g_at_hi},
          {"residual", residual}};
}

std::vector<UnitCircleRoot> find_simple_roots(const LaurentPoly& p, int grid_factor) {
  if (grid_factor < 1) throw Error(Errc::InvalidArgument, "grid_factor must be >= 1");
  const std::vector<double> c = centered_cosine_form(p);
  const auto span = static_cast<std::size_t>(p.span());
  std::vector<UnitCircleRoot> roots;
  if (span == 0) return roots;

  double scale = 0.0;
  for (double ck : c) scale = std::max(scale, std::abs(ck));
  const double simple_threshold = 1e-6 * scale * static_cast<double>(span);

  auto value = [&](double theta) { return eval_cosine_form(c, theta); };
  auto classify = [&](double lo, double hi, double star, bool odd) {
    const bool simple = odd && std::abs(eval_cosine_form_derivative(c, star)) > simple_threshold;
    roots.push_back({lo, hi, star, odd, simple});
  };

  const std::size_t samples = static_cast<std::size_t>(grid_factor) * span;
  const double step = kPi / static_cast<double>(samples);
  std::vector<double> theta(samples + 1);
  std::vector<double> vals(samples + 1);
  for (std::size_t i = 0; i <= samples; ++i) {
    theta[i] = i == samples ? kPi : step * static_cast<double>(i);
    vals[i] = value(theta[i]);
  }

  for (std::size_t i = 0; i < samples; ++i) {
    const double a = vals[i];
    const double b = vals[i + 1];
    if (a == 0.0) {
      // Exact zero on an interior grid node.
      if (i > 0) {
        const bool odd = (vals[i - 1] > 0.0) != (b > 0.0) && vals[i - 1] != 0.0 && b != 0.0;
        classify(theta[i - 1], theta[i + 1], theta[i], odd);
      }
      continue;
    }
    if (b == 0.0 || (a > 0.0) == (b > 0.0)) continue;
    const double sign = a > 0.0 ? 1.0 : -1.0;
    const double star = bisect([&](double x) { return sign * value(x); }, theta[i], theta[i + 1], kDefaultBisectionTol);
    classify(theta[i], theta[i + 1], star, true);
  }
  return roots;
}

}  // namespace foxknot
