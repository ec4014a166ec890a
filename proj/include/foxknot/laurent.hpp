#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace foxknot {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in t, stored sparsely by exponent. No zero
/// coefficient is ever stored, so the zero polynomial is the empty map and
/// equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly constant(BigInt c);
  static LaurentPoly monomial(BigInt c, std::int64_t exponent);
  static LaurentPoly t_power(std::int64_t exponent) { return monomial(1, exponent); }

  /// Coefficients of t^min_degree, t^(min_degree+1), ...; zeros allowed.
  static LaurentPoly from_coefficients(std::int64_t min_degree, std::span<const BigInt> coeffs);
  static LaurentPoly from_coefficients(std::int64_t min_degree, std::initializer_list<long long> coeffs);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Degree queries require a nonzero polynomial.
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;
  std::int64_t span() const { return max_degree() - min_degree(); }

  BigInt coefficient(std::int64_t exponent) const;

  /// Dense coefficients from min_degree() to max_degree(); empty for zero.
  std::vector<BigInt> dense() const;

  BigInt value_at_one() const;
  BigInt value_at_minus_one() const;

  /// Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  /// Adds c * t^exponent in place.
  void add_term(const BigInt& c, std::int64_t exponent);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

/// Returns r with q * r == p. Throws Error(DivisionByZero) for q == 0 and
/// Error(NotDivisible) when the remainder is nonzero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Picks the representative of p up to units +-t^k with lowest exponent 0
/// and value +1 at t = 1. Throws Error(NotAKnotPolynomial) unless p(1) = +-1.
LaurentPoly normalize_knot_poly(const LaurentPoly& p);

bool is_palindromic(const LaurentPoly& p);

std::complex<double> eval_unit_circle(const LaurentPoly& p, double theta);

/// For palindromic p of even span 2g, returns (c_0, ..., c_g) with
/// t^-(min+g) p(e^{i theta}) = c_0 + sum_k 2 c_k cos(k theta).
/// Throws Error(NotPalindromic) or Error(OddSpan).
std::vector<double> centered_cosine_form(const LaurentPoly& p);

double eval_cosine_form(std::span<const double> c, double theta);
double eval_cosine_form_derivative(std::span<const double> c, double theta);

/// Ascending powers, e.g. "1 - t + t^2", "-t^-1 + 3*t^4"; "0" for zero.
std::string to_string(const LaurentPoly& p);

/// {"min_degree": k, "coeffs": ["c_k", ...]} with decimal-string coefficients.
nlohmann::json to_json(const LaurentPoly& p);

}  // namespace foxknot
