#include "foxknot/laurent.hpp"

#include <cmath>

#include "foxknot/error.hpp"

namespace foxknot {

namespace {

void require_nonzero(const LaurentPoly& p, const char* what) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, std::string(what) + " of the zero polynomial");
}

}  // namespace

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, std::int64_t exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(exponent, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t min_degree, std::span<const BigInt> coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p.terms_.emplace(min_degree + static_cast<std::int64_t>(i), coeffs[i]);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t min_degree, std::initializer_list<long long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return from_coefficients(min_degree, big);
}

std::int64_t LaurentPoly::min_degree() const {
  require_nonzero(*this, "min_degree");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_degree() const {
  require_nonzero(*this, "max_degree");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> LaurentPoly::dense() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(span() + 1));
  const auto lo = min_degree();
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

BigInt LaurentPoly::value_at_minus_one() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0) {
      total += c;
    } else {
      total -= c;
    }
  }
  return total;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

void LaurentPoly::add_term(const BigInt& c, std::int64_t exponent) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ca * cb, ea + eb);
  }
  return p;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (p.is_zero()) return {};

  // Shift both to ordinary polynomials with nonzero constant term, then
  // divide from the top degree down.
  std::vector<BigInt> rem = p.dense();
  const std::vector<BigInt> div = q.dense();
  if (rem.size() < div.size()) throw Error(Errc::NotDivisible, "divisor has larger span than dividend");

  const std::size_t qdeg = div.size() - 1;
  std::vector<BigInt> quot(rem.size() - qdeg);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + qdeg];
    if (top == 0) continue;
    BigInt r;
    BigInt c;
    boost::multiprecision::divide_qr(top, div[qdeg], c, r);
    if (r != 0) throw Error(Errc::NotDivisible, "leading coefficient does not divide");
    for (std::size_t i = 0; i <= qdeg; ++i) rem[k + i] -= c * div[i];
    quot[k] = std::move(c);
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(Errc::NotDivisible, "nonzero remainder");
  }
  return LaurentPoly::from_coefficients(p.min_degree() - q.min_degree(), quot);
}

LaurentPoly normalize_knot_poly(const LaurentPoly& p) {
  const BigInt at_one = p.value_at_one();
  if (at_one != 1 && at_one != -1) {
    throw Error(Errc::NotAKnotPolynomial, "value at t = 1 is " + at_one.str() + ", expected +-1");
  }
  LaurentPoly q = p.shifted(-p.min_degree());
  return at_one == 1 ? q : -q;
}

bool is_palindromic(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  const auto lo = p.min_degree();
  const auto hi = p.max_degree();
  for (const auto& [e, c] : p.terms()) {
    if (p.coefficient(lo + hi - e) != c) return false;
  }
  return true;
}

std::complex<double> eval_unit_circle(const LaurentPoly& p, double theta) {
  double re = 0.0;
  double im = 0.0;
  for (const auto& [e, c] : p.terms()) {
    const double x = static_cast<double>(e) * theta;
    const double cd = c.convert_to<double>();
    re += cd * std::cos(x);
    im += cd * std::sin(x);
  }
  return {re, im};
}

std::vector<double> centered_cosine_form(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "cosine form of the zero polynomial");
  if (!is_palindromic(p)) throw Error(Errc::NotPalindromic, "polynomial " + to_string(p) + " is not palindromic");
  if (p.span() % 2 != 0) throw Error(Errc::OddSpan, "polynomial " + to_string(p) + " has odd span");
  const auto g = p.span() / 2;
  const auto center = p.min_degree() + g;
  std::vector<double> c(static_cast<std::size_t>(g + 1));
  for (std::int64_t k = 0; k <= g; ++k) c[static_cast<std::size_t>(k)] = p.coefficient(center + k).convert_to<double>();
  return c;
}

double eval_cosine_form(std::span<const double> c, double theta) {
  if (c.empty()) return 0.0;
  double sum = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] != 0.0) sum += 2.0 * c[k] * std::cos(static_cast<double>(k) * theta);
  }
  return sum;
}

double eval_cosine_form_derivative(std::span<const double> c, double theta) {
  double sum = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] != 0.0) sum -= 2.0 * c[k] * static_cast<double>(k) * std::sin(static_cast<double>(k) * theta);
  }
  return sum;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
      out += '*';
    }
    out += 't';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.dense()) coeffs.push_back(c.str());
  return {{"min_degree", p.is_zero() ? 0 : p.min_degree()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace foxknot
