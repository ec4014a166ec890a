#include "foxknot/alexander.hpp"

#include <cmath>
#include <numeric>

#include "foxknot/error.hpp"

namespace foxknot {

namespace {

void require_family_params(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw Error(Errc::InvalidArgument, "family parameters need n >= 1 and m >= 1");
}

LaurentPoly t_power_minus_one(std::int64_t k) { return LaurentPoly::t_power(k) - LaurentPoly::constant(1); }

}  // namespace

std::vector<std::vector<LaurentPoly>> AlexanderMatrix::minor_without_column(std::size_t j) const {
  std::vector<std::vector<LaurentPoly>> m(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != j) m[i].push_back(at(i, c));
    }
  }
  return m;
}

AlexanderMatrix alexander_matrix(const Presentation& p, const Weights& w) {
  AlexanderMatrix a(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      a.at(i, j) = abelianize(fox_derivative(p.relators()[i], static_cast<GeneratorId>(j)), w);
    }
  }
  return a;
}

AlexanderMatrix alexander_matrix(const Presentation& p) { return alexander_matrix(p, compute_weights(p)); }

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) sub[i - 1].push_back(m[i][c]);
      }
    }
    LaurentPoly term = m[0][j] * determinant(sub);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

GeneratorId auto_column(const Weights& w) {
  std::optional<GeneratorId> best;
  for (std::size_t j = 0; j < w.values.size(); ++j) {
    if (w.values[j] > 0 && (!best || w.values[j] < w.values[*best])) best = static_cast<GeneratorId>(j);
  }
  if (!best) throw Error(Errc::ZeroWeightColumn, "no generator has positive weight");
  return *best;
}

LaurentPoly alexander_polynomial(const Presentation& p, std::optional<GeneratorId> column) {
  const Weights w = compute_weights(p);
  const GeneratorId j = column ? *column : auto_column(w);
  if (j >= p.generator_count()) throw Error(Errc::InvalidArgument, "column index out of range");
  if (w[j] == 0) {
    throw Error(Errc::ZeroWeightColumn, "generator '" + p.generators()[j] + "' has weight 0");
  }
  const AlexanderMatrix a = alexander_matrix(p, w);
  const LaurentPoly det = determinant(a.minor_without_column(j));
  const LaurentPoly quotient = exact_div(det * t_power_minus_one(1), t_power_minus_one(w[j]));
  return normalize_knot_poly(quotient);
}

LaurentPoly closed_form_family(std::int64_t n, std::int64_t m) {
  require_family_params(n, m);
  LaurentPoly numerator;
  for (std::int64_t e : {std::int64_t{0}, std::int64_t{1}, 3 * m + 2, 2 * n + 3 * m - 1, 2 * n + 6 * m, 2 * n + 6 * m + 1}) {
    numerator.add_term(1, e);
  }
  const LaurentPoly denominator = LaurentPoly::from_coefficients(0, {1, 2, 2, 1});  // (t+1)(t^2+t+1)
  return normalize_knot_poly(exact_div(-numerator, denominator));
}

LaurentPoly torus_knot_alexander(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw Error(Errc::InvalidArgument, "torus knot parameters need p, q >= 2");
  if (std::gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime, "torus knot (" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot");
  }
  const LaurentPoly num = t_power_minus_one(p * q) * t_power_minus_one(1);
  const LaurentPoly den = t_power_minus_one(p) * t_power_minus_one(q);
  return normalize_knot_poly(exact_div(num, den));
}

double CosineSum::operator()(double theta) const {
  double sum = 0.0;
  for (const auto& term : terms) {
    sum += 2.0 * static_cast<double>(term.coefficient) * std::cos(0.5 * static_cast<double>(term.twice_frequency) * theta);
  }
  return sum;
}

CosineSum f_polynomial(std::int64_t n, std::int64_t m) {
  require_family_params(n, m);
  return CosineSum{{{2 * (n + 3 * m) + 1, 1}, {2 * (n + 3 * m) - 1, 1}, {2 * n - 3, 1}}};
}

}  // namespace foxknot
