#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "foxknot/foxcalc.hpp"
#include "foxknot/laurent.hpp"
#include "foxknot/words.hpp"

namespace foxknot {

/// (relators x generators) matrix of abelianized Fox derivatives.
class AlexanderMatrix {
 public:
  AlexanderMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  LaurentPoly& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }

  /// Square matrix with column j removed.
  std::vector<std::vector<LaurentPoly>> minor_without_column(std::size_t j) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> entries_;
};

AlexanderMatrix alexander_matrix(const Presentation& p, const Weights& w);
AlexanderMatrix alexander_matrix(const Presentation& p);

/// Laplace expansion; the empty matrix has determinant 1.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);

/// Generator with the smallest positive weight (lowest index on ties).
GeneratorId auto_column(const Weights& w);

/// normalize(det(A_j) * (t - 1) / (t^{e_j} - 1)), where A_j drops the column
/// of generator j. With no column given, auto_column() decides.
/// Throws Error(ZeroWeightColumn), Error(H1RankNotOne) or Error(NotDivisible).
LaurentPoly alexander_polynomial(const Presentation& p, std::optional<GeneratorId> column = std::nullopt);

/// Normalized -N(t) / ((t + 1)(t^2 + t + 1)) with
/// N = 1 + t + t^{3m+2} + t^{2n+3m-1} + t^{2n+6m} + t^{2n+6m+1}.
LaurentPoly closed_form_family(std::int64_t n, std::int64_t m);

/// Normalized (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)). Throws
/// Error(NotCoprime) if gcd(p, q) != 1.
LaurentPoly torus_knot_alexander(std::int64_t p, std::int64_t q);

/// Sum of 2 * coefficient * cos(frequency * theta) over half-integer
/// frequencies, stored doubled so they stay integral.
struct CosineSum {
  struct Term {
    std::int64_t twice_frequency;
    std::int64_t coefficient;
  };
  std::vector<Term> terms;

  double operator()(double theta) const;
};

/// The symmetric six-term f(t) of the family, as the cosine sum giving
/// f(e^{i theta}): frequencies n+3m+1/2, n+3m-1/2 and n-3/2.
CosineSum f_polynomial(std::int64_t n, std::int64_t m);

}  // namespace foxknot
