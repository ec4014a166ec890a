#pragma once

// The integral group ring of a free group, Fox free derivatives, and the
// abelianization map into Z[t, t^-1].

#include <cstdint>
#include <map>
#include <vector>

#include "foxknot/laurent.hpp"
#include "foxknot/words.hpp"

namespace foxknot {

/// Finite formal sum of reduced words with nonzero integer coefficients.
class GroupRingElement {
 public:
  using Terms = std::map<Word, BigInt>;

  GroupRingElement() = default;

  static GroupRingElement one() { return of(Word{}); }
  static GroupRingElement of(const Word& u, BigInt c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const BigInt& c, const Word& u);

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Word& u, const GroupRingElement& x);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

/// 1 + g + g^2 + ... + g^k.
GroupRingElement delta(const Word& g, std::int64_t k);

/// Fox free derivative d(u)/d(g). Syllables g^k use the closed forms
/// 1 + g + ... + g^(k-1) and -(g^-1 + ... + g^k) for k < 0.
GroupRingElement fox_derivative(const Word& u, GeneratorId g);

/// Image exponent of each generator under the abelianization (generator i
/// maps to t^values[i]). Primitive, and kills every relator.
struct Weights {
  std::vector<std::int64_t> values;

  std::int64_t operator[](GeneratorId g) const { return values.at(g); }
  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Primitive generator of the integer nullspace of the relator exponent-sum
/// matrix, signed so the meridian (or else the first nonzero weight) is
/// positive. Throws Error(H1RankNotOne) unless the nullspace has rank one.
Weights compute_weights(const Presentation& p);

/// Exponent of t in the image of u.
std::int64_t abelian_degree(const Word& u, const Weights& w);

LaurentPoly abelianize(const Word& u, const Weights& w);
LaurentPoly abelianize(const GroupRingElement& x, const Weights& w);

}  // namespace foxknot
