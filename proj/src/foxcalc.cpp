#include "foxknot/foxcalc.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <utility>

#include "foxknot/error.hpp"

namespace foxknot {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::Overflow, "weight does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Echelon {
  std::vector<std::vector<BigInt>> rows;
  std::vector<std::size_t> pivot_columns;
};

// Row echelon form over Z using only unimodular row operations: in each
// column the row with the smallest nonzero entry is used to reduce the others
// until a single nonzero entry remains.
Echelon integer_echelon(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs_big(rows[i][c]) < abs_big(rows[best][c]))) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const BigInt q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        out.pivot_columns.push_back(c);
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

GroupRingElement GroupRingElement::of(const Word& u, BigInt c) {
  GroupRingElement x;
  x.add_term(c, u);
  return x;
}

void GroupRingElement::add_term(const BigInt& c, const Word& u) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement x = *this;
  for (auto& [u, c] : x.terms_) c = -c;
  return x;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [u, c] : rhs.terms_) add_term(c, u);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [u, c] : rhs.terms_) add_term(-c, u);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement x;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) x.add_term(cu * cv, u * v);
  }
  return x;
}

GroupRingElement operator*(const Word& u, const GroupRingElement& x) {
  GroupRingElement y;
  for (const auto& [v, c] : x.terms_) y.add_term(c, u * v);
  return y;
}

GroupRingElement delta(const Word& g, std::int64_t k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "delta needs k >= 0");
  GroupRingElement x;
  Word power;
  for (std::int64_t j = 0; j <= k; ++j) {
    x.add_term(1, power);
    power *= g;
  }
  return x;
}

GroupRingElement fox_derivative(const Word& u, GeneratorId g) {
  GroupRingElement result;
  std::vector<Syllable> prefix;
  prefix.reserve(u.syllables().size());
  for (const auto& s : u.syllables()) {
    if (s.generator == g) {
      // The prefix is reduced and does not end in g, so prefix * g^j is
      // reduced as written.
      std::vector<Syllable> word = prefix;
      word.push_back({g, 0});
      const std::int64_t lo = s.exponent > 0 ? 0 : s.exponent;
      const std::int64_t hi = s.exponent > 0 ? s.exponent - 1 : -1;
      const BigInt sign = s.exponent > 0 ? 1 : -1;
      for (std::int64_t j = lo; j <= hi; ++j) {
        word.back().exponent = j;
        result.add_term(sign, Word::from_syllables(word));
      }
    }
    prefix.push_back(s);
  }
  return result;
}

Weights compute_weights(const Presentation& p) {
  const std::size_t cols = p.generator_count();
  std::vector<std::vector<BigInt>> matrix;
  for (const auto& r : p.relators()) {
    std::vector<BigInt> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = exponent_sum(r, static_cast<GeneratorId>(j));
    matrix.push_back(std::move(row));
  }
  const Echelon ech = integer_echelon(std::move(matrix), cols);
  const std::size_t nullity = cols - ech.pivot_columns.size();
  if (nullity != 1) {
    throw Error(Errc::H1RankNotOne,
                "relator exponent-sum matrix has nullity " + std::to_string(nullity) + ", expected 1");
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<BigRational> x(cols, BigRational(0));
  x[free_col] = 1;
  for (std::size_t i = ech.rows.size(); i-- > 0;) {
    const std::size_t pc = ech.pivot_columns[i];
    BigRational acc = 0;
    for (std::size_t j = pc + 1; j < cols; ++j) acc += BigRational(ech.rows[i][j]) * x[j];
    x[pc] = -acc / BigRational(ech.rows[i][pc]);
  }

  BigInt denom_lcm = 1;
  for (const auto& v : x) denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(v));
  std::vector<BigInt> ints(cols);
  BigInt content = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    ints[j] = numerator(x[j]) * (denom_lcm / denominator(x[j]));
    content = boost::multiprecision::gcd(content, ints[j]);
  }
  for (auto& v : ints) v /= content;

  std::size_t sign_ref = 0;
  if (p.meridian() && ints[*p.meridian()] != 0) {
    sign_ref = *p.meridian();
  } else {
    while (ints[sign_ref] == 0) ++sign_ref;
  }
  if (ints[sign_ref] < 0) {
    for (auto& v : ints) v = -v;
  }

  Weights w;
  for (const auto& v : ints) w.values.push_back(to_int64(v));
  return w;
}

std::int64_t abelian_degree(const Word& u, const Weights& w) {
  std::int64_t total = 0;
  for (const auto& s : u.syllables()) {
    std::int64_t term;
    if (__builtin_mul_overflow(s.exponent, w[s.generator], &term) || __builtin_add_overflow(total, term, &total)) {
      throw Error(Errc::Overflow, "abelianized exponent overflows 64 bits");
    }
  }
  return total;
}

LaurentPoly abelianize(const Word& u, const Weights& w) { return LaurentPoly::t_power(abelian_degree(u, w)); }

LaurentPoly abelianize(const GroupRingElement& x, const Weights& w) {
  LaurentPoly p;
  for (const auto& [u, c] : x.terms()) p.add_term(c, abelian_degree(u, w));
  return p;
}

}  // namespace foxknot
