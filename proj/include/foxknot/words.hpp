#pragma once

// Free-group words over a finite generating set, deficiency-one group
// presentations, and the text format used to read and write them.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foxknot {

/// Index of a generator within its Presentation (or alphabet).
using GeneratorId = std::uint32_t;

struct Syllable {
  GeneratorId generator;
  std::int64_t exponent;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// An element of the free group, always stored freely reduced: adjacent
/// syllables have distinct generators and no exponent is zero. The empty
/// syllable list is the identity.
class Word {
 public:
  Word() = default;

  static Word generator(GeneratorId g, std::int64_t exponent = 1);

  /// Builds the reduced word equal to the product of the given syllables.
  /// Zero exponents are dropped.
  static Word from_syllables(std::span<const Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  Word inverse() const;
  Word pow(std::int64_t k) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void append(Syllable s);

  std::vector<Syllable> syllables_;
};

inline Word multiply(const Word& u, const Word& v) { return u * v; }
inline Word invert(const Word& u) { return u.inverse(); }

/// Sum of the exponents of the syllables in `g`.
std::int64_t exponent_sum(const Word& u, GeneratorId g);

bool is_valid_generator_name(std::string_view name);

/// Generators, deficiency-one relator list and an optional meridian.
class Presentation {
 public:
  /// Throws Error(InvalidArgument) if names are invalid or repeated, the
  /// relator count is not generators - 1, a relator uses an undeclared
  /// generator index, or the meridian is out of range.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::optional<GeneratorId> meridian = std::nullopt);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::optional<GeneratorId> meridian() const noexcept { return meridian_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  std::optional<GeneratorId> find(std::string_view name) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::optional<GeneratorId> meridian_;
};

/// Canonical printer: syllables separated by single spaces, `g^k` for
/// |k| != 1, `g^-1` for the inverse, and `1` for the identity.
std::string render(const Word& u, std::span<const std::string> names);

/// Canonical presentation text (`gens:`, one `rel:` per relator, `meridian:`).
std::string render(const Presentation& p);

/// Grammar (whitespace is product):
///   WORD   := FACTOR*
///   FACTOR := ATOM ('^' INT)?
///   ATOM   := NAME | '1' | '(' WORD ')'
///   INT    := '-'? DIGITS
/// Empty input is the identity. Throws Error(Parse) on unknown generators,
/// malformed exponents or unbalanced parentheses.
Word parse_word(std::string_view text, std::span<const std::string> generators);

/// Line format: `gens: a w`, `rel: <word>` or `rel: <word> = <word>`
/// (stored as lhs * rhs^-1), optional `meridian: a`; `#` starts a comment.
Presentation parse_presentation(std::string_view text);

}  // namespace foxknot
