#include "foxknot/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "foxknot/error.hpp"

namespace foxknot {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(Errc::Overflow, "syllable exponent overflows 64 bits");
  }
  return r;
}

std::int64_t checked_neg(std::int64_t x) {
  if (x == INT64_MIN) {
    throw Error(Errc::Overflow, "syllable exponent overflows 64 bits");
  }
  return -x;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(Errc::Overflow, "syllable exponent overflows 64 bits");
  }
  return r;
}

}  // namespace

Word Word::generator(GeneratorId g, std::int64_t exponent) {
  Word w;
  w.append({g, exponent});
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.append(s);
  return w;
}

void Word::append(Syllable s) {
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    auto e = checked_add(syllables_.back().exponent, s.exponent);
    if (e == 0) {
      syllables_.pop_back();
    } else {
      syllables_.back().exponent = e;
    }
    return;
  }
  syllables_.push_back(s);
}

Word& Word::operator*=(const Word& rhs) {
  if (this == &rhs) {
    Word copy = rhs;
    return *this *= copy;
  }
  for (const auto& s : rhs.syllables_) append(s);
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->generator, checked_neg(it->exponent)});
  }
  return w;
}

Word Word::pow(std::int64_t k) const {
  if (k == 0 || is_identity()) return {};
  if (syllables_.size() == 1) {
    return generator(syllables_[0].generator, checked_mul(syllables_[0].exponent, k));
  }
  Word base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  Word result;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::int64_t exponent_sum(const Word& u, GeneratorId g) {
  std::int64_t total = 0;
  for (const auto& s : u.syllables()) {
    if (s.generator == g) total = checked_add(total, s.exponent);
  }
  return total;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::optional<GeneratorId> meridian)
    : generators_(std::move(generators)), relators_(std::move(relators)), meridian_(meridian) {
  if (generators_.empty()) {
    throw Error(Errc::InvalidArgument, "presentation needs at least one generator");
  }
  std::set<std::string_view> seen;
  for (const auto& name : generators_) {
    if (!is_valid_generator_name(name)) {
      throw Error(Errc::InvalidArgument, "invalid generator name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error(Errc::InvalidArgument, "duplicate generator '" + name + "'");
    }
  }
  if (relators_.size() + 1 != generators_.size()) {
    throw Error(Errc::InvalidArgument,
                "deficiency-one presentation needs " + std::to_string(generators_.size() - 1) +
                    " relators, got " + std::to_string(relators_.size()));
  }
  for (const auto& r : relators_) {
    for (const auto& s : r.syllables()) {
      if (s.generator >= generators_.size()) {
        throw Error(Errc::InvalidArgument, "relator uses an undeclared generator");
      }
    }
  }
  if (meridian_ && *meridian_ >= generators_.size()) {
    throw Error(Errc::InvalidArgument, "meridian is not a declared generator");
  }
}

std::optional<GeneratorId> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<GeneratorId>(i);
  }
  return std::nullopt;
}

std::string render(const Word& u, std::span<const std::string> names) {
  if (u.is_identity()) return "1";
  std::string out;
  for (const auto& s : u.syllables()) {
    if (!out.empty()) out += ' ';
    out += names[s.generator];
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

std::string render(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators()) {
    out += ' ';
    out += g;
  }
  out += '\n';
  for (const auto& r : p.relators()) {
    out += "rel: ";
    out += render(r, p.generators());
    out += '\n';
  }
  if (p.meridian()) {
    out += "meridian: ";
    out += p.generators()[*p.meridian()];
    out += '\n';
  }
  return out;
}

}  // namespace foxknot
