#include <cctype>
#include <charconv>
#include <string>

#include "foxknot/error.hpp"
#include "foxknot/words.hpp"

namespace foxknot {

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> generators)
      : text_(text), generators_(generators) {}

  Word parse() {
    Word w = parse_word();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return w;
  }

 private:
  Word parse_word() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      w *= parse_factor();
    }
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      return atom.pow(parse_int());
    }
    return atom;
  }

  Word parse_atom() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      if (pos_ >= text_.size()) fail("unbalanced '('");
      ++pos_;  // ')'
      return inner;
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {};
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(std::string("unexpected character '") + c + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i] == name) return Word::generator(static_cast<GeneratorId>(i));
    }
    fail("unknown generator '" + std::string(name) + "'");
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("malformed exponent");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail("malformed exponent (out of range)");
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::Parse, what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::span<const std::string> generators_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  return WordParser(text, generators).parse();
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<Word> relators;
  std::optional<GeneratorId> meridian;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail_line(line_no, "expected 'key: value'");
    std::string_view key = trim(line.substr(0, colon));
    std::string_view value = trim(line.substr(colon + 1));

    if (key == "gens") {
      if (have_gens) fail_line(line_no, "duplicate 'gens' line");
      have_gens = true;
      while (!value.empty()) {
        auto end = value.find_first_of(" \t");
        std::string_view name = value.substr(0, end);
        if (!is_valid_generator_name(name)) {
          fail_line(line_no, "invalid generator name '" + std::string(name) + "'");
        }
        gens.emplace_back(name);
        value = trim(value.substr(end == std::string_view::npos ? value.size() : end));
      }
      if (gens.empty()) fail_line(line_no, "'gens' needs at least one generator");
    } else if (key == "rel") {
      if (!have_gens) fail_line(line_no, "'rel' before 'gens'");
      try {
        auto eq = value.find('=');
        if (eq == std::string_view::npos) {
          relators.push_back(parse_word(value, gens));
        } else {
          Word lhs = parse_word(value.substr(0, eq), gens);
          Word rhs = parse_word(value.substr(eq + 1), gens);
          relators.push_back(lhs * rhs.inverse());
        }
      } catch (const Error& e) {
        if (e.code() != Errc::Parse) throw;
        fail_line(line_no, e.what());
      }
    } else if (key == "meridian") {
      if (!have_gens) fail_line(line_no, "'meridian' before 'gens'");
      if (meridian) fail_line(line_no, "duplicate 'meridian' line");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == value) meridian = static_cast<GeneratorId>(i);
      }
      if (!meridian) fail_line(line_no, "unknown meridian '" + std::string(value) + "'");
    } else {
      fail_line(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_gens) throw Error(Errc::Parse, "missing 'gens' line");
  return Presentation(std::move(gens), std::move(relators), meridian);
}

}  // namespace foxknot
