#include "fpg/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "fpg/error.hpp"

namespace fpg {

namespace {

enum class Tok { Name, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> tokens() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          t.text += advance();
      } else if (std::string_view("<>|,^()[];=+-").find(c) != std::string_view::npos) {
        t.kind = Tok::Symbol;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).tokens()) {}

  void set_names(std::span<const std::string> names) {
    index_.clear();
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
  }

  Presentation presentation() {
    expect("<");
    std::vector<std::string> names;
    std::set<std::string> seen;
    if (!at_symbol("|")) {
      for (;;) {
        const Token& t = peek();
        if (t.kind != Tok::Name) fail(t, "expected a generator name");
        if (!seen.insert(t.text).second) fail(t, "duplicate generator '" + t.text + "'");
        names.push_back(t.text);
        ++pos_;
        if (!at_symbol(",")) break;
        ++pos_;
      }
    }
    expect("|");
    set_names(names);
    std::vector<Word> relators;
    if (!at_symbol(">")) {
      for (;;) {
        const Token start = peek();
        Word r = cyclic_reduce(word());
        if (r.empty()) fail(start, "relator reduces to the empty word");
        relators.push_back(std::move(r));
        if (!at_symbol(",")) break;
        ++pos_;
      }
    }
    expect(">");
    expect_end();
    return Presentation(std::move(names), std::move(relators));
  }

  // Word up to a ';' or the end of input; may be empty.
  Word optional_word() {
    if (at_end() || at_symbol(";")) return {};
    return free_reduce(word());
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }
  void skip() { ++pos_; }

  void expect(std::string_view s) {
    if (!at_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'");
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected trailing input");
  }

  std::string name() {
    const Token& t = peek();
    if (t.kind != Tok::Name) fail(t, "expected a name");
    ++pos_;
    return t.text;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.column, message);
  }

 private:
  bool starts_factor() const {
    return peek().kind == Tok::Name || at_symbol("(") || at_symbol("[");
  }

  Word word() {
    if (!starts_factor()) fail(peek(), "expected a word");
    std::vector<Letter> letters;
    while (starts_factor()) {
      Word f = factor();
      letters.insert(letters.end(), f.begin(), f.end());
    }
    return Word(std::move(letters));
  }

  Word factor() {
    if (at_symbol("(")) {
      ++pos_;
      Word inner = word();
      expect(")");
      return raise(inner, exponent());
    }
    if (at_symbol("[")) {
      ++pos_;
      Word u = word();
      expect(",");
      Word v = word();
      expect("]");
      Word c(u.letters);
      const Word ui = invert(u), vi = invert(v);
      c.letters.insert(c.letters.end(), v.begin(), v.end());
      c.letters.insert(c.letters.end(), ui.begin(), ui.end());
      c.letters.insert(c.letters.end(), vi.begin(), vi.end());
      return raise(c, exponent());
    }
    const Token t = peek();
    ++pos_;
    std::vector<std::size_t> gens = split(t);
    Word head;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) head.letters.push_back(gen(gens[i]));
    const Word last = power(gens.back(), exponent());
    head.letters.insert(head.letters.end(), last.begin(), last.end());
    return head;
  }

  // Optional "^ int"; 1 when absent.
  long exponent() {
    if (!at_symbol("^")) return 1;
    ++pos_;
    int sign = 1;
    if (at_symbol("-") || at_symbol("+")) {
      sign = peek().text == "-" ? -1 : 1;
      ++pos_;
    }
    const Token& t = peek();
    if (t.kind != Tok::Number) fail(t, "expected an integer exponent");
    long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || value > 1000000) fail(t, "exponent out of range");
    ++pos_;
    return sign * value;
  }

  static Word raise(const Word& w, long e) {
    const Word base = e < 0 ? invert(w) : w;
    Word out;
    for (long i = 0; i < (e < 0 ? -e : e); ++i)
      out.letters.insert(out.letters.end(), base.begin(), base.end());
    return out;
  }

  // Splits an identifier run into declared names, preferring longer names.
  std::vector<std::size_t> split(const Token& t) const {
    if (auto it = index_.find(t.text); it != index_.end()) return {it->second};
    std::vector<std::optional<std::vector<std::size_t>>> memo(t.text.size() + 1);
    std::vector<bool> done(t.text.size() + 1, false);
    auto solve = [&](auto&& self, std::size_t from) -> std::optional<std::vector<std::size_t>> {
      if (from == t.text.size()) return std::vector<std::size_t>{};
      if (done[from]) return memo[from];
      done[from] = true;
      for (std::size_t len = t.text.size() - from; len > 0; --len) {
        auto it = index_.find(t.text.substr(from, len));
        if (it == index_.end()) continue;
        if (auto rest = self(self, from + len)) {
          rest->insert(rest->begin(), it->second);
          memo[from] = std::move(rest);
          return memo[from];
        }
      }
      return std::nullopt;
    };
    auto parts = solve(solve, 0);
    if (!parts) fail(t, "unknown generator '" + t.text + "'");
    return *parts;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Parser p(text);
  p.set_names(names);
  Word w = p.optional_word();
  p.expect_end();
  return w;
}

std::vector<Word> parse_word_list(std::string_view text, std::span<const std::string> names) {
  Parser p(text);
  p.set_names(names);
  std::vector<Word> out;
  for (;;) {
    if (p.at_end()) break;
    if (p.at_symbol(";")) {
      p.skip();
      continue;
    }
    out.push_back(p.optional_word());
    if (!p.at_end()) p.expect(";");
  }
  return out;
}

GeneratorMap parse_generator_map(std::string_view text, const Presentation& source,
                                 const Presentation& target) {
  Parser p(text);
  p.set_names(target.generator_names());
  std::vector<std::optional<Word>> images(source.generator_count());
  while (!p.at_end()) {
    if (p.at_symbol(";")) {
      p.skip();
      continue;
    }
    const Token key = p.peek();
    const std::string h = p.name();
    const auto& names = source.generator_names();
    auto it = std::find(names.begin(), names.end(), h);
    if (it == names.end()) Parser::fail(key, "unknown subgroup generator '" + h + "'");
    const auto idx = static_cast<std::size_t>(it - names.begin());
    if (images[idx]) Parser::fail(key, "generator '" + h + "' mapped twice");
    p.expect("=");
    images[idx] = p.optional_word();
    if (!p.at_end()) p.expect(";");
  }
  GeneratorMap map;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError(1, 1, "no image given for '" + source.name(i) + "'");
    map.images.push_back(*images[i]);
  }
  return map;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += names[w[i].generator];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i > 0) out += ", ";
    out += p.name(i);
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i > 0) out += ", ";
    out += format_word(p.relators()[i], p.generator_names());
  }
  out += ">";
  return out;
}

}  // namespace fpg
