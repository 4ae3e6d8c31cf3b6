#include <doctest.h>

#include "fpg/error.hpp"
#include "fpg/text.hpp"
#include "support.hpp"

using namespace fpg;
using fpg::testing::pres;

namespace {

const Letter a = gen(0), A = gen(0, -1), b = gen(1), B = gen(1, -1);

struct Position {
  std::size_t line, column;
};

Position parse_error_at(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return {e.line(), e.column()};
  }
  FAIL("expected a parse error for: " << text);
  return {0, 0};
}

}  // namespace

TEST_CASE("parse_presentation basics") {
  const Presentation torus = parse_presentation("<a,b | [a,b]>");
  CHECK(torus.generator_names() == std::vector<std::string>{"a", "b"});
  REQUIRE(torus.relator_count() == 1);
  CHECK(torus.relators()[0] == Word{a, b, A, B});

  const Presentation z6 = parse_presentation("<a | a^6>");
  CHECK(z6.relators()[0] == power(0, 6));

  CHECK(parse_presentation("<a, b | >").relator_count() == 0);
  CHECK(parse_presentation("< | >").generator_count() == 0);
}

TEST_CASE("parse_presentation factors") {
  CHECK(pres("<a, b | (ab)^3>").relators()[0] == Word{a, b, a, b, a, b});
  CHECK(pres("<a, b | (ab)^-2>").relators()[0] == Word{B, A, B, A});
  CHECK(pres("<a, b | a^-2 b>").relators()[0] == Word{A, A, b});
  CHECK(pres("<a, b | [a^2, b]>").relators()[0] == Word{a, a, b, A, A, B});
  CHECK(pres("<a, b | [a, b]^2>").relators()[0] == Word{a, b, A, B, a, b, A, B});
  CHECK(pres("<a, b | a^+3>").relators()[0] == power(0, 3));
  // Powers are expanded, words reduced on ingest.
  CHECK(pres("<a, b | b a^3 a^-1 b^-1>").relators()[0] == power(0, 2));
}

TEST_CASE("juxtaposed names split into generators") {
  CHECK(pres("<a, b | abab^-1>").relators()[0] == Word{a, b, a, B});
  CHECK(pres("<x, y, xy | xy>").relators()[0] == Word{gen(2)});
  CHECK(pres("<x1, x2 | x1x2^2>").relators()[0] == Word{gen(0), gen(1), gen(1)});
  CHECK(pres("<r, s | srsr>") == pres("<r, s | s r s r>"));
}

TEST_CASE("whitespace, newlines and comments are insignificant") {
  const Presentation p = parse_presentation("# quaternions\n<a, b |\n  a^4,   # order four\n  a^2 b^-2,\n  abab^-1\n>\n");
  CHECK(p == pres("<a,b|a^4,a^2b^-2,abab^-1>"));
}

TEST_CASE("parse errors report line and column") {
  const Position empty = parse_error_at("<a | a a^-1>");
  CHECK(empty.line == 1);
  CHECK(empty.column == 6);

  const Position unknown = parse_error_at("<a, b |\n  a^2, c>");
  CHECK(unknown.line == 2);
  CHECK(unknown.column == 8);

  CHECK(parse_error_at("<a, a | >").column == 5);
  CHECK(parse_error_at("<a | a^>").column == 8);
  CHECK(parse_error_at("<a | a").column == 7);
  CHECK(parse_error_at("<a | a> extra").column == 9);
  CHECK(parse_error_at("<a | a ? a>").column == 8);
  CHECK(parse_error_at("a | a>").column == 1);
  CHECK(parse_error_at("<a | [a a]>").column == 10);
  CHECK(parse_error_at("<a | (a>").column == 8);
  CHECK(parse_error_at("<a | a^99999999>").column == 8);
  CHECK(parse_error_at("").line == 1);
}

TEST_CASE("format and parse round trip") {
  for (const auto& item : fpg::testing::corpus()) {
    const Presentation p = pres(item.text);
    CHECK(parse_presentation(format_presentation(p)) == p);
  }
  fpg::testing::Random rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Presentation p = rng.presentation(3, 4, 9);
    CHECK(parse_presentation(format_presentation(p)) == p);
  }
  const Presentation long_names({"x1", "x11", "y_a"}, {Word{gen(0), gen(1), gen(2, -1)}});
  CHECK(parse_presentation(format_presentation(long_names)) == long_names);
}

TEST_CASE("format_presentation layout") {
  CHECK(format_presentation(pres("<a,b|a^2 b^-1 a b, abab>")) == "<a, b | a^2 b^-1 a b, a b a b>");
  CHECK(format_presentation(pres("<a, b | >")) == "<a, b | >");
  CHECK(format_presentation(pres("< | >")) == "< | >");
  CHECK(format_word(Word{}, std::vector<std::string>{"a"}).empty());
}

TEST_CASE("word lists and generator maps") {
  const Presentation f2 = pres("<a, b | >");
  const auto words = parse_word_list("b; aba^-1 ;a^2;", f2.generator_names());
  REQUIRE(words.size() == 3);
  CHECK(words[0] == Word{b});
  CHECK(words[1] == Word{a, b, A});
  CHECK(words[2] == Word{a, a});
  CHECK(parse_word_list("", f2.generator_names()).empty());
  CHECK(parse_word_list("a a^-1", f2.generator_names()).front().empty());
  CHECK_THROWS_AS(parse_word_list("a; c", f2.generator_names()), ParseError);
  CHECK(parse_word("", f2.generator_names()).empty());

  const Presentation h = pres("<h, k | >");
  const GeneratorMap m = parse_generator_map("k = b; h=a^2", h, f2);
  CHECK(m.images == std::vector<Word>{Word{a, a}, Word{b}});
  CHECK_THROWS_AS(parse_generator_map("h=a", h, f2), ParseError);
  CHECK_THROWS_AS(parse_generator_map("h=a; k=b; h=b", h, f2), ParseError);
  CHECK_THROWS_AS(parse_generator_map("z=a; k=b", h, f2), ParseError);
}
