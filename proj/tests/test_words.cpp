#include <doctest.h>

#include "fpg/error.hpp"
#include "fpg/homology.hpp"
#include "fpg/words.hpp"
#include "support.hpp"

using namespace fpg;
using fpg::testing::group;
using fpg::testing::pres;

namespace {

const Letter a = gen(0), A = gen(0, -1), b = gen(1), B = gen(1, -1);

std::size_t total_length(const Presentation& p) {
  std::size_t n = 0;
  for (const Word& r : p.relators()) n += r.size();
  return n;
}

}  // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  CHECK(free_reduce(Word{a, A}).empty());
  CHECK(free_reduce(Word{a, b, B, A}).empty());
  CHECK(free_reduce(Word{a, b, A, B}) == Word{a, b, A, B});
  CHECK(free_reduce(Word{b, a, A, a, A, B, b}) == Word{b});
}

TEST_CASE("cyclic_reduce strips conjugation") {
  CHECK(cyclic_reduce(Word{a, b, A}) == Word{b});
  CHECK(cyclic_reduce(Word{a, b, a, b}) == Word{a, b, a, b});
  CHECK(cyclic_reduce(Word{}).empty());
  CHECK(cyclic_reduce(Word{B, a, a, b}) == Word{a, a});
  CHECK(cyclic_reduce(Word{a, b, B, A}).empty());
}

TEST_CASE("word_product concatenates and reduces") {
  CHECK(word_product(Word{a, b}, Word{B, A}).empty());
  CHECK(word_product(Word{a}, Word{a}) == Word{a, a});
  CHECK(word_product(Word{}, Word{a, B}) == Word{a, B});
  CHECK(word_product(Word{a, b}, Word{B, a}, 2) == Word{a, a});
}

TEST_CASE("word_product rejects letters outside the generator range") {
  CHECK_THROWS_AS(word_product(Word{a}, Word{b}, 1), Error);
  try {
    word_product(Word{gen(5)}, Word{}, 2);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("abelianized_vector counts signed occurrences") {
  CHECK(abelianized_vector(Word{a, b, A, B}, 2) == std::vector<long>{0, 0});
  CHECK(abelianized_vector(Word{a, a, a, B}, 2) == std::vector<long>{3, -1});
  CHECK(abelianized_vector(Word{}, 3) == std::vector<long>{0, 0, 0});
}

TEST_CASE("power, invert and commutator") {
  CHECK(power(1, 3) == Word{b, b, b});
  CHECK(power(0, -2) == Word{A, A});
  CHECK(power(0, 0).empty());
  CHECK(invert(Word{a, b, b}) == Word{B, B, A});
  CHECK(commutator(Word{a}, Word{b}) == Word{a, b, A, B});
  CHECK(commutator(Word{a}, Word{a}).empty());
}

TEST_CASE("cyclic normal form identifies rotations and inverses") {
  const Word w{a, a, b};
  CHECK(cyclic_normal_form(w) == cyclic_normal_form(Word{b, a, a}));
  CHECK(cyclic_normal_form(w) == cyclic_normal_form(invert(w)));
  CHECK(equal_up_to_rotation(Word{a, b, B, B}, Word{B, B, a, b}));
  CHECK_FALSE(equal_up_to_rotation(Word{a, b}, Word{B, A}));
}

TEST_CASE("word properties on random input") {
  fpg::testing::Random rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = rng.word(3, 12), v = rng.word(3, 12);
    const Word r = free_reduce(u);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= u.size());
    CHECK(is_cyclically_reduced(cyclic_reduce(u)));
    CHECK(word_product(u, invert(u)).empty());

    const auto su = abelianized_vector(u, 3), sv = abelianized_vector(v, 3);
    const auto suv = abelianized_vector(word_product(u, v), 3);
    for (std::size_t j = 0; j < 3; ++j) CHECK(suv[j] == su[j] + sv[j]);
  }
}

TEST_CASE("presentations reduce relators and reject bad input") {
  const Presentation p({"a", "b"}, {Word{b, a, a, B}, Word{a, b, A}});
  CHECK(p.relators()[0] == Word{a, a});
  CHECK(p.relators()[1] == Word{b});

  CHECK_THROWS_AS(Presentation({"a"}, {Word{a, A}}), Error);
  CHECK_THROWS_AS(Presentation({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Presentation({"1x"}, {}), Error);
  CHECK_THROWS_AS(Presentation({"a"}, {Word{b}}), Error);
  CHECK(Presentation::free_group({"x", "y"}).relator_count() == 0);
}

TEST_CASE("free_product is a disjoint union") {
  CHECK(free_product(pres("<a | a^2>"), pres("<b | b^3>")) == pres("<a, b | a^2, b^3>"));
  CHECK(free_product(pres("<a | >"), pres("<b | >")) == pres("<a, b | >"));
  CHECK(abelianization(free_product(pres("<a | a^2>"), pres("<b | b^2>"))) == group(0, {2, 2}));
}

TEST_CASE("product constructors suffix clashing names") {
  const Presentation fp = free_product(pres("<a, b | ab>"), pres("<b, b_2 | b^2>"));
  CHECK(fp.generator_names() == std::vector<std::string>{"a", "b", "b_3", "b_2"});
  CHECK(fp == pres("<a, b, b_3, b_2 | ab, b_3^2>"));
  const Presentation dp = direct_product(pres("<a | >"), pres("<a | >"));
  CHECK(dp == pres("<a, a_2 | [a, a_2]>"));
}

TEST_CASE("direct_product adds all cross commutators") {
  CHECK(direct_product(pres("<a | >"), pres("<b | >")) == pres("<a, b | a b a^-1 b^-1>"));
  const Presentation z6 = direct_product(pres("<a | a^2>"), pres("<b | b^3>"));
  CHECK(z6 == pres("<a, b | a^2, b^3, [a,b]>"));
  CHECK(abelianization(z6) == group(0, {6}));
  const Presentation three = direct_product(pres("<a | >"), pres("<b, c | >"));
  CHECK(three.generator_count() == 3);
  CHECK(three.relator_count() == 2);
}

TEST_CASE("product counts on random presentations") {
  fpg::testing::Random rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Presentation p1 = rng.presentation(3, 3, 6), p2 = rng.presentation(3, 3, 6);
    const Presentation fp = free_product(p1, p2), dp = direct_product(p1, p2);
    const std::size_t g1 = p1.generator_count(), g2 = p2.generator_count();
    const std::size_t m1 = p1.relator_count(), m2 = p2.relator_count();
    CHECK(fp.generator_count() == g1 + g2);
    CHECK(fp.relator_count() == m1 + m2);
    CHECK(total_length(fp) == total_length(p1) + total_length(p2));
    CHECK(dp.generator_count() == g1 + g2);
    CHECK(dp.relator_count() == m1 + m2 + g1 * g2);
  }
}

TEST_CASE("amalgamated_product builds the trefoil group") {
  const Presentation z_a = pres("<a | >"), z_b = pres("<b | >"), h = pres("<h | >");
  const Presentation t = amalgamated_product(z_a, z_b, h, GeneratorMap{{power(0, 2)}},
                                             GeneratorMap{{power(0, 3)}});
  CHECK(t == pres("<a, b | a^2 b^-3>"));
  CHECK(abelianization(t) == group(1));
}

TEST_CASE("amalgam over the trivial group is the free product") {
  fpg::testing::Random rng(11);
  const Presentation empty;
  for (int trial = 0; trial < 50; ++trial) {
    const Presentation p1 = rng.presentation(3, 3, 5), p2 = rng.presentation(3, 3, 5);
    CHECK(amalgamated_product(p1, p2, empty, {}, {}) == free_product(p1, p2));
  }
}

TEST_CASE("amalgam validates its maps") {
  const Presentation z_a = pres("<a | >"), z_b = pres("<b | >"), h = pres("<h | >");
  CHECK_THROWS_AS(amalgamated_product(z_a, z_b, h, GeneratorMap{{Word{b}}}, GeneratorMap{{Word{a}}}),
                  Error);
  CHECK_THROWS_AS(amalgamated_product(z_a, z_b, h, GeneratorMap{}, GeneratorMap{{Word{a}}}), Error);
}

TEST_CASE("identity identifications are omitted from the amalgam") {
  const Presentation p = pres("<a | a^4>");
  const Presentation h = pres("<h | >");
  const Presentation out =
      amalgamated_product(p, p, h, GeneratorMap{{Word{}}}, GeneratorMap{{Word{}}});
  CHECK(out == free_product(p, p));
}
