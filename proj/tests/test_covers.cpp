#include <doctest.h>

#include "fpg/covers.hpp"
#include "fpg/error.hpp"
#include "fpg/homology.hpp"
#include "support.hpp"

using namespace fpg;
using fpg::testing::group;
using fpg::testing::pres;
using fpg::testing::word;

namespace {

CosetTable table(const Presentation& p, const std::string& words) {
  return todd_coxeter(p, SubgroupSpec{parse_word_list(words, p.generator_names())}, 10000);
}

}  // namespace

TEST_CASE("index-2 cover of the torus") {
  const Presentation torus = pres("<a, b | [a,b]>");
  // Kernel of a -> 1, b -> 0 in Z2.
  const CosetTable t = table(torus, "a^2; b; a b a^-1");
  REQUIRE(t.size() == 2);
  const Covering c = build_cover(torus, t);
  CHECK(c.total.vertex_count() == 2);
  CHECK(c.total.edge_count() == 4);
  CHECK(c.total.face_count() == 2);
  CHECK(c.degree == 2);
  CHECK(fiber_size(c) == 2);
  CHECK_NOTHROW(validate_covering(c));
  CHECK(c.base == presentation_complex(torus));
  // The cover is again a torus.
  CHECK(homology(c.total).h1 == group(2));
  CHECK(homology(c.total).h2 == group(1));
}

TEST_CASE("identity cover reproduces the base") {
  for (const auto& item : fpg::testing::corpus()) {
    CAPTURE(item.name);
    const Presentation p = pres(item.text);
    const Covering c = build_cover(p, low_index_subgroups(p, 1).front());
    CHECK(c.total == c.base);
    CHECK(fiber_size(c) == 1);
    CHECK(equal_up_to_relator_rotation(subgroup_presentation(c), p));
  }
}

TEST_CASE("cover of Z6 for the subgroup generated by a^2") {
  const Presentation z6 = pres("<a | a^6>");
  const Covering c = build_cover(z6, table(z6, "a^2"));
  CHECK(c.total.vertex_count() == 2);
  CHECK(c.total.edge_count() == 2);
  CHECK(c.total.face_count() == 2);
  CHECK(c.total.edge_labels() == std::vector<std::string>{"a_0", "a_1"});
  CHECK(c.edge_projection == std::vector<std::size_t>{0, 0});
  CHECK(c.face_projection == std::vector<std::size_t>{0, 0});

  const Presentation h = subgroup_presentation(c);
  CHECK(h.generator_count() == 1);
  REQUIRE(h.relator_count() == 2);
  for (const Word& r : h.relators()) CHECK((r == power(0, 3) || r == power(0, -3)));
  CHECK(abelianization(h) == group(0, {3}));
  CHECK(simplify(h).relator_count() == 1);
}

TEST_CASE("build_cover rejects mismatched tables") {
  const Presentation z3 = pres("<a | a^3>");
  const CosetTable t = todd_coxeter(z3, {}, 10);
  CHECK_THROWS_AS(build_cover(pres("<a | a^2>"), t), Error);
  CHECK_THROWS_AS(build_cover(pres("<a, b | >"), t), Error);
}

TEST_CASE("validate_covering detects broken projections") {
  const Presentation z6 = pres("<a | a^6>");
  Covering c = build_cover(z6, table(z6, "a^3"));
  CHECK_NOTHROW(validate_covering(c));
  Covering wrong_degree = c;
  wrong_degree.degree = 2;
  CHECK_THROWS_AS(validate_covering(wrong_degree), Error);
  Covering wrong_vertex = c;
  wrong_vertex.vertex_projection[1] = 1;
  CHECK_THROWS_AS(validate_covering(wrong_vertex), Error);
}

TEST_CASE("subgroup presentations of free groups are free of Schreier rank") {
  const Presentation f2 = pres("<a, b | >");
  const Covering c = build_cover(f2, table(f2, "b; a b a^-1; a^2"));
  const Presentation h = subgroup_presentation(c);
  CHECK(h.generator_count() == 3);
  CHECK(h.relator_count() == 0);

  for (const auto& [text, max_index] : {std::pair<const char*, std::size_t>{"<a, b | >", 6},
                                        {"<a, b, c | >", 5}}) {
    const Presentation f = pres(text);
    const std::size_t g = f.generator_count();
    for (const CosetTable& t : low_index_subgroups(f, max_index)) {
      const Presentation sub = subgroup_presentation(build_cover(f, t));
      CHECK(sub.relator_count() == 0);
      CHECK(sub.generator_count() == t.size() * (g - 1) + 1);
    }
  }
}

TEST_CASE("cover laws over the corpus") {
  for (const auto& item : fpg::testing::corpus()) {
    CAPTURE(item.name);
    const Presentation p = pres(item.text);
    const std::size_t g = p.generator_count(), m = p.relator_count();
    const long chi = euler_characteristic(presentation_complex(p));
    for (const CosetTable& t : low_index_subgroups(p, 4)) {
      const std::size_t n = t.size();
      const Covering c = build_cover(p, t);
      CHECK_NOTHROW(validate_covering(c));
      CHECK(c.total.vertex_count() == n);
      CHECK(c.total.edge_count() == n * g);
      CHECK(c.total.face_count() == n * m);
      CHECK(euler_characteristic(c.total) == static_cast<long>(n) * chi);
      CHECK(fiber_size(c) == n);
      CHECK(component_count(c.total) == 1);
      const EdgePathPresentation sub = subgroup_presentation_with_details(c);
      CHECK(sub.presentation.generator_count() == n * g - (n - 1));
      CHECK(sub.presentation.relator_count() + sub.dropped_relators == n * m);
      CHECK(abelianization(sub.presentation) == homology(c.total).h1);
      CHECK(abelianization(simplify(sub.presentation)) == abelianization(sub.presentation));
    }
  }
}

TEST_CASE("cover edges follow the table") {
  const Presentation s3 = pres("<a, b | a^2, b^2, (ab)^3>");
  const CosetTable t = table(s3, "a");
  const Covering c = build_cover(s3, t);
  for (std::size_t v = 0; v < t.size(); ++v)
    for (std::size_t j = 0; j < 2; ++j) {
      const Edge& e = c.total.edge(v * 2 + j);
      CHECK(e.tail == v);
      CHECK(e.head == t.act(v, gen(j)));
      CHECK(c.edge_projection[v * 2 + j] == j);
    }
  for (std::size_t f = 0; f < c.total.face_count(); ++f) {
    const std::size_t start = c.total.step_source(c.total.face(f).steps.front());
    CHECK(start == f / s3.relator_count());
    CHECK(c.face_projection[f] == f % s3.relator_count());
  }
}

TEST_CASE("simplify performs elementary clean-up") {
  CHECK(simplify(pres("<x, y | y>")) == pres("<x | >"));
  CHECK(simplify(pres("<x | x^3, x^3>")) == pres("<x | x^3>"));
  CHECK(simplify(pres("<x | x^3, x^-3>")) == pres("<x | x^3>"));
  CHECK(simplify(pres("<x, y | x y^-1 x^2>")).generator_count() == 1);
  CHECK(simplify(pres("<x, y | x y^-1 x^2>")).relator_count() == 0);
  CHECK(simplify(pres("<x, y | x y x^-1 y^-1>")) == pres("<x, y | x y x^-1 y^-1>"));
  // Substitution of y = x^2 into the second relator leaves x^5.
  CHECK(simplify(pres("<x, y | y x^-2, x y^2>")) == pres("<x | x^5>"));
}

TEST_CASE("simplify keeps the abelianization on random presentations") {
  fpg::testing::Random rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Presentation p = rng.presentation(3, 3, 6);
    const Presentation s = simplify(p);
    CHECK(abelianization(s) == abelianization(p));
    CHECK(s.generator_count() <= p.generator_count());
    CHECK(simplify(s).generator_count() == s.generator_count());
  }
}
