#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/corpus.hpp"
#include "artin/oracle.hpp"
#include "test_util.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

CoxeterMatrix matrix_of(const PresentationGraph& g) {
  return coxeter_matrix(g, g.all_vertices());
}

PresentationGraph triangle(Label ab, Label ac, Label bc) {
  return PresentationGraph({"a", "b", "c"},
                           {{"a", "b", ab}, {"a", "c", ac}, {"b", "c", bc}});
}

const oracle::CoxeterElementTable& table_of(
    const std::variant<oracle::CoxeterElementTable, oracle::CapExceeded>& v) {
  REQUIRE(std::holds_alternative<oracle::CoxeterElementTable>(v));
  return std::get<oracle::CoxeterElementTable>(v);
}

} // namespace

TEST_CASE("gram matrix and positive definiteness") {
  const auto g235 = triangle(2, 3, 5);
  const auto gram = oracle::gram_matrix(matrix_of(g235));
  CHECK(gram[0][0] == doctest::Approx(1.0));
  CHECK(gram[0][1] == doctest::Approx(0.0));          // -cos(pi/2)
  CHECK(gram[0][2] == doctest::Approx(-0.5));         // -cos(pi/3)
  CHECK(gram[1][2] == doctest::Approx(-std::cos(std::numbers::pi / 5)));

  CHECK(oracle::gram_positive_definite(matrix_of(g235))); // H3

  for (int m = 2; m <= 12; ++m) {
    const PresentationGraph k2({"a", "b"}, {{"a", "b", m}});
    CHECK(oracle::gram_positive_definite(matrix_of(k2)));
  }

  CHECK(!oracle::gram_positive_definite(matrix_of(triangle(2, 3, 6)))); // affine, det 0
  CHECK(!oracle::gram_positive_definite(matrix_of(corpus::cycle(3, 3))));
  CHECK(!oracle::gram_positive_definite(matrix_of(corpus::discrete(2))));
}

TEST_CASE("coxeter enumeration hits the classical orders") {
  const auto a3 = triangle(3, 2, 3); // path 3-3 with the far pair at 2
  CHECK(table_of(oracle::enumerate_coxeter(matrix_of(a3))).order() == 24);

  const auto b3 = triangle(4, 2, 3);
  CHECK(table_of(oracle::enumerate_coxeter(matrix_of(b3))).order() == 48);

  const auto h3 = triangle(2, 3, 5);
  CHECK(table_of(oracle::enumerate_coxeter(matrix_of(h3))).order() == 120);

  for (int m = 3; m <= 12; ++m) {
    const PresentationGraph k2({"a", "b"}, {{"a", "b", m}});
    CHECK(table_of(oracle::enumerate_coxeter(matrix_of(k2))).order() ==
          2 * static_cast<std::size_t>(m));
  }

  const auto affine = oracle::enumerate_coxeter(matrix_of(corpus::cycle(3, 3)), 5000);
  REQUIRE(std::holds_alternative<oracle::CapExceeded>(affine));
  CHECK(std::get<oracle::CapExceeded>(affine).cap == 5000);
}

TEST_CASE("enumeration is deterministic") {
  const auto h3 = triangle(2, 3, 5);
  const auto first = table_of(oracle::enumerate_coxeter(matrix_of(h3)));
  const auto second = table_of(oracle::enumerate_coxeter(matrix_of(h3)));
  REQUIRE(first.order() == second.order());
  for (std::size_t i = 0; i < first.order(); ++i)
    CHECK(first.elements[i].grid_key() == second.elements[i].grid_key());
}

TEST_CASE("brute-force generator conjugacy") {
  {
    const PresentationGraph i3({"a", "b"}, {{"a", "b", 3}});
    const auto t = table_of(oracle::enumerate_coxeter(matrix_of(i3)));
    CHECK(oracle::generators_conjugate_bruteforce(t, 0, 1));
  }
  {
    const PresentationGraph i4({"a", "b"}, {{"a", "b", 4}});
    const auto t = table_of(oracle::enumerate_coxeter(matrix_of(i4)));
    CHECK(!oracle::generators_conjugate_bruteforce(t, 0, 1));
  }
  {
    // B3 as the triangle (4,2,3): a-b:4, a-c:2, b-c:3. The two
    // 3-joined generators (b, c) are conjugate; a is conjugate to
    // neither.
    const auto b3 = triangle(4, 2, 3);
    const auto t = table_of(oracle::enumerate_coxeter(matrix_of(b3)));
    const auto odd = odd_components(b3);
    for (int s = 0; s < 3; ++s)
      for (int u = s + 1; u < 3; ++u)
        CHECK(oracle::generators_conjugate_bruteforce(t, s, u) == odd.same_class(s, u));
    CHECK(oracle::generators_conjugate_bruteforce(t, 1, 2));
    CHECK(!oracle::generators_conjugate_bruteforce(t, 0, 1));
    CHECK(!oracle::generators_conjugate_bruteforce(t, 0, 2));
  }
}

TEST_CASE("brute-force odd join") {
  const auto fig3 = corpus::figure3_union();
  CHECK(oracle::brute_force_odd_join(fig3, VertexSet::of(fig3, {"a"}),
                                     VertexSet::of(fig3, {"a", "c"})));
  CHECK(!oracle::brute_force_odd_join(fig3, VertexSet::of(fig3, {"a", "b", "e", "f"}),
                                      VertexSet::of(fig3, {"c", "d", "g", "h"})));
  CHECK(oracle::brute_force_odd_join(fig3, VertexSet::of(fig3, {"c"}),
                                     VertexSet::of(fig3, {"h"})));

  const auto even = corpus::cycle(6, 4);
  CHECK(!oracle::brute_force_odd_join(even, VertexSet::of(even, {"a"}),
                                      VertexSet::of(even, {"b"})));

  CHECK_THROWS_AS(
      oracle::brute_force_odd_join(corpus::discrete(9), VertexSet(9), VertexSet(9)),
      input_error);
}

TEST_CASE("brute-force splittings") {
  CHECK(oracle::brute_force_splittings(corpus::example3_4()).size() == 1);
  CHECK(oracle::brute_force_splittings(corpus::complete(4, 2)).empty());
  CHECK(oracle::brute_force_splittings(corpus::discrete(3)).size() == 6);
  CHECK_THROWS_AS(oracle::brute_force_splittings(corpus::discrete(7)), input_error);
}
