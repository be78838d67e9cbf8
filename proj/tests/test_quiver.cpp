#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluster/quiver.hpp"

#include <random>

using namespace cluster;

namespace {

ExchangeMatrix a2() { return ExchangeMatrix(2, {0, -1, 1, 0}); }

ExchangeMatrix random_skew(std::mt19937& rng, int n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  ExchangeMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = d(rng);
      b.set(i, j, v);
      b.set(j, i, -v);
    }
  return b;
}

}  // namespace

TEST_CASE("quiver/matrix conversion") {
  Quiver q(2, {{0, 1}});
  CHECK(quiver_to_matrix(q) == a2());
  CHECK(matrix_to_quiver(a2()) == q);

  Quiver empty(3, {});
  CHECK(quiver_to_matrix(empty) == ExchangeMatrix(3));

  Quiver cyc(3, {{0, 1}, {1, 2}, {2, 0}});
  ExchangeMatrix b = quiver_to_matrix(cyc);
  CHECK(b.at(1, 0) == 1);
  CHECK(b.at(2, 1) == 1);
  CHECK(b.at(0, 2) == 1);
  CHECK(matrix_to_quiver(b) == cyc);

  CHECK_THROWS_AS(Quiver(2, {{0, 0}}), InvalidQuiver);
  CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), InvalidQuiver);
  CHECK_THROWS_AS(ExchangeMatrix(2, {0, 1, 1, 0}), InvalidQuiver);
}

TEST_CASE("matrix mutation") {
  ExchangeMatrix m1 = matrix_mutate(a2(), 0);
  CHECK(m1 == ExchangeMatrix(2, {0, 1, -1, 0}));

  // Oriented 3-cycle mutated at vertex 1 becomes the acyclic 2->1->3.
  ExchangeMatrix cyc = quiver_to_matrix(Quiver(3, {{0, 1}, {1, 2}, {2, 0}}));
  ExchangeMatrix mu = matrix_mutate(cyc, 0);
  CHECK(mu.at(1, 2) == 0);
  CHECK(mu.at(0, 1) == 1);   // arrow 2->1
  CHECK(mu.at(2, 0) == 1);  // the former arrow 3->1 is reversed
  CHECK(matrix_to_quiver(mu).is_acyclic());

  CHECK_THROWS_AS(matrix_mutate(a2(), 2), std::out_of_range);
}

TEST_CASE("mutation is an involution and preserves skew-symmetry") {
  std::mt19937 rng(23);
  for (int t = 0; t < 1000; ++t) {
    int n = 2 + (int)(rng() % 4);
    ExchangeMatrix b = random_skew(rng, n, 3);
    int k = (int)(rng() % n);
    ExchangeMatrix m = matrix_mutate(b, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(m.at(i, j) == -m.at(j, i));
    CHECK(matrix_mutate(m, k) == b);
  }
}

TEST_CASE("dynkin shape recognition") {
  CHECK(dynkin_shape(Quiver(2, {{0, 1}}))->front().type == DynkinType::A);
  auto d4 = dynkin_shape(Quiver(4, {{0, 1}, {2, 1}, {3, 1}}));
  REQUIRE(d4.has_value());
  CHECK(d4->front().type == DynkinType::D);
  auto e6 =
      dynkin_shape(Quiver(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}));
  REQUIRE(e6.has_value());
  CHECK(e6->front().type == DynkinType::E6);
  // A cycle is not a Dynkin diagram.
  CHECK(!dynkin_shape(Quiver(3, {{0, 1}, {1, 2}, {2, 0}})).has_value());
}

TEST_CASE("finite type detection") {
  auto r = is_finite_type(a2(), 1000);
  CHECK(r.finite);
  REQUIRE(r.dynkin_member.has_value());
  CHECK(*r.dynkin_member == Quiver(2, {{0, 1}}));

  ExchangeMatrix cyc = quiver_to_matrix(Quiver(3, {{0, 1}, {1, 2}, {2, 0}}));
  auto r3 = is_finite_type(cyc, 1000);
  CHECK(r3.finite);
  REQUIRE(r3.dynkin_member.has_value());
  auto shape = dynkin_shape(*r3.dynkin_member);
  REQUIRE(shape.has_value());
  CHECK(shape->front().type == DynkinType::A);
  CHECK(shape->front().rank == 3);

  ExchangeMatrix kron(2, {0, 2, -2, 0});
  CHECK(!is_finite_type(kron, 100).finite);

  // Markov quiver: infinite type, certified by an entry of magnitude 2.
  ExchangeMatrix markov(3, {0, 2, -2, -2, 0, 2, 2, -2, 0});
  CHECK(!is_finite_type(markov, 100).finite);
}

#include "cluster/json_io.hpp"

TEST_CASE("JSON round trips") {
  Quiver q(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(quiver_from_json(quiver_to_json(q)) == q);
  nlohmann::json j = nlohmann::json::parse(
      R"({"n": 3, "arrows": [[1,2],[2,3],[3,1]]})");
  CHECK(quiver_to_json(quiver_from_json(j)) == j);
  ExchangeMatrix b = quiver_to_matrix(q);
  CHECK(matrix_from_json(matrix_to_json(b)) == b);
  CHECK_THROWS_AS(quiver_from_json(nlohmann::json::parse("{\"n\": 2}")),
                  InvalidQuiver);
}
