#include "biface/sir.hpp"

#include <cmath>
#include <random>

#include "biface/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace biface;

TEST_CASE("deterministic cascades at beta = 1") {
  SUBCASE("complete bipartite graph saturates") {
    SirConfig cfg{1.0, 5, 3, 9};
    CHECK(sir_spread(fixtures::complete(2, 2), NodeType::type1, 0, cfg) == 4.0);
  }

  SUBCASE("path u1-v-u2, horizon 1") {
    SirConfig cfg{1.0, 1, 2, 9};
    CHECK(sir_spread(fixtures::path3(), NodeType::type2, 0, cfg) == 3.0);  // v hits both
    CHECK(sir_spread(fixtures::path3(), NodeType::type1, 0, cfg) == 2.0);  // u1 hits v only
  }

  SUBCASE("path u1-v-u2, horizon 2 reaches everything") {
    SirConfig cfg{1.0, 2, 2, 9};
    CHECK(sir_spread(fixtures::path3(), NodeType::type1, 0, cfg) == 3.0);
  }
}

TEST_CASE("vanishing beta leaves only the seed infected") {
  SirConfig cfg{1e-12, 10, 50, 4};
  CHECK(sir_spread(fixtures::davis(), NodeType::type1, 0, cfg) == doctest::Approx(1.0));
}

TEST_CASE("runs are reproducible and seed-sensitive") {
  auto g = fixtures::davis();
  SirConfig cfg{0.1, 10, 200, 123};
  const double a = sir_spread(g, NodeType::type1, 3, cfg);
  CHECK(sir_spread(g, NodeType::type1, 3, cfg) == a);
  cfg.rng_seed = 124;
  CHECK(sir_spread(g, NodeType::type1, 3, cfg) != a);
}

TEST_CASE("star center spreads farther than a leaf") {
  auto star = fixtures::complete(1, 6);
  SirConfig cfg{0.3, 10, 500, 17};
  const double center = sir_spread(star, NodeType::type1, 0, cfg);
  const double leaf = sir_spread(star, NodeType::type2, 0, cfg);
  CHECK(center > leaf);
}

TEST_CASE("spreading_ranking evaluates every node of the requested type") {
  auto g = fixtures::path3();
  SirConfig cfg{1.0, 1, 2, 9};
  auto out = spreading_ranking(g, NodeType::type1, cfg);
  CHECK(out.efficiency == std::vector<double>{2.0, 2.0});
  CHECK(out.node_type == NodeType::type1);
}

TEST_CASE("configuration validation") {
  auto g = fixtures::path3();
  CHECK_THROWS_AS(sir_spread(g, NodeType::type1, 0, {0.0, 10, 10, 1}), InvalidInput);
  CHECK_THROWS_AS(sir_spread(g, NodeType::type1, 0, {1.5, 10, 10, 1}), InvalidInput);
  CHECK_THROWS_AS(sir_spread(g, NodeType::type1, 0, {0.5, 0, 10, 1}), InvalidInput);
  CHECK_THROWS_AS(sir_spread(g, NodeType::type1, 0, {0.5, 10, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(sir_spread(g, NodeType::type1, 7, {0.5, 10, 10, 1}), InvalidInput);
}

TEST_CASE("kendall tau on fixed lists") {
  CHECK(kendall_tau({1, 2, 3}, {10, 20, 30}) == doctest::Approx(1.0));
  CHECK(kendall_tau({1, 2, 3}, {30, 20, 10}) == doctest::Approx(-1.0));
  CHECK(kendall_tau({1, 2, 3}, {1, 3, 2}) == doctest::Approx(1.0 / 3.0));
  // a tie contributes zero to the numerator but stays in the denominator
  CHECK(kendall_tau({1, 1, 2}, {1, 2, 3}) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(kendall_tau({1.0}, {2.0}), InvalidInput);
  CHECK_THROWS_AS(kendall_tau({1, 2}, {1, 2, 3}), InvalidInput);
}

TEST_CASE("kendall tau properties on random lists") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> val(0, 6);  // small range forces ties
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
    std::vector<double> x(n), y(n), neg_y(n), exp_y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = val(rng);
      y[i] = val(rng);
      neg_y[i] = -y[i];
      exp_y[i] = std::exp(y[i]);
    }
    const double tau = kendall_tau(x, y);
    CHECK(tau == doctest::Approx(oracle::kendall_pairs(x, y)));
    CHECK(kendall_tau(x, neg_y) == doctest::Approx(-tau));
    CHECK(kendall_tau(x, exp_y) == doctest::Approx(tau));  // strictly monotone map
    CHECK((tau >= -1.0 && tau <= 1.0));
  }
}

TEST_CASE("average_tau") {
  CHECK(average_tau(0.2, 0.4) == doctest::Approx(0.3));
  CHECK(average_tau(-1.0, 1.0) == doctest::Approx(0.0));
}
