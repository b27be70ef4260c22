#include "biface/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "biface/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace biface;

namespace {

ConceptLattice lattice_of(const BipartiteGraph& g) {
  return build_lattice(to_formal_context(g));
}

std::set<oracle::OracleConcept> origins_as_set(const ConceptLattice& lat,
                                               const std::vector<FaceBiclique>& fbs) {
  std::set<oracle::OracleConcept> out;
  for (const auto& fb : fbs) {
    const auto& c = lat.concept_at(fb.origin);
    out.insert({c.extent.to_vector(), c.intent.to_vector()});
  }
  return out;
}

}  // namespace

TEST_CASE("ranking_of orders by score descending, index ascending on ties") {
  CHECK(ranking_of({0.5, 2.0, 0.5, 1.0}) == std::vector<std::size_t>{1, 3, 0, 2});
  CHECK(ranking_of({}) == std::vector<std::size_t>{});
}

TEST_CASE("refinement of the worked airline biclique") {
  const FormalContext ctx = to_formal_context(fixtures::airline());
  ConceptLattice lat = build_lattice(ctx);
  std::size_t q = lat.index_of_extent(
      ctx.object_set({"AirCanada", "Mexicana", "ThaiAirways", "UnitedAirlines"}));

  FaceBiclique fb = refine_biclique(lat, q);
  // the single intensional face {Caribbean} marks Caribbean non-influential
  CHECK(fb.refined_intent == ctx.attribute_set({"LatinAmerica", "USA"}));
  // the two extensional faces are disjoint, so no airline is removed
  CHECK(fb.refined_extent == lat.concept_at(q).extent);
}

TEST_CASE("refine_biclique corner cases") {
  SUBCASE("non-biclique concepts are rejected") {
    auto g = fixtures::airline();
    ConceptLattice lat = lattice_of(g);
    CHECK_THROWS_AS(refine_biclique(lat, lat.bottom()), InvalidInput);  // empty extent
    CHECK_THROWS_AS(refine_biclique(lat, lat.size()), InvalidInput);
  }

  SUBCASE("sides of size one and coverless sides are kept") {
    ConceptLattice lat = lattice_of(fixtures::complete(2, 2));
    REQUIRE(lat.size() == 1);
    FaceBiclique fb = refine_biclique(lat, 0);
    CHECK(fb.refined_extent.count() == 2);
    CHECK(fb.refined_intent.count() == 2);
  }
}

TEST_CASE("face bicliques are exactly the maximal bicliques") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(rng, 8, 8);
    ConceptLattice lat = lattice_of(g);
    CHECK(origins_as_set(lat, face_bicliques(lat)) == oracle::maximal_bicliques(g));
  }
}

TEST_CASE("refinement removes exactly the nodes common to every face") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = oracle::random_graph(rng, 8, 8);
    ConceptLattice lat = lattice_of(g);
    for (const auto& fb : face_bicliques(lat)) {
      const Concept& c = lat.concept_at(fb.origin);
      if (c.extent.count() > 1) {
        auto faces = extensional_faces(lat, fb.origin);
        IndexSet removed = c.extent.minus(fb.refined_extent);
        for (const auto& f : faces) CHECK(removed.is_subset_of(f));
        // and any extent node lying in every face was removed
        c.extent.for_each([&](std::size_t u) {
          bool in_all = !faces.empty();
          for (const auto& f : faces)
            if (!f.test(u)) in_all = false;
          CHECK(fb.refined_extent.test(u) == !in_all);
        });
      } else {
        CHECK(fb.refined_extent == c.extent);
      }
    }
  }
}

TEST_CASE("face bridges on the airline graph") {
  const FormalContext ctx = to_formal_context(fixtures::airline());
  ConceptLattice lat = build_lattice(ctx);
  FaceBridgeSet g1 = face1_bridges(lat);

  auto has_bridge = [&](const std::string& airline, const std::string& dest) {
    const std::size_t u = ctx.object_index(airline);
    const std::size_t m = ctx.attribute_index(dest);
    return std::any_of(g1.face1.begin(), g1.face1.end(),
                       [&](const FaceBridge& b) { return b.terminal == u && b.other == m; });
  };
  CHECK(has_bridge("BritishMidland", "Europe"));
  CHECK(has_bridge("AnsettAustralia", "AsiaPacific"));
}

TEST_CASE("single edge yields no face bridges and BF = 2 everywhere") {
  // the one concept's generator family is {{}}: no singleton, no bridge,
  // so both bridge ratios default to 0 and both nodes score 1 + 1
  auto g = fixtures::single_edge();
  ConceptLattice lat = lattice_of(g);
  CHECK(face1_bridges(lat).face1.empty());
  CHECK(face2_bridges(lat).face2.empty());
  auto [t1, t2] = biface_centrality(g);
  CHECK(t1.scores == std::vector<double>{2.0});
  CHECK(t2.scores == std::vector<double>{2.0});
}

TEST_CASE("BF on complete bipartite graphs is uniform 2") {
  auto g = fixtures::complete(2, 2);
  auto [t1, t2] = biface_centrality(g);
  CHECK(t1.scores == std::vector<double>{2.0, 2.0});
  CHECK(t2.scores == std::vector<double>{2.0, 2.0});
}

TEST_CASE("BF matches the straight-line oracle") {
  std::mt19937_64 rng(41);
  std::vector<BipartiteGraph> graphs;
  for (int trial = 0; trial < 20; ++trial) graphs.push_back(oracle::random_graph(rng, 8, 8));
  graphs.push_back(fixtures::airline());
  graphs.push_back(fixtures::path3());

  for (const auto& g : graphs) {
    for (bool eq : {false, true}) {
      const DenominatorMode mode = eq ? DenominatorMode::equation : DenominatorMode::algorithm;
      auto [t1, t2] = biface_centrality(g, mode);
      auto ref = oracle::biface_scores(g, eq);
      REQUIRE(t1.scores.size() == ref.type1.size());
      REQUIRE(t2.scores.size() == ref.type2.size());
      for (std::size_t i = 0; i < ref.type1.size(); ++i)
        CHECK(t1.scores[i] == doctest::Approx(ref.type1[i]).epsilon(1e-12));
      for (std::size_t j = 0; j < ref.type2.size(); ++j)
        CHECK(t2.scores[j] == doctest::Approx(ref.type2[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("BF scores stay in [0, 2]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = oracle::random_graph(rng, 9, 9);
    auto [t1, t2] = biface_centrality(g);
    for (double s : t1.scores) CHECK((s >= 0.0 && s <= 2.0));
    for (double s : t2.scores) CHECK((s >= 0.0 && s <= 2.0));
  }
}

TEST_CASE("denominator mode rescales scores but never reorders them") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_graph(rng, 9, 9);
    auto [a1, a2] = biface_centrality(g, DenominatorMode::algorithm);
    auto [e1, e2] = biface_centrality(g, DenominatorMode::equation);
    CHECK(a1.ranking == e1.ranking);
    CHECK(a2.ranking == e2.ranking);
  }
}

TEST_CASE("BF is equivariant under node relabeling") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    auto g = oracle::random_graph(rng, 8, 8);
    std::vector<std::size_t> perm(g.type1_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);  // perm[i] = new index of old i

    std::vector<std::string> labels(g.type1_count());
    for (std::size_t i = 0; i < g.type1_count(); ++i) labels[perm[i]] = g.type1_labels()[i];
    std::vector<Edge> edges;
    for (const auto& [i, j] : g.edges()) edges.emplace_back(perm[i], j);
    BipartiteGraph h(labels, g.type2_labels(), edges);

    auto [g1, g2] = biface_centrality(g);
    auto [h1, h2] = biface_centrality(h);
    for (std::size_t i = 0; i < g.type1_count(); ++i)
      CHECK(h1.scores[perm[i]] == doctest::Approx(g1.scores[i]).epsilon(1e-12));
    for (std::size_t j = 0; j < g.type2_count(); ++j)
      CHECK(h2.scores[j] == doctest::Approx(g2.scores[j]).epsilon(1e-12));
  }
}

TEST_CASE("edgeless graph is rejected") {
  BipartiteGraph g({"a"}, {"x"}, {});
  CHECK_THROWS_AS(biface_centrality(g), InvalidInput);
}
