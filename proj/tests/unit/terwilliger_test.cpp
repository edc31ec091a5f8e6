#include <gtest/gtest.h>

#include <random>

#include "drgtk/drgtk.hpp"
#include "support/oracles.hpp"

using namespace drgtk;
namespace dt = drgtk::testing;

namespace {

Graph named(const char* name) { return build(NamedGraph::parse(name)); }

// 4-cycle 0-1-2-3 with a pendant 4 on vertex 0.
Graph square_with_pendant() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }

}  // namespace

TEST(MuWellDefined, KnownValues) {
  EXPECT_EQ(*mu_well_defined(named("petersen")), 1);
  EXPECT_EQ(*mu_well_defined(named("icosahedron")), 2);
  EXPECT_EQ(*mu_well_defined(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})), 1);
  EXPECT_EQ(*mu_well_defined(dt::cycle_graph(4)), 2);
}

TEST(MuWellDefined, DeviantPair) {
  const auto r = mu_well_defined(square_with_pendant());
  ASSERT_FALSE(r.ok());
  const auto& w = r.error();
  EXPECT_NE(w.expected, w.found);
  const Graph g = square_with_pendant();
  EXPECT_EQ(static_cast<std::int64_t>(g.common_neighbor_count(w.u, w.w)), w.found);
  EXPECT_FALSE(g.adjacent(w.u, w.w));
}

TEST(MuWellDefined, PreconditionsThrow) {
  EXPECT_THROW(mu_well_defined(named("complete(5)")), PreconditionError);
  EXPECT_THROW(mu_well_defined(named("disjoint_cliques(2,3)")), PreconditionError);
}

TEST(Terwilliger, Examples) {
  const auto ico = is_terwilliger(named("icosahedron"));
  EXPECT_TRUE(ico.is_terwilliger);
  EXPECT_EQ(ico.mu, 2);
  EXPECT_FALSE(ico.witness.has_value());

  const auto hs = is_terwilliger(named("hoffman_singleton"));
  EXPECT_TRUE(hs.is_terwilliger);
  EXPECT_EQ(hs.mu, 1);

  EXPECT_TRUE(is_terwilliger(named("doro")).is_terwilliger);
  EXPECT_TRUE(is_terwilliger(named("conway_smith")).is_terwilliger);
}

TEST(Terwilliger, SquareHasQuadrangleWitness) {
  const Graph g = dt::cycle_graph(4);
  const auto v = is_terwilliger(g);
  EXPECT_FALSE(v.is_terwilliger);
  ASSERT_TRUE(v.witness.has_value());
  const auto& w = *v.witness;
  EXPECT_EQ(w.kind, TerwilligerWitness::Kind::NonCliqueMu);
  // u-y-w-z is an induced 4-cycle
  EXPECT_TRUE(g.adjacent(w.u, w.y) && g.adjacent(w.y, w.w) && g.adjacent(w.w, w.z) && g.adjacent(w.z, w.u));
  EXPECT_FALSE(g.adjacent(w.u, w.w));
  EXPECT_FALSE(g.adjacent(w.y, w.z));
}

TEST(Terwilliger, DeviantMuIsNotTerwilliger) {
  const auto v = is_terwilliger(square_with_pendant());
  EXPECT_FALSE(v.is_terwilliger);
  EXPECT_FALSE(v.mu.has_value());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, TerwilligerWitness::Kind::DeviantMu);
}

TEST(Terwilliger, FindInducedQuadrangle) {
  const auto q = find_induced_quadrangle(dt::rook_graph(3, 3));
  ASSERT_TRUE(q.has_value());
  const Graph g = dt::rook_graph(3, 3);
  const auto [a, b, c, d] = *q;
  EXPECT_TRUE(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a));
  EXPECT_FALSE(g.adjacent(a, c) || g.adjacent(b, d));
  EXPECT_FALSE(find_induced_quadrangle(named("petersen")).has_value());
}

TEST(Terwilliger, EquivalentToQuadrangleFreeOnRandomCorpus) {
  std::mt19937_64 rng(101);
  const auto corpus = dt::mu_well_defined_corpus(rng, 100);
  int yes = 0, no = 0;
  for (const Graph& g : corpus) {
    const auto v = is_terwilliger(g);
    ASSERT_TRUE(v.mu.has_value());
    EXPECT_EQ(*v.mu, dt::brute_mu(g));
    EXPECT_EQ(v.is_terwilliger, !dt::brute_has_induced_quadrangle(g));
    (v.is_terwilliger ? yes : no)++;
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 10);
}

TEST(LocalMuDescent, HoldsOnBundledGraphs) {
  EXPECT_TRUE(local_mu_descent_check(named("icosahedron")));
  EXPECT_TRUE(local_mu_descent_check(named("doro")));
  EXPECT_TRUE(local_mu_descent_check(named("conway_smith")));
}

TEST(LocalMuDescent, PreconditionsThrow) {
  EXPECT_THROW(local_mu_descent_check(named("petersen")), PreconditionError);  // mu = 1
  EXPECT_THROW(local_mu_descent_check(dt::cycle_graph(4)), PreconditionError);  // not Terwilliger
}

TEST(Decompose, TwinFreeGraphIsItsOwnQuotient) {
  const Graph p = named("pentagon");
  const auto d = clique_extension_decompose(p);
  EXPECT_EQ(d.alpha, 1u);
  EXPECT_EQ(d.quotient, p);
}

TEST(Decompose, ExtensionOfPetersen) {
  const Graph p = named("petersen");
  const auto d = clique_extension_decompose(alpha_clique_extension(p, 3));
  EXPECT_EQ(d.alpha, 3u);
  EXPECT_EQ(d.quotient, p);  // classes numbered by smallest member keep the order
  EXPECT_EQ(d.class_map[5], 1u);
}

TEST(Decompose, CompleteGraphCollapses) {
  const auto d = clique_extension_decompose(named("complete(6)"));
  EXPECT_EQ(d.alpha, 6u);
  EXPECT_EQ(d.quotient.order(), 1u);
}

TEST(Decompose, NonUniformClassesGiveAlphaOne) {
  // triangle 0,1,2 plus pendant 3 on 2: classes {0,1}, {2}, {3}
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const auto d = clique_extension_decompose(g);
  EXPECT_EQ(d.alpha, 1u);
  EXPECT_EQ(d.quotient, g);
}

TEST(Decompose, RoundTripOnTwinFreeGraphs) {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 120 && checked < 40; ++trial) {
    const Graph g = dt::random_graph(rng, 5 + trial % 3, 0.5);
    if (clique_extension_decompose(g).alpha != 1) continue;
    bool twin_free = true;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex w = u + 1; w < g.order(); ++w) twin_free = twin_free && g.closed_neighbors(u) != g.closed_neighbors(w);
    if (!twin_free) continue;
    ++checked;
    for (std::size_t alpha = 1; alpha <= 4; ++alpha) {
      const auto d = clique_extension_decompose(dt::shuffled(rng, alpha_clique_extension(g, alpha)));
      EXPECT_EQ(d.alpha, alpha);
      EXPECT_EQ(dt::brute_canonical_form(d.quotient), dt::brute_canonical_form(g));
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Decompose, UniformTwinClassesMultiply) {
  // G = ext(H, t) for twin-free H; extending G by α' gives twin classes of size tα'.
  const Graph h = named("pentagon");
  for (std::size_t t : {2u, 3u})
    for (std::size_t a : {1u, 2u}) {
      const auto d = clique_extension_decompose(alpha_clique_extension(alpha_clique_extension(h, t), a));
      EXPECT_EQ(d.alpha, t * a);
      EXPECT_TRUE(are_isomorphic(d.quotient, h));
    }
}

TEST(IsLocally, Examples) {
  EXPECT_TRUE(is_locally(named("icosahedron"), named("pentagon")));
  EXPECT_TRUE(is_locally(named("petersen"), Graph::from_edge_list(3, {})));
  EXPECT_TRUE(is_locally(named("conway_smith"), named("petersen")));
  EXPECT_FALSE(is_locally(named("petersen"), named("pentagon")));
  EXPECT_FALSE(is_locally(dt::rook_graph(3, 3), dt::cycle_graph(4)));
}

TEST(IsLocally, ImpliesDegree) {
  std::mt19937_64 rng(4);
  const std::vector<Graph> corpus = {named("icosahedron"), named("doro"), named("petersen"), dt::rook_graph(3, 3),
                                     dt::cycle_graph(7), dt::kneser2(6)};
  for (const Graph& g : corpus) {
    const Graph delta = local_graph(g, 0).graph;
    if (is_locally(g, delta)) {
      for (auto d : g.degrees()) EXPECT_EQ(d, delta.order());
    }
    EXPECT_TRUE(is_locally(dt::shuffled(rng, g), delta));
  }
}

TEST(Fsr, Recognizes) {
  EXPECT_EQ(*recognize_fsr(named("pentagon")), (FsrShape{1, 2}));
  EXPECT_EQ(*recognize_fsr(named("petersen")), (FsrShape{1, 3}));
  EXPECT_EQ(*recognize_fsr(named("hoffman_singleton")), (FsrShape{1, 7}));
}

TEST(Fsr, RejectsWithReason) {
  const auto ico = recognize_fsr(named("icosahedron"));
  ASSERT_FALSE(ico.ok());
  EXPECT_NE(ico.error().find("diameter"), std::string::npos);
  const auto rook = recognize_fsr(dt::rook_graph(3, 3));
  ASSERT_FALSE(rook.ok());
  EXPECT_NE(rook.error().find("mu"), std::string::npos);
  EXPECT_FALSE(recognize_fsr(named("complete(4)")).ok());
  EXPECT_THROW(recognize_fsr(named("disjoint_cliques(2,2)")), PreconditionError);
}

TEST(Fsr, AcceptedShapesSatisfyRatio) {
  std::mt19937_64 rng(9);
  std::vector<Graph> corpus = {named("pentagon"), named("petersen"), named("hoffman_singleton"), named("icosahedron"),
                               dt::kneser2(7), dt::rook_graph(3, 3)};
  for (int i = 0; i < 60; ++i) corpus.push_back(dt::random_graph(rng, 5 + i % 6, 0.4));
  int accepted = 0;
  for (const Graph& g : corpus) {
    if (!dt::is_connected(g)) continue;
    const auto f = recognize_fsr(g);
    if (!f) continue;
    ++accepted;
    EXPECT_LE(f->s + 1, f->r);
    const auto p = amply_regular_params(g);
    EXPECT_EQ(p->k, f->s * f->r);
  }
  EXPECT_GE(accepted, 3);
}
