#include <doctest.h>

#include <random>

#include "ctube/cluster.hpp"
#include "ctube/errors.hpp"
#include "ctube/tube.hpp"
#include "oracles.hpp"

using namespace ctube;

namespace {

LaurentPoly P(const char* text, std::size_t m) { return parse_laurent(text, m); }

// a_ij = s_ij d_j with s skew-symmetric, so diag(d) a is skew-symmetric.
IntMatrix random_symmetrizable(std::mt19937& rng, std::size_t r, std::vector<int>& d) {
  std::uniform_int_distribution<int> entry(-2, 2), scale(1, 3);
  d.assign(r, 1);
  for (auto& x : d) x = scale(rng);
  IntMatrix a(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      int s = entry(rng);
      a(i, j) = s * d[j];
      a(j, i) = -s * d[i];
    }
  return a;
}

IntMatrix type_c_initial(int n) { return exchange_matrix(initial_maximal_rigid(n)); }

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("matrix mutation examples") {
  CHECK(mutate_matrix(IntMatrix{{0, 1}, {-2, 0}}, 0) == IntMatrix{{0, -1}, {2, 0}});
  CHECK(mutate_matrix(IntMatrix{{0, 1, 0}, {-2, 0, 1}, {0, -1, 0}}, 1) ==
        IntMatrix{{0, -1, 1}, {2, 0, -1}, {-2, 1, 0}});
  IntMatrix a = type_c_initial(5);
  for (std::size_t k = 0; k < a.dim(); ++k) CHECK(mutate_matrix(mutate_matrix(a, k), k) == a);
  CHECK_THROWS_AS(mutate_matrix(a, 4), std::out_of_range);
}

TEST_CASE("matrix mutation agrees with the [x]_+ form and keeps the symmetrizer") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> d;
    IntMatrix a = random_symmetrizable(rng, 4, d);
    REQUIRE(a.is_skew_symmetrized_by(d));
    for (std::size_t k = 0; k < 4; ++k) {
      IntMatrix b = mutate_matrix(a, k);
      CHECK(b == oracle::mutate_plus(a, k));
      CHECK(b.is_skew_symmetrized_by(d));
      CHECK(mutate_matrix(b, k) == a);
    }
  }
}

TEST_CASE("cartan part and symmetrizer") {
  CHECK(cartan_part(IntMatrix{{0, 1}, {-2, 0}}) == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartan_part(IntMatrix{{0, 0}, {0, 0}}) == IntMatrix{{2, 0}, {0, 2}});
  CHECK(cartan_part(type_c_initial(4)) == IntMatrix{{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}});
  auto d = skew_symmetrizer(type_c_initial(5));
  CHECK(d == std::vector<int>{2, 1, 1, 1});
  CHECK(skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}).empty());
}

TEST_CASE("seed validation") {
  CHECK_THROWS_AS(Seed({P("x1", 2)}, IntMatrix{{0, 1}, {-1, 0}}), Error);
  CHECK_THROWS_AS(Seed({P("x1", 2), LaurentPoly(2)}, IntMatrix{{0, 1}, {-1, 0}}), Error);
  CHECK_THROWS_AS(Seed({P("x1", 2), P("x2", 2)}, IntMatrix{{0, 1}, {1, 0}}), Error);
}

TEST_CASE("seed mutation examples") {
  Seed s = initial_seed(IntMatrix{{0, 1}, {-2, 0}});
  CHECK(mutate_seed(s, 1).cluster[1] == P("x1*x2^-1 + x2^-1", 2));
  CHECK(mutate_seed(s, 0).cluster[0] == P("x1^-1*x2^2 + x1^-1", 2));
  Seed r1 = initial_seed(IntMatrix{{0}});
  CHECK(mutate_seed(r1, 0).cluster[0] == P("2*x1^-1", 1));
  for (std::size_t k = 0; k < 2; ++k) CHECK(mutate_seed(mutate_seed(s, k), k) == s);
}

TEST_CASE("canonical seed is permutation invariant") {
  Seed s = mutate_seed(initial_seed(type_c_initial(4)), 1);
  Seed c = canonical_seed(s);
  std::vector<std::size_t> perm{2, 0, 1};
  std::vector<LaurentPoly> cl;
  for (auto i : perm) cl.push_back(s.cluster[i]);
  Seed t(cl, s.matrix.permuted(perm));
  CHECK(canonical_seed(t) == c);
  CHECK(std::is_sorted(c.cluster.begin(), c.cluster.end()));
}

TEST_CASE("exchange graph examples") {
  auto g3 = enumerate_exchange_graph(initial_seed(IntMatrix{{0, 1}, {-2, 0}}));
  CHECK(g3.nodes.size() == 6);
  CHECK(g3.variables.size() == 6);
  auto g4 = enumerate_exchange_graph(initial_seed(type_c_initial(4)));
  CHECK(g4.nodes.size() == 20);
  CHECK(g4.variables.size() == 12);
  auto g1 = enumerate_exchange_graph(initial_seed(IntMatrix{{0}}));
  CHECK(g1.nodes.size() == 2);
  REQUIRE(g1.variables.size() == 2);
  CHECK(g1.variables[0] + g1.variables[1] == P("x1", 1) + P("2*x1^-1", 1));
  CHECK_THROWS_AS(enumerate_exchange_graph(initial_seed(type_c_initial(4)), 5), NodeLimitExceeded);
  // Affine type: the graph is infinite.
  CHECK_THROWS_AS(enumerate_exchange_graph(initial_seed(IntMatrix{{0, 2}, {-2, 0}}), 50), NodeLimitExceeded);
}

TEST_CASE("exchange graph matches the numeric BFS oracle") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    IntMatrix a = type_c_initial(n);
    auto g = enumerate_exchange_graph(initial_seed(a));
    auto pt = oracle::generic_point(n);
    auto num = oracle::numeric_exchange_graph(a, pt);
    CHECK(g.nodes.size() == num.clusters);
    CHECK(g.variables.size() == num.variables.size());
    std::set<mpq_class> values;
    for (const auto& v : g.variables) values.insert(oracle::eval(v, pt));
    CHECK(values == num.variables);
  }
}

TEST_CASE("exchange graph structure") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto g = enumerate_exchange_graph(initial_seed(type_c_initial(n)));
    const std::size_t r = static_cast<std::size_t>(n - 1);
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      REQUIRE(g.neighbors[v].size() == r);
      CHECK(canonical_seed(g.nodes[v]) == g.nodes[v]);
      for (std::size_t k = 0; k < r; ++k) {
        std::size_t w = g.neighbors[v][k];
        CHECK(w != v);
        CHECK(canonical_seed(mutate_seed(g.nodes[v], k)) == g.nodes[w]);
        // The new variable sits somewhere in w; mutating there returns to v.
        bool back = false;
        for (std::size_t k2 = 0; k2 < r; ++k2) back = back || g.neighbors[w][k2] == v;
        CHECK(back);
        degree_sum += 1;
      }
      for (const auto& x : g.nodes[v].cluster) CHECK(x.has_positive_coefficients());
    }
    CHECK(g.edges.size() * 2 == degree_sum);
    for (const auto& e : g.edges) CHECK(e.from < e.to);
  }
}

TEST_CASE("serial and parallel BFS agree") {
  for (int n = 2; n <= 6; ++n) {
    auto s0 = initial_seed(type_c_initial(n));
    auto a = enumerate_exchange_graph(s0, kDefaultNodeLimit, Execution::serial);
    auto b = enumerate_exchange_graph(s0, kDefaultNodeLimit, Execution::parallel);
    CHECK(a.nodes == b.nodes);
    CHECK(a.neighbors == b.neighbors);
    CHECK(a.variables == b.variables);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      CHECK(a.edges[i].from == b.edges[i].from);
      CHECK(a.edges[i].dir == b.edges[i].dir);
      CHECK(a.edges[i].to == b.edges[i].to);
    }
  }
}

}  // TEST_SUITE
