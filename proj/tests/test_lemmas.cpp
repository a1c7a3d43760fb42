#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "meyniel/families.hpp"
#include "meyniel/lemmas.hpp"
#include "oracles.hpp"

using namespace meyniel;

TEST_CASE("lemma 1: cycles of every length through a well-connected vertex") {
  // Cycle a=0, b=1; x=2 has all four arcs to it.
  const Digraph d(3, {{0, 1}, {1, 0}, {2, 0}, {0, 2}, {2, 1}, {1, 2}});
  auto cycles = lemma1_cycles_through(d, CycleWitness{{0, 1}}, 2);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].length() == 2);
  CHECK(cycles[1].length() == 3);
  for (const auto& c : cycles) {
    CHECK(is_valid_cycle(d, c));
    CHECK(c.vertex_set().contains(2));
  }
}

TEST_CASE("lemma 1 preconditions") {
  const Digraph kbip = generate(CompleteBipartiteSymmetric{2, 3});
  // 4-cycle 0 2 1 3, off vertex 4 has d(4, C) = 4 < 5.
  CHECK(degree_toward(kbip, 4, VertexSet{0, 1, 2, 3}) == 4);
  CHECK_THROWS_AS(lemma1_cycles_through(kbip, CycleWitness{{0, 2, 1, 3}}, 4), PreconditionError);
  CHECK_THROWS_AS(lemma1_cycles_through(kbip, CycleWitness{{0, 2, 1, 3}}, 2), PreconditionError);
  CHECK_THROWS_AS(lemma1_cycles_through(kbip, CycleWitness{{0, 1}}, 4), PreconditionError);
}

TEST_CASE("lemma 2: insertion positions") {
  // Path a=0 -> b=1, x=2.
  const Digraph fits(3, {{0, 1}, {0, 2}, {2, 1}});
  auto at = lemma2_insert(fits, PathWitness{{0, 1}}, 2);
  REQUIRE(at);
  CHECK(at->index == 1);
  CHECK(insert_at(PathWitness{{0, 1}}, 2, *at) == PathWitness{{0, 2, 1}});

  const Digraph wrong_way(3, {{0, 1}, {2, 0}, {1, 2}});
  CHECK_FALSE(lemma2_insert(wrong_way, PathWitness{{0, 1}}, 2));
  auto h = insertion_hypotheses(wrong_way, PathWitness{{0, 1}}, 2);
  CHECK_FALSE(h.any());

  CHECK_THROWS_AS(lemma2_insert(fits, PathWitness{{0, 1}}, 1), PreconditionError);

  // Smallest position wins: path 0 1 2 3, x=4 fits after 0 and after 2.
  const Digraph twice(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 1}, {2, 4}, {4, 3}});
  CHECK(lemma2_insert(twice, PathWitness{{0, 1, 2, 3}}, 4)->index == 1);
}

TEST_CASE("lemma 2 as a property on random triples") {
  std::mt19937_64 rng(17);
  int covered[3] = {0, 0, 0};
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
    Digraph d = random_digraph(n, 0.3, rng());
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    PathWitness path{{order.begin(), order.begin() + m}};
    for (int i = 0; i + 1 < m; ++i) d.add_arc(path.vertices[i], path.vertices[i + 1]);
    const Vertex x = order[static_cast<std::size_t>(m)];
    // Dense arcs between x and the path so hypotheses are hit often.
    for (Vertex v : path.vertices) {
      if (rng() % 4 != 0) d.add_arc(x, v);
      if (rng() % 4 != 0) d.add_arc(v, x);
    }
    auto h = insertion_hypotheses(d, path, x);
    auto at = lemma2_insert(d, path, x);
    if (h.degree_at_least_m_plus_2) ++covered[0];
    if (h.degree_at_least_m_plus_1_one_end_open) ++covered[1];
    if (h.degree_at_least_m_both_ends_open) ++covered[2];
    if (h.any()) CHECK(at.has_value());
    if (at) {
      CHECK(is_valid_path(d, insert_at(path, x, *at)));
    } else {
      for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        CHECK_FALSE((d.has_arc(path.vertices[i - 1], x) && d.has_arc(x, path.vertices[i])));
      }
    }
  }
  CHECK(covered[0] > 100);
  CHECK(covered[1] > 100);
  CHECK(covered[2] > 10);
}

TEST_CASE("lemma 3: split index") {
  // P = x1 x2 = 0 1, x = 2, and a twin y = 3 with x <-> y.
  const Digraph first(4, {{0, 1}, {2, 3}, {3, 2}, {2, 0}, {0, 2}, {1, 2}, {3, 0}, {0, 3}, {1, 3}});
  CHECK(lemma3_split_index(first, PathWitness{{0, 1}}, 2) == 1);
  CHECK(lemma3_split_index(first, PathWitness{{0, 1}}, 3) == 1);
  const Digraph second(4, {{0, 1}, {2, 3}, {3, 2}, {2, 0}, {2, 1}, {1, 2}, {3, 0}, {3, 1}, {1, 3}});
  CHECK(lemma3_split_index(second, PathWitness{{0, 1}}, 2) == 2);
  CHECK(lemma3_split_index(second, PathWitness{{0, 1}}, 3) == 2);
}

TEST_CASE("lemma 3 preconditions") {
  const std::vector<Arc> base{{0, 1}, {2, 3}, {3, 2}, {2, 0}, {0, 2}, {1, 2}, {3, 0}, {0, 3}, {1, 3}};
  // d(2, V(P)) = 2 != m + 1.
  Digraph low(4, base);
  low.remove_arc(0, 2);
  CHECK_THROWS_AS(lemma3_split_index(low, PathWitness{{0, 1}}, 2), PreconditionError);
  // 0 -> 2 -> 1 is a longer (0,1)-path.
  Digraph longer(4, base);
  longer.add_arc(2, 1);
  longer.remove_arc(1, 2);
  CHECK_THROWS_AS(lemma3_split_index(longer, PathWitness{{0, 1}}, 2), PreconditionError);
  // Off-path vertices 2 and 3 not strongly connected.
  Digraph split(4, base);
  split.remove_arc(3, 2);
  CHECK_THROWS_AS(lemma3_split_index(split, PathWitness{{0, 1}}, 2), PreconditionError);
  CHECK_THROWS_AS(lemma3_split_index(Digraph(4, base), PathWitness{{0, 2}}, 1), PreconditionError);
  CHECK_THROWS_AS(lemma3_split_index(Digraph(4, base), PathWitness{{0, 1}}, 0), PreconditionError);
  // A single off-path vertex (m = p - 1) is outside the lemma.
  const Digraph single(3, {{0, 1}, {2, 0}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(lemma3_split_index(single, PathWitness{{0, 1}}, 2), PreconditionError);
}

TEST_CASE("lemma 3 never fails on digraphs with n <= 4") {
  int instances = 0;
  for (int n = 4; n <= 4; ++n) {
    auto stream = enumerate_all(n);
    while (auto d = stream.next()) {
      for (int m = 2; m <= n - 2; ++m) {
        oracle::for_each_sequence(n, m, [&](const std::vector<Vertex>& seq) {
          PathWitness path{seq};
          if (!is_valid_path(*d, path)) return;
          const VertexSet off = d->vertices() - path.vertex_set();
          for (Vertex z : off)
            if (degree_toward(*d, z, path.vertex_set()) != m + 1) return;
          if (!is_strong_on(*d, off) || !is_longest_path_between_ends(*d, path)) return;
          ++instances;
          for (Vertex x : off) CHECK_NOTHROW(lemma3_split_index(*d, path, x));
        });
      }
    }
  }
  CHECK(instances > 0);
}

TEST_CASE("maximal path extension") {
  const Digraph d(3, {{0, 2}, {0, 1}, {1, 2}});
  auto same = extend_path_maximally(d, PathWitness{{0, 2}}, VertexSet{});
  CHECK(same.path == PathWitness{{0, 2}});
  CHECK(same.leftover.empty());

  auto grown = extend_path_maximally(d, PathWitness{{0, 2}}, VertexSet{1});
  CHECK(grown.path == PathWitness{{0, 1, 2}});
  CHECK(grown.leftover.empty());

  CHECK_THROWS_AS(extend_path_maximally(d, PathWitness{{0, 2}}, VertexSet{2}), PreconditionError);
}

TEST_CASE("maximal extension leaves only uninsertable vertices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    Digraph d = random_digraph(n, 0.45, rng());
    d.add_arc(0, 1);
    PathWitness start{{0, 1}};
    VertexSet pool(static_cast<std::uint32_t>(rng()) & (d.vertices() - VertexSet{0, 1}).bits());
    auto result = extend_path_maximally(d, start, pool);
    CHECK(is_valid_path(d, result.path));
    CHECK(result.path.vertices.front() == 0);
    CHECK(result.path.vertices.back() == 1);
    CHECK((result.path.vertex_set() | result.leftover) == (pool | VertexSet{0, 1}));
    CHECK((result.path.vertex_set() & result.leftover).empty());
    for (Vertex v : result.leftover) CHECK_FALSE(lemma2_insert(d, result.path, v));
  }
}
