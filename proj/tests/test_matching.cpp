#include <sstream>

#include "csbm/matching.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace csbm;
using test::make_graph;
using test::random_graph;
using test::random_permutation;

TEST_CASE("is_kcore_matching") {
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph empty3(3);
  const Matching id3 = Matching::identity(3);

  CHECK(is_kcore_matching(Matching(3), triangle, triangle, 5));  // vacuous
  CHECK(is_kcore_matching(id3, triangle, triangle, 2));
  CHECK_FALSE(is_kcore_matching(id3, triangle, triangle, 3));
  CHECK_FALSE(is_kcore_matching(id3, triangle, empty3, 1));
}

TEST_CASE("kcore_matching_exact on canonical graphs") {
  const Graph k4 = make_graph(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Matching m = kcore_matching_exact(k4, k4, 3);
  CHECK(m.size() == 4);
  CHECK(is_kcore_matching(m, k4, k4, 3));

  const Graph empty4(4);
  CHECK(kcore_matching_exact(empty4, k4, 1).empty());

  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const Matching mt = kcore_matching_exact(triangle, triangle, 2);
  CHECK(mt.size() == 3);
  CHECK(is_kcore_matching(mt, triangle, triangle, 2));

  CHECK_THROWS(kcore_matching_exact(random_graph(9, 500, 1),
                                    random_graph(9, 500, 2), 2));
}

TEST_CASE("exact matcher output is maximal and valid") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 6;
    const Graph g1 = random_graph(n, 500, seed);
    const Graph g2 = random_graph(n, 500, seed + 100);
    for (int k = 1; k <= 2; ++k) {
      const Matching m = kcore_matching_exact(g1, g2, k);
      CHECK(is_kcore_matching(m, g1, g2, k));
    }
  }
}

TEST_CASE("kcore_matching_oracle") {
  const ModelParams params(120, 20, 4, 1.0);
  const CorrelatedPair pair = generate_subsampling(params, 7);
  const Matching m = kcore_matching_oracle(pair, 5);
  CHECK(is_kcore_matching(m, pair.g1, pair.g2, 5));
  for (int i : m.members()) CHECK(m.image_of(i) == pair.pi_star[i]);

  // monotone in k
  const Matching m6 = kcore_matching_oracle(pair, 6);
  for (int i : m6.members()) CHECK(m.contains(i));

  // s = 0: intersection empty
  const ModelParams zero(50, 8, 2, 0.0);
  CHECK(kcore_matching_oracle(generate_subsampling(zero, 7), 1).empty());
}

TEST_CASE("f_statistic") {
  const Graph edge = make_graph(2, {{0, 1}});
  const std::vector<int> id{0, 1};

  Matching swap(2);
  swap.insert(0, 1);
  swap.insert(1, 0);
  CHECK(f_statistic(swap, edge, edge, id) == 2);

  const Matching correct = Matching::identity(2);
  CHECK(f_statistic(correct, edge, edge, id) == 0);

  const Graph empty2(2);
  CHECK(f_statistic(swap, edge, empty2, id) == 0);
}

TEST_CASE("maximal_extension") {
  const std::vector<int> id{0, 1, 2};

  const Matching full = maximal_extension(Matching(3), id);
  CHECK(full.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(full.image_of(i) == i);

  const Matching again = maximal_extension(full, id);
  CHECK(again.size() == 3);

  Matching partial(3);
  partial.insert(0, 1);
  const Matching ext = maximal_extension(partial, id);
  CHECK(ext.size() == 2);
  CHECK(ext.image_of(0) == 1);
  CHECK(ext.image_of(2) == 2);
  CHECK_FALSE(ext.contains(1));  // image 1 is taken

  // f never decreases under extension
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 7;
    const Graph g1 = random_graph(n, 400, seed);
    const Graph g2 = random_graph(n, 400, seed + 50);
    const std::vector<int> pi = random_permutation(n, seed);
    Matching m(n);
    m.insert(0, static_cast<int>(seed % n));
    const Matching ext2 = maximal_extension(m, pi);
    CHECK(f_statistic(ext2, g1, g2, pi) >= f_statistic(m, g1, g2, pi));
    for (int i = 0; i < n; ++i) {
      if (!ext2.contains(i)) CHECK(ext2.image_used(pi[i]));
    }
  }
}

TEST_CASE("matching serialization") {
  Matching m(5);
  m.insert(1, 3);
  m.insert(4, 0);
  std::stringstream buf;
  write_matching(buf, m);
  CHECK(buf.str() == "1 3\n4 0\n");
  const Matching back = read_matching(buf, 5);
  CHECK(back.size() == 2);
  CHECK(back.image_of(1) == 3);
  CHECK(back.image_of(4) == 0);
}
