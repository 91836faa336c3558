#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <random>

#include "graph_pool.hpp"
#include "leafsearch/error.hpp"
#include "leafsearch/gadgets.hpp"
#include "leafsearch/oracle.hpp"

using namespace leafsearch;
using namespace leafsearch::gadgets;

namespace {

int min_internal(const Graph& g, Paradigm p) { return g.n() - oracle::brute_leaf_range(g, p).max; }
int max_internal(const Graph& g, Paradigm p) { return g.n() - oracle::brute_leaf_range(g, p).min; }

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST(SetCover, Examples) {
  auto out = set_cover_to_split(2, {{0}, {1}, {0, 1}});
  EXPECT_EQ(out.graph.n(), 5);
  EXPECT_EQ(out.roles.size(), 5u);
  EXPECT_EQ(out.roles[2], "set:2");
  EXPECT_TRUE(is_split(out.graph));
  EXPECT_EQ(min_set_cover(2, {{0}, {1}, {0, 1}}), 1);
  for (Paradigm p : {Paradigm::GS, Paradigm::BFS, Paradigm::LBFS}) EXPECT_EQ(min_internal(out.graph, p), 1);

  // Element 1 lies in both sets, so this family is rejected.
  EXPECT_EQ(kind_of([] { set_cover_to_split(3, {{0, 1}, {1, 2}}); }), ErrorKind::AssumptionViolated);
  auto two = set_cover_to_split(3, {{0, 1}, {1, 2}, {2}});
  EXPECT_EQ(min_set_cover(3, {{0, 1}, {1, 2}, {2}}), 2);
  EXPECT_EQ(min_internal(two.graph, Paradigm::BFS), 2);
}

TEST(SetCover, Preconditions) {
  EXPECT_EQ(kind_of([] { set_cover_to_split(1, {{0}}); }), ErrorKind::AssumptionViolated);
  EXPECT_EQ(kind_of([] { set_cover_to_split(3, {{0}, {1}}); }), ErrorKind::AssumptionViolated);
  EXPECT_EQ(kind_of([] { set_cover_to_split(2, {{0}, {5}}); }), ErrorKind::AssumptionViolated);
}

TEST(SetCover, RandomRoundTrips) {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 15) {
    const int u = 2 + static_cast<int>(rng() % 3), s = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> sets(s);
    for (auto& w : sets)
      for (int e = 0; e < u; ++e)
        if (rng() % 2) w.push_back(e);
    std::optional<ReductionOutput> built;
    try {
      built = set_cover_to_split(u, sets);
    } catch (const Error&) {
      continue;
    }
    const ReductionOutput& out = *built;
    ++done;
    EXPECT_TRUE(is_split(out.graph));
    const int cover = min_set_cover(u, sets);
    for (Paradigm p : {Paradigm::GS, Paradigm::BFS, Paradigm::LBFS}) EXPECT_EQ(min_internal(out.graph, p), cover);
  }
}

TEST(Grundy, Examples) {
  auto two = grundy_to_split(2, 2, {{0, 0}, {1, 1}});
  EXPECT_EQ(two.graph.n(), 5);
  EXPECT_EQ(two.roles[2], "r");
  EXPECT_TRUE(is_split(two.graph));
  EXPECT_EQ(longest_one_sided_total_sequence(2, 2, {{0, 0}, {1, 1}}), 2);
  EXPECT_EQ(max_internal(two.graph, Paradigm::GS), 3);
  EXPECT_EQ(max_internal(two.graph, Paradigm::BFS), 3);

  auto one = grundy_to_split(1, 1, {{0, 0}});
  EXPECT_EQ(longest_one_sided_total_sequence(1, 1, {{0, 0}}), 1);
  EXPECT_EQ(max_internal(one.graph, Paradigm::GS), 2);

  // A shared neighbour can be claimed only once.
  EXPECT_EQ(longest_one_sided_total_sequence(2, 1, {{0, 0}, {1, 0}}), 1);
}

TEST(Grundy, Preconditions) {
  EXPECT_EQ(kind_of([] { grundy_to_split(2, 1, {{0, 0}}); }), ErrorKind::AssumptionViolated);
  EXPECT_EQ(kind_of([] { grundy_to_split(1, 1, {{0, 0}, {0, 0}}); }), ErrorKind::AssumptionViolated);
  EXPECT_EQ(kind_of([] { grundy_to_split(1, 1, {{0, 3}}); }), ErrorKind::AssumptionViolated);
}

TEST(Sat3, SingleClause) {
  auto out = sat3_to_weakly_chordal({{1, 2, 3}}, 3);
  EXPECT_EQ(out.graph.n(), 18);
  EXPECT_EQ(out.graph.m(), 48);
  EXPECT_EQ(out.roles[0], "literal:1");
  EXPECT_EQ(out.roles[3], "literal:-1");
  EXPECT_TRUE(oracle::is_weakly_chordal(out.graph));
  EXPECT_TRUE(oracle::brute_find_internal(out.graph, Paradigm::LBFS, 3, 3).has_value());
}

TEST(Sat3, LongerPath) {
  auto out = sat3_to_weakly_chordal({{1, -2, 3}}, 5);
  EXPECT_EQ(out.graph.n(), 18 + 3);
  EXPECT_TRUE(oracle::is_weakly_chordal(out.graph));
  EXPECT_EQ(out.roles.back(), "path:3");
}

TEST(Sat3, Malformed) {
  EXPECT_EQ(kind_of([] { sat3_to_weakly_chordal({{1, 1, 2}}, 3); }), ErrorKind::MalformedClause);
  EXPECT_EQ(kind_of([] { sat3_to_weakly_chordal({{0, 1, 2}}, 3); }), ErrorKind::MalformedClause);
  EXPECT_EQ(kind_of([] { sat3_to_weakly_chordal({{1, 2, 3}}, 2); }), ErrorKind::BadParameter);
}

TEST(Sat3, Satisfiability) {
  EXPECT_TRUE(satisfiable({{1, 2, 3}, {-1, -2, -3}}, 3));
  std::vector<Clause> all;
  for (int mask = 0; mask < 8; ++mask)
    all.push_back({mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3});
  EXPECT_FALSE(satisfiable(all, 3));
  all.pop_back();
  EXPECT_TRUE(satisfiable(all, 3));
}

TEST(Families, Sizes) {
  Graph t2 = path_of_triangles(2);
  EXPECT_EQ(t2.n(), 5);
  EXPECT_EQ(t2.m(), 6);
  EXPECT_EQ(path_of_triangles(4).n(), 9);
  Graph l2 = star_of_ladders(2);
  EXPECT_EQ(l2.n(), 9);
  EXPECT_EQ(oracle::brute_spanning_leaf_range(l2).max, 4);
  EXPECT_LE(oracle::brute_leaf_range(l2, Paradigm::BFS).max, 6);
  EXPECT_EQ(star_of_ladders(3).n(), 19);
  EXPECT_EQ(complete(4).m(), 6);
  EXPECT_EQ(cycle(5).m(), 5);
  EXPECT_EQ(star(3).n(), 4);
  EXPECT_EQ(gen_family("path", 4).m(), 3);
  EXPECT_EQ(kind_of([] { gen_family("ladder", 3); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { star_of_ladders(1); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { path_of_triangles(0); }), ErrorKind::BadParameter);
}

TEST(IsSplit, Examples) {
  EXPECT_TRUE(is_split(complete(4)));
  EXPECT_TRUE(is_split(path(4)));
  EXPECT_TRUE(is_split(star(5)));
  EXPECT_FALSE(is_split(cycle(4)));
  EXPECT_FALSE(is_split(cycle(5)));
  EXPECT_FALSE(is_split(path(5)));
}
