#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jds/maximality.hpp"

using namespace jds;

namespace {

std::vector<RationalPoint> with_johnson(const Parameters &p, const std::vector<RationalPoint> &added) {
  auto pts = johnson_points(p);
  pts.insert(pts.end(), added.begin(), added.end());
  return pts;
}

ClassifyOptions quick(std::uint64_t budget = 200000) {
  ClassifyOptions o;
  o.budget = budget;
  return o;
}

}  // namespace

TEST_CASE("build_universe examples") {
  const auto u92 = build_universe(Parameters(9, 2));
  CHECK(u92.graph.order() == 9);
  CHECK(u92.graph.is_complete());

  const auto u84 = build_universe(Parameters(8, 4));
  CHECK(u84.graph.order() == 57);
  CHECK(u84.graph.is_complete());

  const auto u = build_universe(Parameters(9, 3));
  REQUIRE(u.graph.order() == 73);
  // the single point of ((1/3)^9) comes first
  const RationalPoint x0 = u.point(0);
  CHECK(x0 == RationalPoint(9, Rational(1, 3)));
  std::size_t pairs = 0;
  for (std::size_t v = 1; v < 73; ++v) {
    CHECK(u.graph.adjacent(0, v));
    RationalPoint mirror(9);
    for (int i = 0; i < 9; ++i) mirror[i] = Rational(2) * x0[i] - u.point(v)[i];
    for (std::size_t w = 1; w < 73; ++w) {
      if (u.point(w) != mirror) continue;
      CHECK(!u.graph.adjacent(v, w));
      CHECK(squared_distance(u.point(v), u.point(w)) == Rational(8));
      ++pairs;
    }
    // the partner is the only non-neighbour
    CHECK(u.graph.degree(v) == 71);
  }
  CHECK(pairs == 72);
}

TEST_CASE("universe is symmetric, irreflexive and independent of worker count") {
  const auto a = build_universe(Parameters(9, 3), kDefaultCap, 1);
  const auto b = build_universe(Parameters(9, 3), kDefaultCap, 4);
  REQUIRE(a.graph.order() == b.graph.order());
  for (std::size_t u = 0; u < a.graph.order(); ++u) {
    CHECK(!a.graph.adjacent(u, u));
    for (std::size_t v = 0; v < a.graph.order(); ++v) {
      CHECK(a.graph.adjacent(u, v) == a.graph.adjacent(v, u));
      CHECK(a.graph.adjacent(u, v) == b.graph.adjacent(u, v));
    }
  }
  CHECK(a.points == b.points);
  CHECK_THROWS_AS(build_universe(Parameters(49, 5), 1000), UniverseTooLarge);
}

TEST_CASE("max_clique examples") {
  const auto r92 = max_clique(build_universe(Parameters(9, 2)).graph, kDefaultBudget);
  CHECK(r92.vertices.size() == 9);
  CHECK(r92.optimal);
  const auto r93 = max_clique(build_universe(Parameters(9, 3)).graph, kDefaultBudget);
  CHECK(r93.vertices.size() == 37);
  CHECK(r93.optimal);
}

TEST_CASE("classify examples") {
  const auto r92 = classify(Parameters(9, 2));
  REQUIRE(r92.families.size() == 1);
  CHECK(r92.added == 9);
  CHECK(r92.total() == 45);
  CHECK(r92.resolution == Resolution::orbit_complete);

  const auto r102 = classify(Parameters(10, 2));
  CHECK(r102.families.empty());
  CHECK(r102.total() == 45);
  CHECK(r102.resolution == Resolution::johnson_maximal);
  CHECK(r102.status() == "maximal");

  const auto r495 = classify(Parameters(49, 5));
  CHECK(r495.resolution == Resolution::orbit_complete);
  CHECK(r495.added == 1176);
  CHECK(r495.total() == 1908060);
  CHECK(r495.witness.empty());

  const auto r94 = classify(Parameters(9, 4), quick());
  REQUIRE(r94.known.has_value());
  CHECK(r94.known->points.size() == 258);
  CHECK(r94.known->verified);
  CHECK(r94.total() >= 258);
  if (!r94.optimal) CHECK(r94.status() != "optimal");
}

TEST_CASE("total is at least the johnson size, with equality iff nothing is addable") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2 * m; n <= 26; ++n) {
      const auto r = classify(Parameters(n, m), quick());
      CHECK(r.total() >= r.johnson_size);
      CHECK((r.total() == r.johnson_size) == r.families.empty());
    }
}

TEST_CASE("reported extensions verify") {
  for (const auto &[n, m] : std::vector<std::pair<int, int>>{{9, 2}, {8, 3}, {9, 3}, {8, 4}}) {
    const Parameters p(n, m);
    const auto r = classify(p);
    std::vector<RationalPoint> added = r.witness;
    if (r.resolution == Resolution::orbit_complete)
      for (const auto &f : r.families)
        for (const auto &x : family_points(f.family)) added.push_back(x);
    CHECK(added.size() == r.added);
    const auto v = verify_point_set(with_johnson(p, added), m);
    CHECK(v.ok);
    CHECK(v.points == r.total());
  }
}

TEST_CASE("every maximal extension of J(9,3) has 37 points") {
  ClassifyOptions o;
  o.enumerate_maximal = true;
  const auto r = classify(Parameters(9, 3), o);
  REQUIRE(r.maximal_clique_sizes.has_value());
  CHECK(*r.maximal_clique_sizes == std::set<std::size_t>{37});
}

TEST_CASE("verify_point_set examples") {
  const auto j42 = verify_point_set(johnson_points(Parameters(4, 2)), 2);
  CHECK(j42.ok);
  CHECK(j42.spectrum == std::vector<QuadNum>{2, 4});

  const Parameters p92(9, 2);
  std::vector<RationalPoint> added;
  for (const auto &f : addable_families(p92))
    for (const auto &x : family_points(f)) added.push_back(x);
  const auto v92 = verify_point_set(with_johnson(p92, added), 2);
  CHECK(v92.ok);
  CHECK(v92.points == 45);
  CHECK(v92.spectrum == std::vector<QuadNum>{2, 4});

  const Parameters p93(9, 3);
  added.clear();
  for (const auto &f : addable_families(p93))
    for (const auto &x : family_points(f)) added.push_back(x);
  const auto v93 = verify_point_set(with_johnson(p93, added), 3);
  CHECK(!v93.ok);
  CHECK(v93.spectrum.back() == QuadNum(8));

  auto dup = johnson_points(Parameters(4, 2));
  dup.push_back(dup.front());
  const auto vd = verify_point_set(dup, 2);
  CHECK(!vd.ok);
  CHECK(vd.duplicates);
}

TEST_CASE("classification is deterministic") {
  const auto a = classify(Parameters(9, 3));
  const auto b = classify(Parameters(9, 3));
  CHECK(a.witness == b.witness);
  CHECK(a.notes == b.notes);
}
