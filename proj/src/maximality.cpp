#include "jds/maximality.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

namespace jds {

std::vector<CandidateFamily> addable_families(Parameters params) {
  std::vector<CandidateFamily> out;
  for_each_family(params, [&](const CandidateFamily &f) {
    if (is_addable(f)) out.push_back(f);
    return true;
  });
  return out;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("JDS_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

RationalPoint CandidateUniverse::point(std::size_t v) const {
  RationalPoint p;
  p.reserve(points[v].size());
  for (long long x : points[v]) p.emplace_back(x, params.n);
  return p;
}

CandidateUniverse build_universe(Parameters params, std::size_t cap, unsigned workers) {
  CandidateUniverse u{params, addable_families(params), {}, {}, Graph()};
  BigInt total = 0;
  for (const auto &f : u.families) total += family_size(f);
  if (total > static_cast<unsigned long>(cap))
    throw UniverseTooLarge("universe of " + total.get_str() + " points exceeds cap " +
                           std::to_string(cap));
  for (std::size_t fi = 0; fi < u.families.size(); ++fi) {
    if (!johnson_family_spectrum(u.families[fi]).within_johnson_distances(params.m))
      throw std::logic_error("addable family leaves the Johnson distances");
    for_each_family_point(u.families[fi], [&](std::span<const long long> y) {
      u.points.emplace_back(y.begin(), y.end());
      u.family_of.push_back(fi);
    });
  }

  const std::size_t order = u.points.size();
  const long long n2 = static_cast<long long>(params.n) * params.n;
  const long long hi = 2LL * params.m * n2;
  auto compatible = [&](std::size_t a, std::size_t b) {
    long long s = 0;
    for (std::size_t t = 0; t < u.points[a].size(); ++t) {
      const long long d = u.points[a][t] - u.points[b][t];
      s += d * d;
    }
    return s % (2 * n2) == 0 && s >= 2 * n2 && s <= hi;
  };

  // Rows are striped across workers; edges are merged in row order.
  const unsigned nw = std::min<unsigned>(worker_count(workers), std::max<std::size_t>(order, 1));
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(nw);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < nw; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t a = w; a < order; a += nw)
          for (std::size_t b = a + 1; b < order; ++b)
            if (compatible(a, b)) found[w].emplace_back(a, b);
      });
  }
  u.graph = Graph(order);
  for (const auto &edges : found)
    for (const auto &[a, b] : edges) u.graph.add_edge(a, b);
  return u;
}

std::string to_string(Resolution r) {
  switch (r) {
    case Resolution::johnson_maximal: return "johnson-maximal";
    case Resolution::orbit_complete: return "orbit-complete";
    case Resolution::clique_search: return "clique-search";
    case Resolution::orbit_incomplete: return "orbit-incomplete";
  }
  return "unknown";
}

std::string ClassificationReport::status() const {
  switch (resolution) {
    case Resolution::johnson_maximal: return "maximal";
    case Resolution::orbit_complete: return "all-addable";
    case Resolution::clique_search: return optimal ? "optimal" : "lower-bound";
    case Resolution::orbit_incomplete: return "lower-bound";
  }
  return "unknown";
}

namespace {

std::vector<RationalPoint> points_where(const CandidateFamily &fam,
                                        const std::function<bool(const RationalPoint &)> &keep) {
  std::vector<RationalPoint> out;
  for (auto &p : family_points(fam))
    if (keep(p)) out.push_back(std::move(p));
  return out;
}

std::size_t position_of(const RationalPoint &p, const Rational &v) {
  return static_cast<std::size_t>(std::find(p.begin(), p.end(), v) - p.begin());
}

std::size_t last_position_of(const RationalPoint &p, const Rational &v) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] == v) return i;
  return p.size();
}

RationalPoint parse_point(std::initializer_list<const char *> coords) {
  RationalPoint p;
  for (const char *c : coords) p.push_back(Rational::parse(c));
  return p;
}

}  // namespace

std::optional<KnownExtension> known_extension(Parameters params) {
  if (params == Parameters(9, 3)) {
    KnownExtension k;
    k.description =
        "J(9,3) + (1/3)^9 + {(4/3, (1/3)^7, -2/3)^P : the 4/3 entry follows the -2/3 entry}";
    k.points = johnson_points(params);
    for (auto &p : family_points(CandidateFamily::canonical(params, 6, {9}))) k.points.push_back(p);
    const Rational hi(4, 3);
    const Rational lo(-2, 3);
    for (auto &p : points_where(CandidateFamily::canonical(params, -3, {1, 7, 1}),
                                [&](const RationalPoint &x) { return position_of(x, hi) > position_of(x, lo); }))
      k.points.push_back(p);
    k.verified = verify_point_set(k.points, params.m).ok;
    return k;
  }
  if (params == Parameters(9, 4)) {
    KnownExtension k;
    k.description =
        "J(9,4) + ((2/3)^7,(-1/3)^2)^P + (4/3,(1/3)^8)^P + ((2/3)^8,-4/3) + "
        "{((4/3)^2,(1/3)^6,-2/3)^P : -2/3 follows both 4/3 entries} + "
        "(-2/3,4/3,4/3,(1/3)^6) + (4/3,-2/3,4/3,(1/3)^6)";
    k.points = johnson_points(params);
    for (auto &p : family_points(CandidateFamily::canonical(params, 3, {7, 2}))) k.points.push_back(p);
    for (auto &p : family_points(CandidateFamily::canonical(params, -3, {1, 8}))) k.points.push_back(p);
    k.points.push_back(parse_point({"2/3", "2/3", "2/3", "2/3", "2/3", "2/3", "2/3", "2/3", "-4/3"}));
    const Rational hi(4, 3);
    const Rational lo(-2, 3);
    for (auto &p : points_where(CandidateFamily::canonical(params, -3, {2, 6, 1}),
                                [&](const RationalPoint &x) { return position_of(x, lo) > last_position_of(x, hi); }))
      k.points.push_back(p);
    k.points.push_back(parse_point({"-2/3", "4/3", "4/3", "1/3", "1/3", "1/3", "1/3", "1/3", "1/3"}));
    k.points.push_back(parse_point({"4/3", "-2/3", "4/3", "1/3", "1/3", "1/3", "1/3", "1/3", "1/3"}));
    k.verified = verify_point_set(k.points, params.m).ok;
    return k;
  }
  return std::nullopt;
}

ClassificationReport classify(Parameters params, const ClassifyOptions &options) {
  ClassificationReport r;
  r.params = params;
  r.johnson_size = binomial(params.n, params.m);
  r.added = 0;
  r.universe_size = 0;

  const auto fams = addable_families(params);
  for (const auto &f : fams) {
    r.families.push_back({f, family_size(f), johnson_family_spectrum(f), cross_family_spectrum(f, f)});
    r.universe_size += r.families.back().size;
  }
  if (fams.empty()) {
    r.resolution = Resolution::johnson_maximal;
    r.notes.push_back("no candidate family is addable; J(n,m) is maximal");
    return r;
  }

  bool all_compatible = true;
  for (std::size_t a = 0; a < fams.size(); ++a) {
    for (std::size_t b = a; b < fams.size(); ++b) {
      Spectrum s = (a == b) ? r.families[a].intra_spectrum : cross_family_spectrum(fams[a], fams[b]);
      const bool ok = s.within_johnson_distances(params.m);
      all_compatible = all_compatible && ok;
      r.pairs.push_back({a, b, std::move(s), ok});
    }
  }

  if (all_compatible) {
    r.resolution = Resolution::orbit_complete;
    r.added = r.universe_size;
    r.optimal = true;
    r.notes.push_back("every intra- and cross-family spectrum lies in {2,...,2m}; all points are added");
  } else if (r.universe_size > static_cast<unsigned long>(options.cap)) {
    r.resolution = Resolution::orbit_incomplete;
    r.optimal = false;
    // Greedy union of mutually compatible whole families as a lower bound.
    std::vector<std::size_t> chosen;
    auto pair_ok = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      for (const auto &p : r.pairs)
        if (p.a == a && p.b == b) return p.compatible;
      return false;
    };
    for (std::size_t a = 0; a < fams.size(); ++a) {
      if (!pair_ok(a, a)) continue;
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t b) { return pair_ok(a, b); })) {
        chosen.push_back(a);
        r.added += r.families[a].size;
      }
    }
    r.notes.push_back("universe exceeds the materialization cap; added is a lower bound from whole families");
  } else {
    r.resolution = Resolution::clique_search;
    const CandidateUniverse u = build_universe(params, options.cap, options.workers);
    const CliqueResult c = max_clique(u.graph, options.budget);
    r.added = static_cast<unsigned long>(c.vertices.size());
    r.optimal = c.optimal;
    r.expansions = c.expansions;
    for (auto v : c.vertices) r.witness.push_back(u.point(v));
    if (!c.optimal) r.notes.push_back("clique search hit the node budget; added is a lower bound");
    if (options.enumerate_maximal) {
      r.maximal_clique_sizes = maximal_clique_sizes(u.graph, options.budget);
      if (!r.maximal_clique_sizes) r.notes.push_back("maximal clique enumeration hit the budget");
    }
  }

  r.known = known_extension(params);
  if (r.known) {
    const std::size_t known_added = r.known->points.size() - r.johnson_size.get_ui();
    r.notes.push_back("explicit extension with " + std::to_string(r.known->points.size()) + " points (" +
                      std::to_string(known_added) + " added) verified: " +
                      (r.known->verified ? "yes" : "no"));
  }
  return r;
}

VerifyResult verify_point_set(const std::vector<RationalPoint> &points, int m, bool johnson_normalized) {
  VerifyResult out;
  out.points = points.size();
  std::set<Rational> distinct;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Rational d = squared_distance(points[a], points[b]);
      if (d.is_zero())
        out.duplicates = true;
      else
        distinct.insert(d);
    }
  for (const auto &d : distinct) out.spectrum.emplace_back(d);
  out.ok = !out.duplicates && distinct.size() <= static_cast<std::size_t>(m);
  if (johnson_normalized)
    out.ok = out.ok && std::all_of(distinct.begin(), distinct.end(), [m](const Rational &d) {
               return d.is_integer() && d.numerator() % 2 == 0 && d >= Rational(2) &&
                      d <= Rational(2LL * m);
             });
  return out;
}

VerifyResult verify_point_set(const std::vector<QuadPoint> &points, int m, bool johnson_normalized) {
  VerifyResult out;
  out.points = points.size();
  std::map<std::string, QuadNum> distinct;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      QuadNum d = squared_distance(points[a], points[b]);
      if (d.is_zero())
        out.duplicates = true;
      else
        distinct.emplace(d.to_string(), std::move(d));
    }
  for (auto &[key, d] : distinct) out.spectrum.push_back(d);
  std::sort(out.spectrum.begin(), out.spectrum.end(), QuadLess{});
  out.ok = !out.duplicates && out.spectrum.size() <= static_cast<std::size_t>(m);
  if (johnson_normalized)
    out.ok = out.ok && std::all_of(out.spectrum.begin(), out.spectrum.end(), [m](const QuadNum &d) {
               if (!d.is_rational()) return false;
               const Rational r = d.to_rational();
               return r.is_integer() && r.numerator() % 2 == 0 && r >= Rational(2) &&
                      r <= Rational(2LL * m);
             });
  return out;
}

}  // namespace jds
