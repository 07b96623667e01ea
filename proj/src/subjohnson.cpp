#include "jds/subjohnson.hpp"

#include "jds/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace jds {

namespace {

void require_n(int n) {
  if (n < 5) throw std::invalid_argument("sub-Johnson setting needs n >= 5");
}

int family_index(int n, int k, int target) {
  if (k == 0) return target == 2 ? 1 : 2;
  if (k == 1) return 3;
  if (k == n - 2) return 4;
  return 0;
}

}  // namespace

std::string SubFamily::name() const {
  return "X" + std::to_string(index) + (self_mirror ? "" : (sign == Sign::plus ? "+" : "-"));
}

std::size_t SubFamily::orbit_size() const {
  return binomial(n - 1, k).get_ui();
}

std::vector<QuadPoint> SubFamily::points() const {
  // positions of the k entries equal to a among the first n-1 slots
  std::vector<int> mask(static_cast<std::size_t>(n - 1), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  const QuadNum lower = a - QuadNum(1);
  std::vector<QuadPoint> out;
  do {
    QuadPoint p;
    p.reserve(static_cast<std::size_t>(n));
    for (int bit : mask) p.push_back(bit ? a : lower);
    p.push_back(b);
    out.push_back(std::move(p));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::vector<QuadPoint> sub_johnson_points(int n) {
  require_n(n);
  std::vector<int> mask(static_cast<std::size_t>(n - 1), 0);
  mask[0] = mask[1] = 1;
  std::vector<QuadPoint> out;
  do {
    QuadPoint p;
    for (int bit : mask) p.emplace_back(bit);
    p.emplace_back(0);
    out.push_back(std::move(p));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

QuadNum sub_sq_dist(int n, int k, const QuadNum &a, int i2) {
  const long long nn = n;
  const long long c = nn - k + 1;
  return QuadNum(nn * (nn - 1)) * a * a - QuadNum(2 * nn * c) * a + QuadNum(c * (c + 1) + 2LL * i2);
}

std::pair<int, int> i2_range(int n, int k) {
  return {std::max(0, 2 - k), std::min(2, n - k - 1)};
}

std::vector<SubFamily> solve_sub_families(int n) {
  require_n(n);
  std::vector<SubFamily> out;
  const long long nn = n;
  for (int k = 0; k <= n - 2; ++k) {
    const auto [lo, hi] = i2_range(n, k);
    for (int target : {2, 4}) {
      // distances run from target to target + 2 (hi - lo) in steps of 2
      if (target + 2 * (hi - lo) > 4) continue;
      const long long c = nn - k + 1;
      const Rational A(nn * (nn - 1));
      const Rational B(-2 * nn * c);
      const Rational C(c * (c + 1) + 2LL * lo - target);
      std::pair<QuadNum, QuadNum> roots;
      try {
        roots = solve_quadratic(A, B, C);
      } catch (const NegativeDiscriminant &) {
        continue;
      }
      const int index = family_index(n, k, target);
      if (index == 0) throw std::logic_error("unexpected sub-Johnson family at k=" + std::to_string(k));
      auto make = [&](const QuadNum &a, Sign s, bool self) {
        SubFamily f;
        f.n = n;
        f.k = k;
        f.index = index;
        f.sign = s;
        f.self_mirror = self;
        f.a = a;
        f.b = QuadNum(-(nn - 1)) * a + QuadNum(c);
        return f;
      };
      if (roots.first == roots.second) {
        out.push_back(make(roots.second, Sign::plus, true));
      } else {
        out.push_back(make(roots.second, Sign::plus, false));
        out.push_back(make(roots.first, Sign::minus, false));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SubFamily &x, const SubFamily &y) {
    return x.index < y.index;
  });
  return out;
}

namespace {

bool in_two_distance(const QuadNum &d) {
  return d == QuadNum(2) || d == QuadNum(4);
}

bool sets_compatible(const std::vector<QuadPoint> &xs, const std::vector<QuadPoint> &ys, bool same) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = same ? i + 1 : 0; j < ys.size(); ++j)
      if (!in_two_distance(squared_distance(xs[i], ys[j]))) return false;
  return true;
}

}  // namespace

std::string Combination::label(const std::vector<SubFamily> &families) const {
  std::string s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) s += " u ";
    s += families[members[i]].name();
  }
  return s;
}

CombinationSearch combination_search(int n) {
  require_n(n);
  CombinationSearch cs;
  cs.n = n;
  cs.johnson_size = static_cast<std::size_t>((n - 1) * (n - 2) / 2);
  cs.families = solve_sub_families(n);
  const std::size_t f = cs.families.size();
  std::vector<std::vector<QuadPoint>> pts;
  for (const auto &fam : cs.families) pts.push_back(fam.points());
  cs.compatible.assign(f, std::vector<bool>(f, false));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i; j < f; ++j)
      cs.compatible[i][j] = cs.compatible[j][i] = sets_compatible(pts[i], pts[j], i == j);

  std::vector<std::uint32_t> valid_masks;
  for (std::uint32_t mask = 1; mask < (1U << f); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < f && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (std::size_t j = i; j < f && ok; ++j)
        if ((mask >> j & 1U) && !cs.compatible[i][j]) ok = false;
    }
    if (ok) valid_masks.push_back(mask);
  }
  for (std::uint32_t mask : valid_masks) {
    Combination c;
    for (std::size_t i = 0; i < f; ++i)
      if (mask >> i & 1U) {
        c.members.push_back(i);
        c.added += cs.families[i].orbit_size();
      }
    c.total = cs.johnson_size + c.added;
    c.maximal = std::none_of(valid_masks.begin(), valid_masks.end(), [&](std::uint32_t other) {
      return other != mask && (other & mask) == mask;
    });
    cs.valid.push_back(std::move(c));
  }
  return cs;
}

std::vector<std::size_t> mirror_members(const std::vector<SubFamily> &families,
                                        const std::vector<std::size_t> &members) {
  std::vector<std::size_t> out;
  for (std::size_t i : members) {
    const SubFamily &f = families[i];
    if (f.self_mirror) {
      out.push_back(i);
      continue;
    }
    const Sign want = f.sign == Sign::plus ? Sign::minus : Sign::plus;
    const auto it = std::find_if(families.begin(), families.end(), [&](const SubFamily &g) {
      return g.index == f.index && g.sign == want && !g.self_mirror;
    });
    if (it == families.end()) return {};
    out.push_back(static_cast<std::size_t>(it - families.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadPoint> union_points(int n, const std::vector<SubFamily> &families,
                                    const std::vector<std::size_t> &members) {
  std::vector<QuadPoint> out = sub_johnson_points(n);
  for (std::size_t i : members)
    for (auto &p : families[i].points()) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------- congruence

namespace {

using Bits = std::vector<std::uint64_t>;

class Matcher {
public:
  Matcher(std::vector<std::vector<int>> da, std::vector<std::vector<int>> db)
      : da_(std::move(da)), db_(std::move(db)), size_(da_.size()), words_((size_ + 63) / 64) {}

  bool run() {
    std::vector<std::vector<int>> sig_a(size_), sig_b(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      sig_a[i] = da_[i];
      sig_b[i] = db_[i];
      std::sort(sig_a[i].begin(), sig_a[i].end());
      std::sort(sig_b[i].begin(), sig_b[i].end());
    }
    std::vector<Bits> cand(size_, Bits(words_, 0));
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j)
        if (sig_a[i] == sig_b[j]) cand[i][j / 64] |= std::uint64_t{1} << (j % 64);
    std::vector<int> image(size_, -1);
    Bits used(words_, 0);
    return extend(cand, image, used, 0);
  }

private:
  bool extend(std::vector<Bits> &cand, std::vector<int> &image, Bits &used, std::size_t done) {
    if (done == size_) return true;
    // most constrained unassigned point
    std::size_t pick = size_;
    int best = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if (image[i] >= 0) continue;
      int c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += std::popcount(cand[i][w] & ~used[w]);
      if (c == 0) return false;
      if (pick == size_ || c < best) {
        pick = i;
        best = c;
      }
    }
    for (std::size_t j = 0; j < size_; ++j) {
      if (!(cand[pick][j / 64] >> (j % 64) & 1U) || (used[j / 64] >> (j % 64) & 1U)) continue;
      std::vector<Bits> next = cand;
      bool dead = false;
      for (std::size_t i = 0; i < size_ && !dead; ++i) {
        if (image[i] >= 0 || i == pick) continue;
        for (std::size_t t = 0; t < size_; ++t)
          if ((next[i][t / 64] >> (t % 64) & 1U) && db_[j][t] != da_[pick][i])
            next[i][t / 64] &= ~(std::uint64_t{1} << (t % 64));
        dead = std::all_of(next[i].begin(), next[i].end(), [](std::uint64_t w) { return w == 0; });
      }
      if (dead) continue;
      image[pick] = static_cast<int>(j);
      used[j / 64] |= std::uint64_t{1} << (j % 64);
      if (extend(next, image, used, done + 1)) return true;
      used[j / 64] &= ~(std::uint64_t{1} << (j % 64));
      image[pick] = -1;
    }
    return false;
  }

  std::vector<std::vector<int>> da_;
  std::vector<std::vector<int>> db_;
  std::size_t size_;
  std::size_t words_;
};

}  // namespace

bool congruent(const std::vector<QuadPoint> &a, const std::vector<QuadPoint> &b) {
  if (a.size() != b.size()) return false;
  std::map<std::string, int> ids;
  auto matrix = [&](const std::vector<QuadPoint> &pts) {
    std::vector<std::vector<int>> d(pts.size(), std::vector<int>(pts.size(), 0));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const std::string key = squared_distance(pts[i], pts[j]).to_string();
        const auto [it, fresh] = ids.try_emplace(key, static_cast<int>(ids.size()) + 1);
        d[i][j] = d[j][i] = it->second;
      }
    return d;
  };
  auto da = matrix(a);
  auto db = matrix(b);
  return Matcher(std::move(da), std::move(db)).run();
}

}  // namespace jds
