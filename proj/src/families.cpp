#include "jds/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace jds {

Parameters::Parameters(int n_, int m_) : n(n_), m(m_) {
  if (m < 1) throw InvalidParameters("m must be positive, got " + std::to_string(m));
  if (n < 2 * m)
    throw InvalidParameters("need n >= 2m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------- family

CandidateFamily::CandidateFamily(Parameters params, long long k0, std::vector<long long> k)
    : params_(params), k0_(k0), k_(std::move(k)) {
  if (k_.empty()) throw InvalidParameters("family needs at least one level");
  long long total = 0;
  long long weighted = 0;
  for (std::size_t j = 0; j < k_.size(); ++j) {
    if (k_[j] < 0) throw InvalidParameters("negative multiplicity");
    total += k_[j];
    weighted += static_cast<long long>(j + 1) * k_[j];
  }
  if (total != params_.n)
    throw InvalidParameters("multiplicities sum to " + std::to_string(total) +
                                ", expected n=" + std::to_string(params_.n));
  if (weighted != 2LL * params_.n - k0_ - params_.m)
    throw InvalidParameters("family is off the hyperplane sum x_i = m");
  const auto first = std::find_if(k_.begin(), k_.end(), [](long long v) { return v > 0; });
  const auto last = std::find_if(k_.rbegin(), k_.rend(), [](long long v) { return v > 0; });
  const auto span = std::distance(first, last.base());
  if (span > params_.m)
    throw InvalidParameters("level span " + std::to_string(span) + " exceeds m");
}

CandidateFamily CandidateFamily::canonical(Parameters params, long long k0,
                                           std::vector<long long> k) {
  return CandidateFamily(params, k0, std::move(k)).canonicalized();
}

CandidateFamily CandidateFamily::johnson_pattern(Parameters params) {
  return CandidateFamily(params, 0, {params.m, params.n - params.m});
}

CandidateFamily CandidateFamily::canonicalized() const {
  std::vector<long long> k = k_;
  long long k0 = k0_;
  while (!k.empty() && k.back() == 0) k.pop_back();
  std::size_t lead = 0;
  while (lead < k.size() && k[lead] == 0) ++lead;
  k.erase(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(lead));
  k0 += static_cast<long long>(lead) * n();
  return CandidateFamily(params_, k0, std::move(k));
}

bool CandidateFamily::is_canonical() const { return k_.front() > 0 && k_.back() > 0; }

bool CandidateFamily::is_johnson_pattern() const {
  const CandidateFamily c = canonicalized();
  return c.k0_ == 0 && c.k_ == std::vector<long long>{params_.m, params_.n - params_.m};
}

std::vector<Rational> CandidateFamily::levels() const {
  std::vector<Rational> out;
  out.reserve(k_.size());
  for (int j = 1; j <= l(); ++j) out.push_back(level(j));
  return out;
}

long long CandidateFamily::square_sum() const {
  long long s = 0;
  for (std::size_t j = 0; j < k_.size(); ++j)
    s += static_cast<long long>((j + 1) * (j + 1)) * k_[j];
  return s;
}

// ---------------------------------------------------------------- points

void for_each_johnson_point(Parameters params,
                            const std::function<void(std::span<const int>)> &visit) {
  std::vector<int> x(static_cast<std::size_t>(params.n), 0);
  std::fill(x.begin(), x.begin() + params.m, 1);
  do {
    visit(x);
  } while (std::prev_permutation(x.begin(), x.end()));
}

std::vector<RationalPoint> johnson_points(Parameters params) {
  std::vector<RationalPoint> out;
  for_each_johnson_point(params, [&](std::span<const int> x) {
    out.emplace_back(x.begin(), x.end());
  });
  return out;
}

void for_each_family_point(const CandidateFamily &fam,
                           const std::function<void(std::span<const long long>)> &visit) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(fam.n()));
  for (int j = 1; j <= fam.l(); ++j)
    idx.insert(idx.end(), static_cast<std::size_t>(fam.k()[j - 1]), j);
  std::vector<long long> scaled(idx.size());
  do {
    for (std::size_t t = 0; t < idx.size(); ++t) scaled[t] = fam.scaled_level(idx[t]);
    visit(scaled);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

std::vector<RationalPoint> family_points(const CandidateFamily &fam) {
  std::vector<RationalPoint> out;
  for_each_family_point(fam, [&](std::span<const long long> y) {
    RationalPoint p;
    p.reserve(y.size());
    for (long long v : y) p.emplace_back(v, fam.n());
    out.push_back(std::move(p));
  });
  return out;
}

BigInt family_size(const CandidateFamily &fam) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(fam.n()));
  for (long long kj : fam.k()) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(kj));
    out /= f;
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

// Compositions of `remaining` into the slots k[pos..]; the first and last
// slot are positive.
bool compose(Parameters params, std::vector<long long> &k, std::size_t pos, long long remaining,
             const std::function<bool(const CandidateFamily &)> &visit) {
  const std::size_t l = k.size();
  if (pos + 1 == l) {
    if (remaining < 1) return true;
    k[pos] = remaining;
    long long weighted = 0;
    for (std::size_t j = 0; j < l; ++j) weighted += static_cast<long long>(j + 1) * k[j];
    const long long k0 = 2LL * params.n - params.m - weighted;
    if (l == 2 && k0 == 0 && k[0] == params.m) return true;  // the Johnson pattern
    return visit(CandidateFamily(params, k0, k));
  }
  const long long lo = (pos == 0) ? 1 : 0;
  const long long reserve = 1;  // the last slot needs at least one
  for (long long v = lo; v <= remaining - reserve; ++v) {
    k[pos] = v;
    if (!compose(params, k, pos + 1, remaining - v, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_family(Parameters params,
                     const std::function<bool(const CandidateFamily &)> &visit) {
  for (int l = 1; l <= params.m; ++l) {
    std::vector<long long> k(static_cast<std::size_t>(l), 0);
    if (!compose(params, k, 0, params.n, visit)) return;
  }
}

std::vector<CandidateFamily> enumerate_families(Parameters params) {
  std::vector<CandidateFamily> out;
  for_each_family(params, [&](const CandidateFamily &f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------- distances

bool is_valid_profile(const CandidateFamily &fam, const IProfile &profile) {
  if (profile.i.size() != fam.k().size()) return false;
  long long total = 0;
  for (std::size_t j = 0; j < profile.i.size(); ++j) {
    if (profile.i[j] < 0 || profile.i[j] > fam.k()[j]) return false;
    total += profile.i[j];
  }
  return total == fam.m();
}

void for_each_profile(const CandidateFamily &fam,
                      const std::function<void(const IProfile &)> &visit) {
  IProfile p{std::vector<long long>(fam.k().size(), 0)};
  // capacity[j] = sum of k over levels after j
  std::vector<long long> tail(fam.k().size() + 1, 0);
  for (std::size_t j = fam.k().size(); j-- > 0;) tail[j] = tail[j + 1] + fam.k()[j];
  std::function<void(std::size_t, long long)> rec = [&](std::size_t j, long long left) {
    if (j + 1 == p.i.size()) {
      if (left <= fam.k()[j]) {
        p.i[j] = left;
        visit(p);
      }
      return;
    }
    const long long lo = std::max(0LL, left - tail[j + 1]);
    const long long hi = std::min(fam.k()[j], left);
    for (long long v = lo; v <= hi; ++v) {
      p.i[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, fam.m());
}

long long profile_weight(const IProfile &profile) {
  long long w = 0;
  for (std::size_t j = 0; j < profile.i.size(); ++j) w += 2 * static_cast<long long>(j) * profile.i[j];
  return w;
}

long long sq_dist_profile_scaled(const CandidateFamily &fam, const IProfile &profile) {
  if (!is_valid_profile(fam, profile)) throw std::invalid_argument("profile does not fit family");
  const long long n = fam.n();
  const long long k0 = fam.k0();
  // n * d^2 = n (4 k0 + 3m - 4n + sum j^2 k_j + 2 sum (j-1) i_j) - k0^2
  const long long inner = 4 * k0 + 3LL * fam.m() - 4 * n + fam.square_sum() + profile_weight(profile);
  return n * (n * inner - k0 * k0);
}

Rational sq_dist_profile(const CandidateFamily &fam, const IProfile &profile) {
  const long long n = fam.n();
  return Rational(sq_dist_profile_scaled(fam, profile), n * n);
}

IProfile max_profile(const CandidateFamily &fam) {
  IProfile p{std::vector<long long>(fam.k().size(), 0)};
  long long left = fam.m();
  for (std::size_t j = fam.k().size(); j-- > 0 && left > 0;) {
    p.i[j] = std::min(fam.k()[j], left);
    left -= p.i[j];
  }
  return p;
}

long long m_x_scaled(const CandidateFamily &fam) { return sq_dist_profile_scaled(fam, max_profile(fam)); }

Rational m_x(const CandidateFamily &fam) { return sq_dist_profile(fam, max_profile(fam)); }

bool is_addable(const CandidateFamily &fam) {
  if (fam.is_johnson_pattern()) return false;
  const long long n2 = static_cast<long long>(fam.n()) * fam.n();
  const long long scaled = m_x_scaled(fam);
  if (scaled % n2 != 0) return false;
  const long long mx = scaled / n2;
  return mx % 2 == 0 && mx <= 2LL * fam.m();
}

// ---------------------------------------------------------------- reduction

CandidateFamily reduce_raw(const CandidateFamily &fam) {
  const CandidateFamily c = fam.canonicalized();
  const int l = c.l();
  if (l <= 2) throw NotReducible("family with l=" + std::to_string(l) + " is already terminal");
  std::vector<long long> k = c.k();
  if (l == 3) {
    k[0] -= 1;
    k[1] += 2;
    k[2] -= 1;
  } else {
    k[0] -= 1;
    k[1] += 1;
    k[static_cast<std::size_t>(l - 2)] += 1;
    k[static_cast<std::size_t>(l - 1)] -= 1;
  }
  return CandidateFamily(c.params(), c.k0(), std::move(k));
}

CandidateFamily reduce(const CandidateFamily &fam) { return reduce_raw(fam).canonicalized(); }

ReductionTrace reduction_trace(const CandidateFamily &fam) {
  ReductionTrace t;
  t.chain.push_back(fam.canonicalized());
  while (t.chain.back().l() >= 3) t.chain.push_back(reduce(t.chain.back()));
  const CandidateFamily &last = t.chain.back();
  t.kbar = last.k0();
  const long long m = last.m();
  if (!(t.kbar > -m && t.kbar <= last.n() - m))
    throw std::logic_error("terminal offset out of range: " + std::to_string(t.kbar));
  return t;
}

long long ix_drop(const CandidateFamily &fam) {
  const CandidateFamily c = fam.canonicalized();
  const CandidateFamily next = reduce_raw(c);
  return profile_weight(max_profile(c)) - profile_weight(max_profile(next));
}

long long ix_drop_closed_form(const CandidateFamily &fam) {
  const CandidateFamily c = fam.canonicalized();
  if (c.k().front() <= c.n() - c.m() || c.k().back() > c.m()) return 0;
  return 2;
}

}  // namespace jds
