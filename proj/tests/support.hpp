#pragma once

// Shared fixtures: seeded random inputs and naive reference implementations
// that share no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autw/automorphisms.hpp"
#include "autw/permutation.hpp"
#include "autw/words.hpp"

namespace autw::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<int> random_raw_cox(Rng& rng, int rank, int max_len) {
  std::vector<int> raw(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& x : raw) x = uniform(rng, 1, rank);
  return raw;
}

inline std::vector<int> random_raw_free(Rng& rng, int rank, int max_len) {
  std::vector<int> raw(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& x : raw) x = uniform(rng, 1, rank) * (uniform(rng, 0, 1) ? 1 : -1);
  return raw;
}

inline CoxWord random_cox(Rng& rng, int rank, int max_len) {
  const auto raw = random_raw_cox(rng, rank, max_len);
  return cox_reduce(rank, raw);
}

inline FreeWord random_free(Rng& rng, int rank, int max_len) {
  const auto raw = random_raw_free(rng, rank, max_len);
  return free_reduce(rank, raw);
}

/// sigma(i,j) or alpha of a random transposition.
inline CoxAut random_generator(Rng& rng, int n) {
  const int i = uniform(rng, 1, n);
  int j = uniform(rng, 1, n - 1);
  if (j >= i) ++j;
  if (uniform(rng, 0, 1)) return sigma(i, j, n);
  return alpha(Permutation::transposition(n, i, j));
}

inline CoxAut random_product(Rng& rng, int n, int max_len) {
  CoxAut f = CoxAut::identity(n);
  const int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) f = f * random_generator(rng, n);
  return f;
}

// ---- naive words: repeated scans deleting the first cancelling pair ----

inline std::vector<int> naive_cox_reduce(std::vector<int> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<int> naive_free_reduce(std::vector<int> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Deletes a randomly chosen cancelling pair until none is left.
inline std::vector<int> random_order_cox_reduce(std::vector<int> w, Rng& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) spots.push_back(i);
    }
    if (spots.empty()) return w;
    const auto at = spots[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spots.size()) - 1))];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

inline std::vector<int> random_order_free_reduce(std::vector<int> w, Rng& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) spots.push_back(i);
    }
    if (spots.empty()) return w;
    const auto at = spots[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spots.size()) - 1))];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

// ---- naive endomorphisms of W_n as image lists ----

using NaiveEndo = std::vector<std::vector<int>>;

inline NaiveEndo naive_identity(int n) {
  NaiveEndo f;
  for (int i = 1; i <= n; ++i) f.push_back({i});
  return f;
}

inline std::vector<int> naive_apply(const NaiveEndo& f, const std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    const auto& img = f[static_cast<std::size_t>(x - 1)];
    out.insert(out.end(), img.begin(), img.end());
  }
  return naive_cox_reduce(out);
}

inline NaiveEndo naive_compose(const NaiveEndo& f, const NaiveEndo& g) {
  NaiveEndo out;
  for (const auto& img : g) out.push_back(naive_apply(f, img));
  return out;
}

/// s_j -> s_i s_j s_i, the rest fixed.
inline NaiveEndo naive_sigma(int i, int j, int n) {
  auto f = naive_identity(n);
  f[static_cast<std::size_t>(j - 1)] = {i, j, i};
  return f;
}

inline NaiveEndo naive_alpha(const std::vector<int>& images) {
  NaiveEndo f;
  for (int k : images) f.push_back({k});
  return f;
}

inline NaiveEndo to_naive(const CoxEndo& f) {
  NaiveEndo out;
  for (const auto& w : f.images()) out.push_back(w.letters());
  return out;
}

inline std::optional<std::size_t> naive_closure_order(const std::vector<NaiveEndo>& gens,
                                                      std::size_t cap) {
  const int n = static_cast<int>(gens.front().size());
  std::set<NaiveEndo> seen{naive_identity(n)};
  std::vector<NaiveEndo> frontier{naive_identity(n)};
  while (!frontier.empty()) {
    std::vector<NaiveEndo> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        auto h = naive_compose(e, g);
        if (seen.insert(h).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::uint64_t naive_order(const NaiveEndo& f, std::uint64_t cutoff) {
  const auto id = naive_identity(static_cast<int>(f.size()));
  NaiveEndo p = f;
  for (std::uint64_t k = 1; k <= cutoff; ++k) {
    if (p == id) return k;
    p = naive_compose(p, f);
  }
  return 0;
}

// ---- naive matrices ----

using BigInt = boost::multiprecision::cpp_int;
using NaiveMatrix = std::vector<std::vector<BigInt>>;

inline NaiveMatrix naive_identity_matrix(std::size_t d) {
  NaiveMatrix m(d, std::vector<BigInt>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline NaiveMatrix naive_mat_mul(const NaiveMatrix& a, const NaiveMatrix& b) {
  const std::size_t d = a.size();
  NaiveMatrix out(d, std::vector<BigInt>(d, 0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t k = 0; k < d; ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

/// Least k <= bound with a^k = I, found by repeated multiplication; 0 if none.
inline std::uint64_t naive_matrix_order(const NaiveMatrix& a, std::uint64_t bound) {
  const auto id = naive_identity_matrix(a.size());
  NaiveMatrix p = a;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = naive_mat_mul(p, a);
  }
  return 0;
}

// ---- naive permutation groups on image vectors ----

using PermVec = std::vector<int>;

inline PermVec perm_mul(const PermVec& p, const PermVec& q) {
  PermVec out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[static_cast<std::size_t>(q[k] - 1)];
  return out;
}

inline PermVec perm_inv(const PermVec& p) {
  PermVec out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(p[k] - 1)] = static_cast<int>(k) + 1;
  return out;
}

inline std::set<PermVec> perm_closure(const std::vector<PermVec>& gens, int n) {
  PermVec id(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;
  std::set<PermVec> seen{id};
  std::vector<PermVec> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      auto h = perm_mul(queue[i], g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen;
}

inline std::vector<PermVec> all_perm_vecs(int n) {
  PermVec p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k + 1;
  std::vector<PermVec> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Normal subgroups of Sym(n) generated by at most two elements (every
/// normal subgroup qualifies for n <= 5).
inline std::set<std::set<PermVec>> naive_normal_subgroups(int n) {
  const auto all = all_perm_vecs(n);
  std::set<std::set<PermVec>> out;
  std::set<std::set<PermVec>> tried;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (b < a) continue;
      auto h = perm_closure({a, b}, n);
      if (!tried.insert(h).second) continue;
      bool normal = true;
      for (const auto& g : all) {
        if (!h.count(perm_mul(perm_mul(g, a), perm_inv(g))) ||
            !h.count(perm_mul(perm_mul(g, b), perm_inv(g)))) {
          normal = false;
          break;
        }
      }
      if (normal) out.insert(std::move(h));
    }
  }
  return out;
}

}  // namespace autw::test
