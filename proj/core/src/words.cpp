#include "autw/words.hpp"

#include <string>

#include "autw/errors.hpp"

namespace autw {

namespace {

void check_cox_rank(int rank) {
  if (rank < 1) {
    throw InputError("Coxeter rank must be at least 1, got " +
                     std::to_string(rank));
  }
}

void check_free_rank(int rank) {
  // F_0 is the trivial group; it shows up as the sign kernel of W_1.
  if (rank < 0) {
    throw InputError("free rank must be non-negative, got " +
                     std::to_string(rank));
  }
}

// Stack reduction; `letters` is already reduced, push one more letter.
inline void push_cox(std::vector<int>& letters, int a) {
  if (!letters.empty() && letters.back() == a) {
    letters.pop_back();
  } else {
    letters.push_back(a);
  }
}

inline void push_free(std::vector<int>& letters, int a) {
  if (!letters.empty() && letters.back() == -a) {
    letters.pop_back();
  } else {
    letters.push_back(a);
  }
}

std::size_t hash_letters(int rank, const std::vector<int>& letters) noexcept {
  std::size_t h = static_cast<std::size_t>(rank) * 0x9e3779b97f4a7c15ULL;
  for (int a : letters) {
    h ^= static_cast<std::size_t>(a + 0x4000) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

CoxWord::CoxWord(int rank) : rank_(rank) { check_cox_rank(rank); }

CoxWord::CoxWord(int rank, std::vector<int> reduced)
    : rank_(rank), letters_(std::move(reduced)) {}

CoxWord CoxWord::generator(int rank, int index) {
  const int raw[] = {index};
  return cox_reduce(rank, raw);
}

FreeWord::FreeWord(int rank) : rank_(rank) { check_free_rank(rank); }

FreeWord::FreeWord(int rank, std::vector<int> reduced)
    : rank_(rank), letters_(std::move(reduced)) {}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  if (sign != 1 && sign != -1) {
    throw InputError("free letter sign must be +1 or -1");
  }
  const int raw[] = {index * sign};
  return free_reduce(rank, raw);
}

CoxWord cox_reduce(int rank, std::span<const int> raw) {
  check_cox_rank(rank);
  std::vector<int> out;
  out.reserve(raw.size());
  for (int a : raw) {
    if (a < 1 || a > rank) {
      throw InputError("generator index " + std::to_string(a) +
                       " outside 1.." + std::to_string(rank));
    }
    push_cox(out, a);
  }
  return CoxWord(rank, std::move(out));
}

CoxWord cox_mul(const CoxWord& u, const CoxWord& v) {
  if (u.rank() != v.rank()) {
    throw InputError("rank mismatch in cox_mul: " + std::to_string(u.rank()) +
                     " vs " + std::to_string(v.rank()));
  }
  std::vector<int> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return cox_reduce(u.rank(), out);
}

CoxWord cox_inv(const CoxWord& u) {
  std::vector<int> out(u.letters().rbegin(), u.letters().rend());
  return cox_reduce(u.rank(), out);
}

int sign(const CoxWord& u) noexcept { return u.length() % 2 == 0 ? 1 : -1; }

CyclicDecomposition cyclic_reduce(const CoxWord& u) {
  const auto& a = u.letters();
  std::size_t lo = 0;
  std::size_t hi = a.size();
  while (hi - lo >= 2 && a[lo] == a[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> core(a.begin() + static_cast<std::ptrdiff_t>(lo),
                        a.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<int> conj(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(lo));
  return {cox_reduce(u.rank(), core), cox_reduce(u.rank(), conj)};
}

std::optional<int> involution_class(const CoxWord& u) {
  const auto core = cyclic_reduce(u).core;
  if (core.length() == 1) {
    return core.letters().front();
  }
  return std::nullopt;
}

FreeWord to_free_basis(const CoxWord& u) {
  if (sign(u) != 1) {
    throw PreconditionError("to_free_basis needs an even-length word");
  }
  const auto& a = u.letters();
  std::vector<int> raw;
  raw.reserve(a.size() * 2);
  for (std::size_t p = 0; p + 1 < a.size(); p += 2) {
    const int s = a[p];
    const int t = a[p + 1];
    // s_s s_t telescopes through x_s ... x_{t-1} (or its inverse).
    if (s < t) {
      for (int i = s; i < t; ++i) raw.push_back(i);
    } else {
      for (int i = s - 1; i >= t; --i) raw.push_back(-i);
    }
  }
  return free_reduce(u.rank() - 1, raw);
}

CoxWord from_free_basis(const FreeWord& w) {
  std::vector<int> raw;
  raw.reserve(w.length() * 2);
  for (int a : w.letters()) {
    const int i = a > 0 ? a : -a;
    if (a > 0) {
      raw.push_back(i);
      raw.push_back(i + 1);
    } else {
      raw.push_back(i + 1);
      raw.push_back(i);
    }
  }
  return cox_reduce(w.rank() + 1, raw);
}

CoxWord project_to_w2(const CoxWord& u) {
  if (u.rank() < 2) {
    throw InputError("project_to_w2 needs rank at least 2");
  }
  std::vector<int> raw;
  for (int a : u.letters()) {
    if (a <= 2) raw.push_back(a);
  }
  return cox_reduce(2, raw);
}

FreeWord free_reduce(int rank, std::span<const int> raw) {
  check_free_rank(rank);
  std::vector<int> out;
  out.reserve(raw.size());
  for (int a : raw) {
    if (a == 0 || a > rank || -a > rank) {
      throw InputError("free letter " + std::to_string(a) + " outside rank " +
                       std::to_string(rank));
    }
    push_free(out, a);
  }
  return FreeWord(rank, std::move(out));
}

FreeWord free_mul(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) {
    throw InputError("rank mismatch in free_mul: " + std::to_string(u.rank()) +
                     " vs " + std::to_string(v.rank()));
  }
  std::vector<int> out = u.letters();
  out.reserve(u.length() + v.length());
  for (int a : v.letters()) push_free(out, a);
  return FreeWord(u.rank(), std::move(out));
}

FreeWord free_inv(const FreeWord& u) {
  std::vector<int> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(-*it);
  }
  return FreeWord(u.rank(), std::move(out));
}

ExpVector abelianize(const FreeWord& w) {
  ExpVector v(static_cast<std::size_t>(w.rank()), 0);
  for (int a : w.letters()) {
    if (a > 0) {
      ++v[static_cast<std::size_t>(a - 1)];
    } else {
      --v[static_cast<std::size_t>(-a - 1)];
    }
  }
  return v;
}

std::size_t hash_value(const CoxWord& u) noexcept {
  return hash_letters(u.rank(), u.letters());
}

std::size_t hash_value(const FreeWord& w) noexcept {
  return hash_letters(w.rank(), w.letters());
}

}  // namespace autw
