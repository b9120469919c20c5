#pragma once

// Word arithmetic in the universal Coxeter group W_n = <s_1..s_n | s_i^2>
// and in the free group F_m.  Both groups have a confluent rewriting system
// (delete s_i s_i, resp. x_i x_i^-1), so a reduced word is the normal form
// and equality of elements is equality of reduced letter sequences.
//
// Generator indices are 1-based throughout.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace autw {

/// Reduced word in W_n: no two adjacent letters are equal.
class CoxWord {
 public:
  /// Identity of W_rank.
  explicit CoxWord(int rank);

  static CoxWord generator(int rank, int index);

  int rank() const noexcept { return rank_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  friend bool operator==(const CoxWord&, const CoxWord&) = default;
  friend auto operator<=>(const CoxWord&, const CoxWord&) = default;

 private:
  friend CoxWord cox_reduce(int rank, std::span<const int> raw);
  CoxWord(int rank, std::vector<int> reduced);

  int rank_;
  std::vector<int> letters_;
};

/// Freely reduced word in F_m.  A letter is a signed generator index:
/// +i stands for x_i and -i for x_i^-1.
class FreeWord {
 public:
  explicit FreeWord(int rank);

  static FreeWord generator(int rank, int index, int sign = +1);

  int rank() const noexcept { return rank_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  friend FreeWord free_reduce(int rank, std::span<const int> raw);
  friend FreeWord free_mul(const FreeWord& u, const FreeWord& v);
  friend FreeWord free_inv(const FreeWord& u);
  FreeWord(int rank, std::vector<int> reduced);

  int rank_;
  std::vector<int> letters_;
};

/// Exponent sums of a free word; entry i-1 belongs to x_i.
using ExpVector = std::vector<std::int64_t>;

// --- W_n ------------------------------------------------------------------

/// Deletes equal adjacent letters until none remain.  Throws InputError when
/// an index lies outside 1..rank.
CoxWord cox_reduce(int rank, std::span<const int> raw);
CoxWord cox_mul(const CoxWord& u, const CoxWord& v);
/// Letter reversal; every generator is an involution.
CoxWord cox_inv(const CoxWord& u);

/// The sign character: every s_i goes to -1.
int sign(const CoxWord& u) noexcept;

struct CyclicDecomposition {
  CoxWord core;
  CoxWord conjugator;
};

/// Greedily strips equal first/last letters.  u == conjugator * core *
/// conjugator^-1 and the core is cyclically reduced.
CyclicDecomposition cyclic_reduce(const CoxWord& u);

/// The generator an involution is conjugate to, or nullopt when u is the
/// identity or has infinite order.
std::optional<int> involution_class(const CoxWord& u);

/// Rewrites an even-length word in the basis x_i = s_i s_{i+1} of the sign
/// kernel.  Throws PreconditionError on odd length.
FreeWord to_free_basis(const CoxWord& u);
/// Substitutes x_i = s_i s_{i+1}; the result lives in W_{rank+1}.
CoxWord from_free_basis(const FreeWord& w);

/// W_n -> W_2: keeps s_1, s_2 and kills every other generator.
CoxWord project_to_w2(const CoxWord& u);

// --- F_m ------------------------------------------------------------------

FreeWord free_reduce(int rank, std::span<const int> raw);
FreeWord free_mul(const FreeWord& u, const FreeWord& v);
FreeWord free_inv(const FreeWord& u);

ExpVector abelianize(const FreeWord& w);

inline CoxWord operator*(const CoxWord& u, const CoxWord& v) {
  return cox_mul(u, v);
}
inline FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  return free_mul(u, v);
}

std::size_t hash_value(const CoxWord& u) noexcept;
std::size_t hash_value(const FreeWord& w) noexcept;

}  // namespace autw

template <>
struct std::hash<autw::CoxWord> {
  std::size_t operator()(const autw::CoxWord& u) const noexcept {
    return autw::hash_value(u);
  }
};

template <>
struct std::hash<autw::FreeWord> {
  std::size_t operator()(const autw::FreeWord& w) const noexcept {
    return autw::hash_value(w);
  }
};
