#pragma once

// Endomorphisms of W_n and F_m given by generator images.
//
// Composition convention: compose(f, g) is "f after g", i.e. the right
// factor acts first, (f * g)(w) = f(g(w)).  Under this convention the
// product sigma(1,2) sigma(1,3) sigma(2,1) sigma(2,3) of W_3 restricts on the
// sign kernel to conjugation by x_1 = s_1 s_2 (see tests/automorphisms_test).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "autw/permutation.hpp"
#include "autw/words.hpp"

namespace autw {

/// Endomorphism of W_n.  Every image squares to the identity, so the map
/// respects the relators s_i^2.
class CoxEndo {
 public:
  static CoxEndo identity(int rank);
  /// images[i-1] is the image of s_i.  Throws InputError on a rank mismatch
  /// or an image that is not an involution or trivial.
  static CoxEndo from_images(int rank, std::vector<CoxWord> images);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const CoxWord& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<CoxWord>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const CoxEndo&, const CoxEndo&) = default;

 private:
  explicit CoxEndo(std::vector<CoxWord> images) : images_(std::move(images)) {}
  friend CoxEndo compose(const CoxEndo& f, const CoxEndo& g);
  std::vector<CoxWord> images_;
};

CoxWord apply(const CoxEndo& f, const CoxWord& u);
CoxEndo compose(const CoxEndo& f, const CoxEndo& g);
inline bool aut_equal(const CoxEndo& f, const CoxEndo& g) { return f == g; }

/// Automorphism of W_n carrying an inverse witness.  Built only from the
/// involutive generators and composition, so automorphism status is never
/// guessed.
class CoxAut {
 public:
  static CoxAut identity(int rank);
  /// Throws InvariantViolation unless forward and backward are mutually
  /// inverse on generators.
  static CoxAut from_pair(CoxEndo forward, CoxEndo backward);

  int rank() const noexcept { return forward_.rank(); }
  const CoxEndo& forward() const noexcept { return forward_; }
  const CoxEndo& backward() const noexcept { return backward_; }
  const CoxWord& image(int i) const { return forward_.image(i); }

  CoxAut inverse() const { return CoxAut(backward_, forward_); }

  /// Equality is decided by the forward map alone.
  friend bool operator==(const CoxAut& a, const CoxAut& b) {
    return a.forward_ == b.forward_;
  }

 private:
  CoxAut(CoxEndo forward, CoxEndo backward)
      : forward_(std::move(forward)), backward_(std::move(backward)) {}
  friend CoxAut compose(const CoxAut& f, const CoxAut& g);
  CoxEndo forward_;
  CoxEndo backward_;
};

CoxAut compose(const CoxAut& f, const CoxAut& g);
inline CoxAut operator*(const CoxAut& f, const CoxAut& g) { return compose(f, g); }
inline CoxWord apply(const CoxAut& f, const CoxWord& u) { return apply(f.forward(), u); }
inline bool aut_equal(const CoxAut& f, const CoxAut& g) { return f == g; }

/// Partial conjugation: s_j -> s_i s_j s_i, every other generator fixed.
CoxAut sigma(int i, int j, int n);
/// Graph automorphism s_k -> s_{p(k)}.
CoxAut alpha(const Permutation& p);
/// Conjugation by c: s_k -> c s_k c^-1.
CoxAut inner_cox(const CoxWord& c);

/// Least k <= cutoff with f^k = id, or nullopt when none exists.
std::optional<std::uint64_t> order_with_cutoff(const CoxEndo& f,
                                               std::uint64_t cutoff);
inline std::optional<std::uint64_t> order_with_cutoff(const CoxAut& f,
                                                      std::uint64_t cutoff) {
  return order_with_cutoff(f.forward(), cutoff);
}

/// Indices i moved by f together with every letter of their images.
std::set<int> support(const CoxEndo& f);

/// True iff every image has odd length, so f maps the sign kernel into itself.
bool preserves_kernel(const CoxEndo& f);

// --- F_m ------------------------------------------------------------------

class FreeEndo {
 public:
  static FreeEndo identity(int rank);
  static FreeEndo from_images(int rank, std::vector<FreeWord> images);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const FreeWord& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  explicit FreeEndo(std::vector<FreeWord> images) : images_(std::move(images)) {}
  friend FreeEndo free_compose(const FreeEndo& f, const FreeEndo& g);
  std::vector<FreeWord> images_;
};

FreeWord free_apply(const FreeEndo& f, const FreeWord& w);
FreeEndo free_compose(const FreeEndo& f, const FreeEndo& g);
inline bool free_equal(const FreeEndo& f, const FreeEndo& g) { return f == g; }

/// g_w: x_i -> w x_i w^-1.
FreeEndo inner(const FreeWord& w);

/// Restriction to the sign kernel, written in the basis x_i = s_i s_{i+1}.
/// Throws PreconditionError when f does not preserve the kernel.
FreeEndo iota(const CoxEndo& f);
inline FreeEndo iota(const CoxAut& f) { return iota(f.forward()); }

// --- special automorphisms and W_2 ---------------------------------------

/// True iff each s_i is sent to a conjugate of itself.
bool is_special(const CoxEndo& f);
inline bool is_special(const CoxAut& f) { return is_special(f.forward()); }

/// i -> class of the image of s_i.  Throws InvariantViolation when an image
/// is not conjugate to a generator.
Permutation spe_quotient_perm(const CoxEndo& f);
inline Permutation spe_quotient_perm(const CoxAut& f) {
  return spe_quotient_perm(f.forward());
}

/// The automorphism of W_2 induced through the projection W_n -> W_2.
/// Throws NotInducible when some s_k, k >= 3, does not die under the
/// projection (for the map or its inverse witness).
CoxAut induced_on_w2(const CoxAut& f);

std::size_t hash_value(const CoxEndo& f) noexcept;
std::size_t hash_value(const FreeEndo& f) noexcept;

}  // namespace autw

template <>
struct std::hash<autw::CoxEndo> {
  std::size_t operator()(const autw::CoxEndo& f) const noexcept {
    return autw::hash_value(f);
  }
};

template <>
struct std::hash<autw::FreeEndo> {
  std::size_t operator()(const autw::FreeEndo& f) const noexcept {
    return autw::hash_value(f);
  }
};

template <>
struct std::hash<autw::CoxAut> {
  std::size_t operator()(const autw::CoxAut& f) const noexcept {
    return autw::hash_value(f.forward());
  }
};
