#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace autw {

/// Bijection of {1..degree}.  Products compose right to left:
/// (p * q)(k) = p(q(k)).
class Permutation {
 public:
  static Permutation identity(int degree);
  /// Takes images[k-1] = p(k); throws InputError unless bijective.
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int degree, int a, int b);
  /// Product of disjoint or overlapping cycles, leftmost cycle applied last.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_even() const;
  /// Disjoint cycles of length >= 2, each starting at its least point.
  std::vector<std::vector<int>> cycles() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// Cycle notation, `(1 2)(3 4)`, or `id`.
std::string format_permutation(const Permutation& p);
/// Accepts `id`, `()`, or cycles separated by spaces or commas such as
/// `(1 2)(3 4)` and `(1,2,3)`.  Throws ParseError with a byte offset.
Permutation parse_permutation(int degree, std::string_view text);

/// All permutations of degree n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int degree);

}  // namespace autw
