#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autw/automorphisms.hpp"

namespace autw {

using Integer = boost::multiprecision::cpp_int;

/// Square matrix over Z with unbounded entries, stored row-major.
class IntMatrix {
 public:
  static IntMatrix identity(std::size_t dim);
  static IntMatrix zero(std::size_t dim);
  /// Throws InputError unless `rows` is square.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }
IntMatrix mat_pow(const IntMatrix& a, std::uint64_t exponent);
/// Fraction-free Bareiss elimination.
Integer mat_det(const IntMatrix& a);

/// Column j holds the exponent sums of f(x_j), so matrix(f o g) =
/// matrix(f) * matrix(g).
IntMatrix abelianization_matrix(const FreeEndo& f);

/// Multiplicative order of `a` reduced mod 3, found by powering in the
/// finite group GL_d(Z/3).  Throws InputError when a is singular mod 3.
std::uint64_t order_mod3(const IntMatrix& a);

/// Exact order decision for a unimodular matrix: reduction mod 3 is
/// injective on finite subgroups of GL_d(Z), so `a` has finite order iff
/// a^t = I with t = order_mod3(a), and then its order is t.  Returns nullopt
/// for infinite order.  Throws InputError when det(a) is not +-1.
std::optional<std::uint64_t> finite_order_exact(const IntMatrix& a);

/// Rows separated by `;`, entries by spaces: `-1 2; 0 1`.
std::string format_matrix(const IntMatrix& a);
IntMatrix parse_matrix(std::string_view text);

}  // namespace autw
