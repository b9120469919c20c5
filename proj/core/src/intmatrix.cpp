#include "autw/intmatrix.hpp"

#include <string>

#include "autw/errors.hpp"

namespace autw {

namespace {

using ModMatrix = std::vector<std::uint64_t>;
__extension__ using UInt128 = unsigned __int128;

// 2^61 - 1; a^t = I over Z implies a^t = I modulo any prime, so a mismatch
// here settles infinite order without powering over Z.
constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t reduce_mod(const Integer& v, std::uint64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

ModMatrix to_mod(const IntMatrix& a, std::uint64_t p) {
  const std::size_t d = a.dim();
  ModMatrix out(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) out[r * d + c] = reduce_mod(a(r, c), p);
  }
  return out;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::size_t d,
                  std::uint64_t p) {
  ModMatrix out(d * d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint64_t ark = a[r * d + k];
      if (ark == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        const auto prod = static_cast<UInt128>(ark) * b[k * d + c];
        out[r * d + c] =
            static_cast<std::uint64_t>((out[r * d + c] + prod) % p);
      }
    }
  }
  return out;
}

bool mod_is_identity(const ModMatrix& a, std::size_t d) {
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (a[r * d + c] != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

ModMatrix mod_pow(ModMatrix base, std::uint64_t e, std::size_t d, std::uint64_t p) {
  ModMatrix result(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) result[i * d + i] = 1;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, base, d, p);
    e >>= 1;
    if (e > 0) base = mod_mul(base, base, d, p);
  }
  return result;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(std::size_t dim) { return IntMatrix(dim); }

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw InputError("matrix is not square: row " + std::to_string(r + 1) +
                       " has " + std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IntMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InputError("matrix dimension mismatch: " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
  const std::size_t d = a.dim();
  auto out = IntMatrix::zero(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

IntMatrix mat_pow(const IntMatrix& a, std::uint64_t exponent) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mat_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mat_mul(base, base);
  }
  return result;
}

Integer mat_det(const IntMatrix& a) {
  const std::size_t d = a.dim();
  if (d == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < d && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == d) return 0;
      for (std::size_t c = 0; c < d; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < d; ++r) {
      for (std::size_t c = k + 1; c < d; ++c) {
        m(r, c) = (m(r, c) * m(k, k) - m(r, k) * m(k, c)) / prev;
      }
      m(r, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(d - 1, d - 1);
}

IntMatrix abelianization_matrix(const FreeEndo& f) {
  const auto d = static_cast<std::size_t>(f.rank());
  auto m = IntMatrix::zero(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto column = abelianize(f.images()[j]);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = column[i];
  }
  return m;
}

std::uint64_t order_mod3(const IntMatrix& a) {
  const std::size_t d = a.dim();
  if (d == 0) return 1;
  const auto base = to_mod(a, 3);
  if (reduce_mod(mat_det(a), 3) == 0) {
    throw InputError("matrix is singular modulo 3");
  }
  // Element orders in GL_d(F_3) stay below 3^d.
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < d && bound < (std::uint64_t{1} << 40); ++i) bound *= 3;
  ModMatrix power = base;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (mod_is_identity(power, d)) return k;
    power = mod_mul(power, base, d, 3);
  }
  throw InvariantViolation("mod-3 order exceeds the GL_d(F_3) bound");
}

std::optional<std::uint64_t> finite_order_exact(const IntMatrix& a) {
  const Integer det = mat_det(a);
  if (det != 1 && det != -1) {
    throw InputError("finite_order_exact needs det = +-1, got " + det.str());
  }
  const std::uint64_t t = order_mod3(a);
  if (!mod_is_identity(mod_pow(to_mod(a, kFilterPrime), t, a.dim(), kFilterPrime),
                       a.dim())) {
    return std::nullopt;
  }
  if (!mat_pow(a, t).is_identity()) return std::nullopt;
  return t;
}

std::string format_matrix(const IntMatrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (c) out += ' ';
      out += a(r, c).str();
    }
  }
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t') {
      ++pos;
    } else if (ch == ';') {
      if (rows.back().empty()) throw ParseError(pos, "empty matrix row");
      rows.emplace_back();
      ++pos;
    } else if (ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')) {
      const std::size_t start = pos;
      if (ch == '-' || ch == '+') ++pos;
      const std::size_t digits = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == digits) throw ParseError(start, "sign without digits");
      if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
          text[pos] != ';') {
        throw ParseError(pos, "unexpected character in matrix entry");
      }
      Integer value(std::string(text.substr(digits, pos - digits)));
      rows.back().push_back(ch == '-' ? Integer(-value) : value);
    } else {
      throw ParseError(pos, std::string("unexpected character `") + ch + "`");
    }
  }
  if (rows.size() == 1 && rows[0].empty()) {
    throw ParseError(0, "empty matrix");
  }
  if (rows.back().empty()) throw ParseError(text.size(), "empty matrix row");
  return IntMatrix::from_rows(rows);
}

}  // namespace autw
