#include "autw/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "autw/errors.hpp"

namespace autw {

Permutation Permutation::identity(int degree) {
  if (degree < 0) {
    throw InputError("permutation degree must be non-negative");
  }
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) ||
        seen[static_cast<std::size_t>(v)]) {
      throw InputError("image list is not a permutation of 1.." +
                       std::to_string(images.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  auto p = identity(degree);
  if (a < 1 || a > degree || b < 1 || b > degree) {
    throw InputError("transposition point outside 1.." + std::to_string(degree));
  }
  std::swap(p.images_[static_cast<std::size_t>(a - 1)],
            p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  auto result = identity(degree);
  // Apply rightmost cycle first.
  for (const auto& cycle : cycles) {
    std::vector<int> seen;
    for (int v : cycle) {
      if (v < 1 || v > degree) {
        throw InputError("cycle point " + std::to_string(v) + " outside 1.." +
                         std::to_string(degree));
      }
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
        throw InputError("repeated point " + std::to_string(v) + " in cycle");
      }
      seen.push_back(v);
    }
    auto c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[static_cast<std::size_t>(cycle[i] - 1)] =
          cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !done[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      done[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    if (cycle.size() >= 2) out.push_back(std::move(cycle));
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InputError("permutation degree mismatch");
  }
  std::vector<int> images(q.images_.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    images[k] = p(q.images_[k]);
  }
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "id";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_permutation(int degree, std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError(pos, "trailing text after `id`");
    return Permutation::identity(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError(pos, "expected `(`");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() &&
             (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) {
        ++pos;
      }
      if (pos == text.size()) throw ParseError(pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') {
        throw ParseError(pos, "expected a point number");
      }
      const std::size_t num_start = pos;
      long value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError(num_start, "point too large");
        ++pos;
      }
      if (value < 1 || value > degree) {
        throw ParseError(num_start, "point " + std::to_string(value) +
                                        " outside 1.." + std::to_string(degree));
      }
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end()) {
        throw ParseError(num_start, "repeated point in cycle");
      }
      cycle.push_back(static_cast<int>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (cycles.empty() && text.find('(') == std::string_view::npos) {
    throw ParseError(0, "empty permutation; write `id`");
  }
  return Permutation::from_cycles(degree, cycles);
}

std::vector<Permutation> all_permutations(int degree) {
  auto images = Permutation::identity(degree).images();
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace autw
