#pragma once

// The generating set Y = {sigma(1,2), alpha(1,2), ..., alpha(n-1,n)} of
// Aut(W_n) and the Coxeter diagram of the group it is a quotient of.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autw/automorphisms.hpp"
#include "autw/report.hpp"

namespace autw {

/// One element of Y: sigma(1,2) or the adjacent transposition alpha(i,i+1).
/// Tags order as sigma(1,2) < alpha(1,2) < alpha(2,3) < ...
class GeneratorTag {
 public:
  static GeneratorTag sigma12() { return GeneratorTag(0); }
  static GeneratorTag alpha_adj(int i);

  bool is_sigma() const noexcept { return code_ == 0; }
  /// i for alpha(i,i+1); 0 for sigma(1,2).
  int alpha_index() const noexcept { return code_; }

  CoxAut realize(int n) const;
  /// `sigma(1,2)` or `alpha(i,i+1)`.
  std::string name() const;
  /// Inverse of name(); throws ParseError.
  static GeneratorTag parse(int n, std::string_view text);

  friend auto operator<=>(const GeneratorTag&, const GeneratorTag&) = default;

 private:
  explicit GeneratorTag(int code) : code_(code) {}
  int code_;
};

/// Edge label m(u,v); 2 means the vertices commute (no edge drawn).
using EdgeLabel = int;
inline constexpr EdgeLabel kInfiniteLabel = 0;

std::string format_label(EdgeLabel m);

/// Y in tag order; has exactly n elements.
std::vector<GeneratorTag> generating_set_y(int n);

class CoxeterDiagram {
 public:
  explicit CoxeterDiagram(int n);

  int n() const noexcept { return n_; }
  const std::vector<GeneratorTag>& vertices() const noexcept { return vertices_; }
  EdgeLabel label(GeneratorTag a, GeneratorTag b) const;

  /// Connected components of the sub-diagram on `members`, each sorted,
  /// ordered by least element.
  std::vector<std::vector<GeneratorTag>> components(
      const std::vector<GeneratorTag>& members) const;

 private:
  int n_;
  std::vector<GeneratorTag> vertices_;
};

/// Throws InputError for n < 3.
CoxeterDiagram figure1_diagram(int n);

/// For each pair of Y with finite label m, checks that the product has order
/// exactly m.  For the infinite edge, checks that iteration exceeds `cutoff`
/// and that the abelianized embedding image has infinite order exactly.
Report verify_diagram_relations(int n, std::uint64_t cutoff);

}  // namespace autw
