#include "autw/diagram.hpp"

#include <algorithm>
#include <cstdlib>

#include "autw/errors.hpp"
#include "autw/intmatrix.hpp"

namespace autw {

GeneratorTag GeneratorTag::alpha_adj(int i) {
  if (i < 1) throw InputError("alpha(i,i+1) needs i >= 1");
  return GeneratorTag(i);
}

CoxAut GeneratorTag::realize(int n) const {
  if (is_sigma()) return sigma(1, 2, n);
  if (code_ >= n) {
    throw InputError(name() + " is not a generator of Aut(W_" + std::to_string(n) + ")");
  }
  return alpha(Permutation::transposition(n, code_, code_ + 1));
}

std::string GeneratorTag::name() const {
  if (is_sigma()) return "sigma(1,2)";
  return "alpha(" + std::to_string(code_) + "," + std::to_string(code_ + 1) + ")";
}

GeneratorTag GeneratorTag::parse(int n, std::string_view text) {
  if (text == "sigma(1,2)") return sigma12();
  for (int i = 1; i < n; ++i) {
    if (text == GeneratorTag(i).name()) return GeneratorTag(i);
  }
  throw ParseError(0, "unknown generator tag `" + std::string(text) + "`");
}

std::string format_label(EdgeLabel m) {
  return m == kInfiniteLabel ? std::string("inf") : std::to_string(m);
}

std::vector<GeneratorTag> generating_set_y(int n) {
  std::vector<GeneratorTag> y{GeneratorTag::sigma12()};
  for (int i = 1; i < n; ++i) y.push_back(GeneratorTag::alpha_adj(i));
  return y;
}

CoxeterDiagram::CoxeterDiagram(int n) : n_(n), vertices_(generating_set_y(n)) {}

EdgeLabel CoxeterDiagram::label(GeneratorTag a, GeneratorTag b) const {
  if (a == b) return 1;
  if (b.is_sigma()) std::swap(a, b);
  if (a.is_sigma()) {
    if (b.alpha_index() == 1) return kInfiniteLabel;
    if (b.alpha_index() == 2) return 4;
    return 2;
  }
  return std::abs(a.alpha_index() - b.alpha_index()) == 1 ? 3 : 2;
}

std::vector<std::vector<GeneratorTag>> CoxeterDiagram::components(
    const std::vector<GeneratorTag>& members) const {
  std::vector<GeneratorTag> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> comp(sorted.size(), -1);
  int count = 0;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < sorted.size(); ++v) {
        if (comp[v] < 0 && label(sorted[u], sorted[v]) != 2) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<GeneratorTag>> out(static_cast<std::size_t>(count));
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    out[static_cast<std::size_t>(comp[s])].push_back(sorted[s]);
  }
  return out;
}

CoxeterDiagram figure1_diagram(int n) {
  if (n < 3) throw InputError("figure1_diagram needs n >= 3");
  return CoxeterDiagram(n);
}

Report verify_diagram_relations(int n, std::uint64_t cutoff) {
  if (cutoff < 8) throw InputError("verify_diagram_relations needs cutoff >= 8");
  const auto diagram = figure1_diagram(n);
  const auto& y = diagram.vertices();
  Report report;
  for (const auto& a : y) {
    const auto f = a.realize(n);
    report.add(compose(f, f).forward().is_identity(), "involution(" + a.name() + ")",
               "order 2");
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      const auto m = diagram.label(y[i], y[j]);
      const auto product = compose(y[i].realize(n), y[j].realize(n));
      const auto order = order_with_cutoff(product, cutoff);
      const std::string id = "edge(" + y[i].name() + "," + y[j].name() + ")";
      if (m != kInfiniteLabel) {
        const bool pass = order && *order == static_cast<std::uint64_t>(m);
        report.add(pass, id,
                   "label " + std::to_string(m) + " order " +
                       (order ? std::to_string(*order)
                              : "exceeds cutoff " + std::to_string(cutoff)));
        continue;
      }
      report.add(!order, id + ".cutoff",
                 order ? "unexpected finite order " + std::to_string(*order)
                       : "label inf, order exceeds cutoff " + std::to_string(cutoff));
      const auto matrix = abelianization_matrix(iota(product));
      const auto exact = finite_order_exact(matrix);
      report.add(!exact, id + ".matrix",
                 exact ? "matrix has finite order " + std::to_string(*exact)
                       : "abelianized image [" + format_matrix(matrix) +
                             "] has infinite order");
    }
  }
  return report;
}

}  // namespace autw
