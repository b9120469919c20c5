#pragma once

// Verification suites for the explicit computations behind the structural
// results on Aut(W_n): conjugation relations, the free subgroup generated by
// two inner automorphisms, the special automorphisms and W_2, the
// homomorphism dichotomy through Sym(n), and the small-rank isomorphism
// Aut(W_3) -> Aut(F_2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autw/automorphisms.hpp"
#include "autw/diagram.hpp"
#include "autw/permutation.hpp"
#include "autw/report.hpp"

namespace autw {

/// alpha(p) sigma(i,j) alpha(p)^-1 == sigma(p(i),p(j)) for every p in
/// Sym(n) and every i != j.  Emits one line per permutation.
Report verify_conjugation_relations(int n);

/// All normal subgroups of Sym(n), 2 <= n <= 6, each sorted, ordered by
/// size.  Throws InputError outside that range.
std::vector<std::vector<Permutation>> normal_subgroups_sym(int n);

/// Needs n >= 4.
Report theorem_d_check(int n);

/// sigma(1,2)...sigma(1,n) sigma(2,1) sigma(2,3)...sigma(2,n), the word whose
/// embedding image is conjugation by x_1 (row = 1), resp. x_2 (row = 2).
CoxAut prop34_word(int n, int row);

/// Needs n >= 3 and ball >= 1.
Report prop34_check(int n, int ball);

/// Needs cutoff >= 8.
Report spe_w2_check(std::uint64_t cutoff);

struct Lemma23Witness {
  std::string target;  ///< `swap`, `invert-x1` or `transvection`
  std::vector<GeneratorTag> word;  ///< product, rightmost factor acts first
  FreeEndo image;
};

/// Breadth-first search over products of length <= max_length in Y (n = 3)
/// for words whose embedding images are the Nielsen generators
///   swap: x1 <-> x2,  invert-x1: x1 -> x1^-1,  transvection: x1 -> x1 x2.
/// Returns nullopt when some generator is not reached.
std::optional<std::vector<Lemma23Witness>> lemma23_surjectivity_search(int max_length);

/// Wraps lemma23_surjectivity_search in a report.
Report lemma23_check(int max_length);

std::string format_tag_word(const std::vector<GeneratorTag>& word);

}  // namespace autw
