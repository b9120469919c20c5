#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "autw/automorphisms.hpp"

namespace autw {

/// A finite subgroup of Aut(W_n) listed element by element, in breadth-first
/// discovery order starting from the identity.
struct SubgroupEnumeration {
  std::vector<CoxAut> generators;
  std::vector<CoxAut> elements;
  std::size_t order() const noexcept { return elements.size(); }
};

/// The closure grew past `cap` elements.
struct CapExceeded {
  std::size_t cap;
};

using ClosureResult = std::variant<SubgroupEnumeration, CapExceeded>;

/// Breadth-first closure of {id} under left multiplication by the
/// generators, deduplicated by normal forms.  Throws InputError for an empty
/// generator list of unknown rank, mixed ranks or cap == 0.
ClosureResult enumerate_closure(const std::vector<CoxAut>& generators, std::size_t cap);

/// Order only; skips materializing inverse witnesses.
std::variant<std::size_t, CapExceeded> closure_order(
    const std::vector<CoxAut>& generators, std::size_t cap);

}  // namespace autw
