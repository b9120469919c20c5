#include "autw/closure.hpp"

#include <unordered_set>

#include "autw/errors.hpp"

namespace autw {

namespace {

void check_generators(const std::vector<CoxAut>& generators, std::size_t cap) {
  if (cap == 0) throw InputError("closure cap must be at least 1");
  if (generators.empty()) throw InputError("closure needs at least one generator");
  for (const auto& g : generators) {
    if (g.rank() != generators.front().rank()) {
      throw InputError("closure generators have different ranks");
    }
  }
}

}  // namespace

ClosureResult enumerate_closure(const std::vector<CoxAut>& generators, std::size_t cap) {
  check_generators(generators, cap);
  SubgroupEnumeration out;
  out.generators = generators;
  out.elements.push_back(CoxAut::identity(generators.front().rank()));
  std::unordered_set<CoxEndo> seen{out.elements.front().forward()};
  for (std::size_t next = 0; next < out.elements.size(); ++next) {
    for (const auto& g : generators) {
      auto h = compose(g, out.elements[next]);
      if (!seen.insert(h.forward()).second) continue;
      if (out.elements.size() == cap) return CapExceeded{cap};
      out.elements.push_back(std::move(h));
    }
  }
  return out;
}

std::variant<std::size_t, CapExceeded> closure_order(
    const std::vector<CoxAut>& generators, std::size_t cap) {
  check_generators(generators, cap);
  // Set nodes are stable, so the BFS queue can point into the set.
  std::unordered_set<CoxEndo> seen;
  std::vector<const CoxEndo*> queue{
      &*seen.insert(CoxEndo::identity(generators.front().rank())).first};
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (const auto& g : generators) {
      auto [it, inserted] = seen.insert(compose(g.forward(), *queue[next]));
      if (!inserted) continue;
      if (queue.size() == cap) return CapExceeded{cap};
      queue.push_back(&*it);
    }
  }
  return queue.size();
}

}  // namespace autw
