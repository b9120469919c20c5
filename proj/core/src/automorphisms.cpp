#include "autw/automorphisms.hpp"

#include <string>

#include "autw/errors.hpp"

namespace autw {

namespace {

void require_same_rank(int a, int b, const char* op) {
  if (a != b) {
    throw InputError(std::string("rank mismatch in ") + op + ": " +
                     std::to_string(a) + " vs " + std::to_string(b));
  }
}

std::size_t combine(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

// --- CoxEndo --------------------------------------------------------------

CoxEndo CoxEndo::identity(int rank) {
  std::vector<CoxWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(CoxWord::generator(rank, i));
  return CoxEndo(std::move(images));
}

CoxEndo CoxEndo::from_images(int rank, std::vector<CoxWord> images) {
  if (rank < 1 || static_cast<int>(images.size()) != rank) {
    throw InputError("expected " + std::to_string(rank) + " generator images");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    require_same_rank(images[i].rank(), rank, "CoxEndo::from_images");
    if (!cox_mul(images[i], images[i]).is_identity()) {
      throw InputError("image of s" + std::to_string(i + 1) +
                       " is not an involution; the relator s_i^2 would fail");
    }
  }
  return CoxEndo(std::move(images));
}

bool CoxEndo::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& w = images_[i];
    if (w.length() != 1 || w.letters()[0] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

CoxWord apply(const CoxEndo& f, const CoxWord& u) {
  require_same_rank(f.rank(), u.rank(), "apply");
  std::size_t total = 0;
  for (int a : u.letters()) total += f.image(a).length();
  std::vector<int> raw;
  raw.reserve(total);
  for (int a : u.letters()) {
    const auto& img = f.image(a).letters();
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return cox_reduce(f.rank(), raw);
}

CoxEndo compose(const CoxEndo& f, const CoxEndo& g) {
  require_same_rank(f.rank(), g.rank(), "compose");
  std::vector<CoxWord> images;
  images.reserve(g.images().size());
  for (const auto& w : g.images()) images.push_back(apply(f, w));
  return CoxEndo(std::move(images));
}

// --- CoxAut ---------------------------------------------------------------

CoxAut CoxAut::identity(int rank) {
  return CoxAut(CoxEndo::identity(rank), CoxEndo::identity(rank));
}

CoxAut CoxAut::from_pair(CoxEndo forward, CoxEndo backward) {
  require_same_rank(forward.rank(), backward.rank(), "CoxAut::from_pair");
  if (!compose(forward, backward).is_identity() ||
      !compose(backward, forward).is_identity()) {
    throw InvariantViolation("backward map is not an inverse witness");
  }
  return CoxAut(std::move(forward), std::move(backward));
}

CoxAut compose(const CoxAut& f, const CoxAut& g) {
  return CoxAut(compose(f.forward_, g.forward_),
                compose(g.backward_, f.backward_));
}

CoxAut sigma(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw InputError("sigma(" + std::to_string(i) + "," + std::to_string(j) +
                     ") needs 1 <= i != j <= " + std::to_string(n));
  }
  auto images = CoxEndo::identity(n).images();
  const int raw[] = {i, j, i};
  images[static_cast<std::size_t>(j - 1)] = cox_reduce(n, raw);
  auto f = CoxEndo::from_images(n, std::move(images));
  return CoxAut::from_pair(f, f);
}

CoxAut alpha(const Permutation& p) {
  const int n = p.degree();
  auto build = [n](const Permutation& q) {
    std::vector<CoxWord> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) images.push_back(CoxWord::generator(n, q(k)));
    return CoxEndo::from_images(n, std::move(images));
  };
  return CoxAut::from_pair(build(p), build(p.inverse()));
}

CoxAut inner_cox(const CoxWord& c) {
  const int n = c.rank();
  const CoxWord c_inv = cox_inv(c);
  auto build = [n](const CoxWord& a, const CoxWord& a_inv) {
    std::vector<CoxWord> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      images.push_back(cox_mul(cox_mul(a, CoxWord::generator(n, k)), a_inv));
    }
    return CoxEndo::from_images(n, std::move(images));
  };
  return CoxAut::from_pair(build(c, c_inv), build(c_inv, c));
}

std::optional<std::uint64_t> order_with_cutoff(const CoxEndo& f,
                                               std::uint64_t cutoff) {
  if (cutoff < 1) throw InputError("order cutoff must be at least 1");
  CoxEndo power = f;
  for (std::uint64_t k = 1; k <= cutoff; ++k) {
    if (power.is_identity()) return k;
    if (k < cutoff) power = compose(power, f);
  }
  return std::nullopt;
}

std::set<int> support(const CoxEndo& f) {
  std::set<int> out;
  for (int i = 1; i <= f.rank(); ++i) {
    const auto& w = f.image(i);
    if (w.length() == 1 && w.letters()[0] == i) continue;
    out.insert(i);
    out.insert(w.letters().begin(), w.letters().end());
  }
  return out;
}

bool preserves_kernel(const CoxEndo& f) {
  for (const auto& w : f.images()) {
    if (sign(w) != -1) return false;
  }
  return true;
}

// --- FreeEndo -------------------------------------------------------------

FreeEndo FreeEndo::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, i));
  return FreeEndo(std::move(images));
}

FreeEndo FreeEndo::from_images(int rank, std::vector<FreeWord> images) {
  if (rank < 0 || static_cast<int>(images.size()) != rank) {
    throw InputError("expected " + std::to_string(rank) + " free generator images");
  }
  for (const auto& w : images) {
    require_same_rank(w.rank(), rank, "FreeEndo::from_images");
  }
  return FreeEndo(std::move(images));
}

FreeWord free_apply(const FreeEndo& f, const FreeWord& w) {
  require_same_rank(f.rank(), w.rank(), "free_apply");
  std::vector<int> raw;
  for (int a : w.letters()) {
    if (a > 0) {
      const auto& img = f.image(a).letters();
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      const auto& img = f.image(-a).letters();
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(-*it);
    }
  }
  return free_reduce(f.rank(), raw);
}

FreeEndo free_compose(const FreeEndo& f, const FreeEndo& g) {
  require_same_rank(f.rank(), g.rank(), "free_compose");
  std::vector<FreeWord> images;
  images.reserve(g.images().size());
  for (const auto& w : g.images()) images.push_back(free_apply(f, w));
  return FreeEndo(std::move(images));
}

FreeEndo inner(const FreeWord& w) {
  const int m = w.rank();
  const FreeWord w_inv = free_inv(w);
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    images.push_back(free_mul(free_mul(w, FreeWord::generator(m, i)), w_inv));
  }
  return FreeEndo::from_images(m, std::move(images));
}

FreeEndo iota(const CoxEndo& f) {
  if (!preserves_kernel(f)) {
    throw PreconditionError("iota: endomorphism does not preserve the sign kernel");
  }
  const int n = f.rank();
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int i = 1; i < n; ++i) {
    images.push_back(to_free_basis(cox_mul(f.image(i), f.image(i + 1))));
  }
  return FreeEndo::from_images(n - 1, std::move(images));
}

// --- special automorphisms ------------------------------------------------

bool is_special(const CoxEndo& f) {
  for (int i = 1; i <= f.rank(); ++i) {
    if (involution_class(f.image(i)) != i) return false;
  }
  return true;
}

Permutation spe_quotient_perm(const CoxEndo& f) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (int i = 1; i <= f.rank(); ++i) {
    const auto cls = involution_class(f.image(i));
    if (!cls) {
      throw InvariantViolation("image of s" + std::to_string(i) +
                               " is not conjugate to a generator");
    }
    images.push_back(*cls);
  }
  try {
    return Permutation::from_images(std::move(images));
  } catch (const InputError&) {
    throw InvariantViolation("involution classes of the images are not a permutation");
  }
}

CoxAut induced_on_w2(const CoxAut& f) {
  auto descend = [](const CoxEndo& g) {
    for (int k = 3; k <= g.rank(); ++k) {
      if (!project_to_w2(g.image(k)).is_identity()) {
        throw NotInducible("image of s" + std::to_string(k) +
                           " survives the projection to W_2");
      }
    }
    return CoxEndo::from_images(
        2, {project_to_w2(g.image(1)), project_to_w2(g.image(2))});
  };
  if (f.rank() < 2) throw InputError("induced_on_w2 needs rank at least 2");
  auto forward = descend(f.forward());
  auto backward = descend(f.backward());
  try {
    return CoxAut::from_pair(std::move(forward), std::move(backward));
  } catch (const InvariantViolation&) {
    throw NotInducible("projected maps are not mutually inverse");
  }
}

std::size_t hash_value(const CoxEndo& f) noexcept {
  std::size_t h = 0;
  for (const auto& w : f.images()) h = combine(h, hash_value(w));
  return h;
}

std::size_t hash_value(const FreeEndo& f) noexcept {
  std::size_t h = 0;
  for (const auto& w : f.images()) h = combine(h, hash_value(w));
  return h;
}

}  // namespace autw
