#include "autw/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "autw/closure.hpp"
#include "autw/errors.hpp"
#include "autw/text_format.hpp"

namespace autw {

namespace {

bool commute(const CoxAut& a, const CoxAut& b) {
  return aut_equal(compose(a, b), compose(b, a));
}

bool is_involution(const CoxAut& a) { return compose(a, a).forward().is_identity(); }

std::string pair_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Sym(n) with a multiplication table; elements indexed in lexicographic
// order of image lists.
class SymTable {
 public:
  explicit SymTable(int n) : elements_(all_permutations(n)) {
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index.emplace(elements_[i], static_cast<int>(i));
    }
    const std::size_t size = elements_.size();
    mul_.resize(size * size);
    inv_.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
      inv_[a] = index.at(elements_[a].inverse());
      for (std::size_t b = 0; b < size; ++b) {
        mul_[a * size + b] = index.at(elements_[a] * elements_[b]);
      }
    }
  }

  std::size_t size() const { return elements_.size(); }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  const Permutation& element(int a) const { return elements_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<Permutation> elements_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

using Subset = std::vector<char>;

Subset generated(const SymTable& g, const std::vector<int>& gens) {
  Subset in(g.size(), 0);
  std::vector<int> queue{0};  // index 0 is the identity
  in[0] = 1;
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (int s : gens) {
      const int h = g.mul(s, queue[next]);
      if (!in[static_cast<std::size_t>(h)]) {
        in[static_cast<std::size_t>(h)] = 1;
        queue.push_back(h);
      }
    }
  }
  return in;
}

// Complex product N*M of two normal subgroups (itself a normal subgroup).
Subset product(const SymTable& g, const Subset& a, const Subset& b) {
  Subset out(g.size(), 0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (b[y]) out[static_cast<std::size_t>(g.mul(static_cast<int>(x), static_cast<int>(y)))] = 1;
    }
  }
  return out;
}

Permutation even_with(int n, int at3, int at4) {
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  images[2] = at3;
  images[3] = at4;
  int next = 1;
  for (int k = 1; k <= n; ++k) {
    if (k == 3 || k == 4) continue;
    while (next == at3 || next == at4) ++next;
    images[static_cast<std::size_t>(k - 1)] = next++;
  }
  auto p = Permutation::from_images(std::move(images));
  if (!p.is_even()) p = p * Permutation::transposition(n, 1, 2);
  return p;
}

}  // namespace

Report verify_conjugation_relations(int n) {
  if (n < 2) throw InputError("verify relations needs n >= 2");
  Report report;
  for (const auto& p : all_permutations(n)) {
    const auto a = alpha(p);
    const auto a_inv = a.inverse();
    int good = 0;
    int total = 0;
    std::string first_bad;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++total;
        if (aut_equal(a * sigma(i, j, n) * a_inv, sigma(p(i), p(j), n))) {
          ++good;
        } else if (first_bad.empty()) {
          first_bad = " first failure sigma" + pair_name(i, j);
        }
      }
    }
    report.add(good == total, "conjugation(p=" + format_permutation(p) + ")",
               std::to_string(good) + "/" + std::to_string(total) +
                   " relations alpha_p sigma_ij alpha_p^-1 = sigma_p(i)p(j)" + first_bad);
  }
  return report;
}

std::vector<std::vector<Permutation>> normal_subgroups_sym(int n) {
  if (n < 2 || n > 6) throw InputError("normal_subgroups_sym supports 2 <= n <= 6");
  const SymTable g(n);
  const int size = static_cast<int>(g.size());
  // Conjugacy classes by orbits of conjugation.
  std::vector<int> class_of(g.size(), -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < size; ++x) {
    if (class_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < size; ++h) {
      const int c = g.mul(g.mul(h, x), g.inv(h));
      if (class_of[static_cast<std::size_t>(c)] < 0) {
        class_of[static_cast<std::size_t>(c)] = static_cast<int>(classes.size());
        cls.push_back(c);
      }
    }
    classes.push_back(std::move(cls));
  }
  std::vector<Subset> class_closures;
  for (const auto& cls : classes) class_closures.push_back(generated(g, cls));

  // Every normal subgroup is the join of the normal closures of its classes.
  std::set<Subset> found;
  std::vector<Subset> work{generated(g, {})};
  found.insert(work.front());
  while (!work.empty()) {
    const Subset current = work.back();
    work.pop_back();
    for (const auto& c : class_closures) {
      auto joined = product(g, current, c);
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }

  std::vector<std::vector<Permutation>> out;
  for (const auto& s : found) {
    std::vector<Permutation> elems;
    for (int x = 0; x < size; ++x) {
      if (s[static_cast<std::size_t>(x)]) elems.push_back(g.element(x));
    }
    std::sort(elems.begin(), elems.end());
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Report theorem_d_check(int n) {
  if (n < 4) throw InputError("theorem_d_check needs n >= 4");
  Report report;
  const std::string pre = "theorem-d(n=" + std::to_string(n) + ")";
  const auto a12 = alpha(Permutation::transposition(n, 1, 2));
  const auto s34 = sigma(3, 4, n);

  report.add(is_involution(a12), pre + ".involution(alpha(1,2))");
  report.add(is_involution(s34), pre + ".involution(sigma(3,4))");
  report.add(commute(a12, s34), pre + ".commute(alpha(1,2),sigma(3,4))",
             "image is in Z2 x Z2 when Alt(n) lies in the kernel");

  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      if (k == l) continue;
      const auto p = even_with(n, k, l);
      const auto a = alpha(p);
      const bool ok = p.is_even() && p(3) == k && p(4) == l &&
                      aut_equal(a * s34 * a.inverse(), sigma(k, l, n));
      report.add(ok, pre + ".generate(sigma" + pair_name(k, l) + ")",
                 "= alpha_p sigma(3,4) alpha_p^-1 with even p=" + format_permutation(p));
    }
  }
  for (int i = 1; i < n; ++i) {
    const auto t = Permutation::transposition(n, i, i + 1);
    const auto even = t * Permutation::transposition(n, 1, 2);
    const bool ok = even.is_even() && aut_equal(alpha(t), alpha(even) * a12);
    report.add(ok, pre + ".generate(alpha" + pair_name(i, i + 1) + ")",
               "= alpha_p alpha(1,2) with even p=" + format_permutation(even));
  }

  if (n <= 6) {
    // Every nontrivial normal subgroup of Sym(n) contains Alt(n), except
    // the Klein four-group when n = 4.
    const auto subgroups = normal_subgroups_sym(n);
    std::vector<Permutation> alt;
    for (const auto& p : all_permutations(n)) {
      if (p.is_even()) alt.push_back(p);
    }
    bool ok = true;
    std::string shape;
    for (const auto& h : subgroups) {
      if (!shape.empty()) shape += ",";
      shape += std::to_string(h.size());
      if (h.size() == 1) continue;
      const bool contains_alt =
          std::includes(h.begin(), h.end(), alt.begin(), alt.end());
      if (!contains_alt && !(n == 4 && h.size() == 4)) ok = false;
    }
    report.add(ok, pre + ".kernel-dichotomy", "normal subgroup orders " + shape);
  }

  if (n == 4) {
    const auto result = closure_order(
        {sigma(1, 2, 4), alpha(Permutation::transposition(4, 2, 3)),
         alpha(Permutation::transposition(4, 3, 4))},
        100000);
    const auto* order = std::get_if<std::size_t>(&result);
    report.add(order && 48 % *order == 0, pre + ".finite(<sigma(1,2),alpha(2,3),alpha(3,4)>)",
               order ? "order " + std::to_string(*order) + " divides 48"
                     : std::string("closure exceeded cap"));
  }
  return report;
}

CoxAut prop34_word(int n, int row) {
  if (n < 3 || row < 1 || row + 1 > n) throw InputError("prop34_word needs n >= 3, 1 <= row < n");
  CoxAut w = CoxAut::identity(n);
  for (int i : {row, row + 1}) {
    for (int j = 1; j <= n; ++j) {
      if (j != i) w = w * sigma(i, j, n);
    }
  }
  return w;
}

Report prop34_check(int n, int ball) {
  if (n < 3 || ball < 1) throw InputError("prop34_check needs n >= 3 and ball >= 1");
  Report report;
  const std::string pre = "prop34(n=" + std::to_string(n) + ")";
  const int m = n - 1;
  const auto w1 = prop34_word(n, 1);
  const auto w2 = prop34_word(n, 2);
  const auto x1 = FreeWord::generator(m, 1);
  const auto x2 = FreeWord::generator(m, 2);
  const FreeEndo g1 = iota(w1);
  const FreeEndo g2 = iota(w2);
  report.add(free_equal(g1, inner(x1)), pre + ".iota(word1)=g_x1",
             "word1 = sigma(1,j) j!=1, then sigma(2,j) j!=2");
  report.add(free_equal(g2, inner(x2)), pre + ".iota(word2)=g_x2",
             "word2 = sigma(2,j) j!=2, then sigma(3,j) j!=3");
  report.add(free_equal(iota(w1.inverse()), inner(free_inv(x1))) &&
                 free_equal(iota(w2.inverse()), inner(free_inv(x2))),
             pre + ".iota(inverse witnesses)");

  // Reduced words in g1, g1^-1, g2, g2^-1; letter codes +-1, +-2.
  const std::map<int, FreeEndo> letters{
      {1, g1}, {-1, iota(w1.inverse())}, {2, g2}, {-2, iota(w2.inverse())}};
  struct Entry {
    FreeEndo value;
    int last;
  };
  std::vector<Entry> level{{FreeEndo::identity(m), 0}};
  std::unordered_set<FreeEndo> seen{level.front().value};
  std::size_t total = 1;
  std::size_t collisions = 0;
  std::size_t last_level = 0;
  for (int len = 1; len <= ball; ++len) {
    std::vector<Entry> next;
    for (const auto& e : level) {
      for (const auto& [code, g] : letters) {
        if (code == -e.last) continue;
        auto v = free_compose(e.value, g);
        if (!seen.insert(v).second) ++collisions;
        next.push_back({std::move(v), code});
      }
    }
    total += next.size();
    last_level = next.size();
    level = std::move(next);
  }
  report.add(collisions == 0, pre + ".free-ball(L=" + std::to_string(ball) + ")",
             std::to_string(total) + " reduced words of length <= " + std::to_string(ball) +
                 " (" + std::to_string(last_level) + " of length " + std::to_string(ball) +
                 "), " + std::to_string(collisions) + " coincidences");
  return report;
}

Report spe_w2_check(std::uint64_t cutoff) {
  if (cutoff < 8) throw InputError("spe_w2_check needs cutoff >= 8");
  Report report;
  const auto s12 = sigma(1, 2, 2);
  const auto s21 = sigma(2, 1, 2);
  report.add(is_involution(s12), "spe.involution(sigma(1,2))", "in Aut(W_2)");
  report.add(is_involution(s21), "spe.involution(sigma(2,1))", "in Aut(W_2)");
  report.add(is_special(s12), "spe.special(sigma(1,2))");
  report.add(is_special(s21), "spe.special(sigma(2,1))");
  const auto order = order_with_cutoff(s12 * s21, cutoff);
  report.add(!order, "spe.infinite-dihedral",
             order ? "sigma(1,2) sigma(2,1) has order " + std::to_string(*order)
                   : "order of sigma(1,2) sigma(2,1) exceeds " + std::to_string(cutoff));

  for (int n : {4, 5}) {
    const std::string pre = "spe(n=" + std::to_string(n) + ")";
    bool w12 = false;
    bool w21 = false;
    try {
      w12 = aut_equal(induced_on_w2(sigma(1, 2, n)), s12);
      w21 = aut_equal(induced_on_w2(sigma(2, 1, n)), s21);
    } catch (const NotInducible&) {
    }
    report.add(w12, pre + ".surjective(sigma(1,2))", "Psi(sigma(1,2)) = sigma(1,2) on W_2");
    report.add(w21, pre + ".surjective(sigma(2,1))", "Psi(sigma(2,1)) = sigma(2,1) on W_2");
    int good = 0;
    int total = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++total;
        const auto f = sigma(i, j, n);
        try {
          const auto psi = induced_on_w2(f);
          bool square = true;
          for (int k = 1; k <= n; ++k) {
            const auto sk = CoxWord::generator(n, k);
            square = square && project_to_w2(apply(f, sk)) == apply(psi, project_to_w2(sk));
          }
          if (square && is_special(f)) ++good;
        } catch (const NotInducible&) {
        }
      }
    }
    report.add(good == total, pre + ".commuting-squares",
               std::to_string(good) + "/" + std::to_string(total) +
                   " sigma_ij special with pi o f = Psi(f) o pi");
  }
  return report;
}

std::string format_tag_word(const std::vector<GeneratorTag>& word) {
  if (word.empty()) return "id";
  std::string out;
  for (const auto& t : word) {
    if (!out.empty()) out += ' ';
    out += t.name();
  }
  return out;
}

std::optional<std::vector<Lemma23Witness>> lemma23_surjectivity_search(int max_length) {
  if (max_length < 1) throw InputError("lemma23 search needs a length >= 1");
  const int n = 3;
  const auto y = generating_set_y(n);
  const std::vector<std::pair<std::string, FreeEndo>> targets{
      {"swap", parse_free_endo(2, "x1 -> x2; x2 -> x1")},
      {"invert-x1", parse_free_endo(2, "x1 -> x1^-1")},
      {"transvection", parse_free_endo(2, "x1 -> x1 x2")}};
  std::vector<std::optional<Lemma23Witness>> found(targets.size());

  struct Node {
    CoxAut value;
    std::vector<GeneratorTag> word;
  };
  std::vector<Node> level{{CoxAut::identity(n), {}}};
  std::unordered_set<CoxEndo> seen{level.front().value.forward()};
  auto record = [&](const Node& node) {
    const auto image = iota(node.value);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!found[t] && image == targets[t].second) {
        found[t] = Lemma23Witness{targets[t].first, node.word, image};
      }
    }
  };
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (const auto& t : y) {
        auto value = node.value * t.realize(n);
        if (!seen.insert(value.forward()).second) continue;
        auto word = node.word;
        word.push_back(t);
        next.push_back({std::move(value), std::move(word)});
        record(next.back());
      }
    }
    level = std::move(next);
  }
  std::vector<Lemma23Witness> out;
  for (auto& f : found) {
    if (!f) return std::nullopt;
    out.push_back(std::move(*f));
  }
  return out;
}

Report lemma23_check(int max_length) {
  Report report;
  const auto witnesses = lemma23_surjectivity_search(max_length);
  if (!witnesses) {
    report.add(false, "lemma23.search",
               "some Nielsen generator not reached within length " + std::to_string(max_length));
    return report;
  }
  for (const auto& w : *witnesses) {
    CoxAut product = CoxAut::identity(3);
    for (const auto& t : w.word) product = product * t.realize(3);
    report.add(iota(product) == w.image, "lemma23." + w.target,
               format_tag_word(w.word) + " -> " + [&] {
                 std::string s = format_aut(w.image);
                 std::replace(s.begin(), s.end(), '\n', ';');
                 s.pop_back();
                 return s;
               }());
  }
  return report;
}

}  // namespace autw
