#include "autw/helly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "autw/closure.hpp"
#include "autw/errors.hpp"
#include "autw/intmatrix.hpp"
#include "json.hpp"

namespace autw {

namespace {

using json = nlohmann::json;

std::string members_text(const std::vector<GeneratorTag>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += members[i].name();
  }
  return out + "}";
}

std::string subset_id(int k, const std::vector<GeneratorTag>& members) {
  return "subset(k=" + std::to_string(k) + "," + members_text(members) + ")";
}

bool commute(const CoxAut& a, const CoxAut& b) {
  return aut_equal(compose(a, b), compose(b, a));
}

// Everything about Y at rank n that handler checks share.  Built once, then
// read concurrently.
class Context {
 public:
  Context(int n, int d, std::size_t cap)
      : n_(n), d_(d), cap_(cap), diagram_(n), y_(generating_set_y(n)) {
    for (const auto& t : y_) realized_.push_back(t.realize(n));
    const std::size_t m = y_.size();
    infinite_pair_.assign(m * m, false);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto product = compose(realized_[i], realized_[j]);
        if (order_with_cutoff(product, 64)) continue;
        // Exact certificate: the abelianized embedding image has infinite
        // order, so the product and every group containing it are infinite.
        if (!finite_order_exact(abelianization_matrix(iota(product)))) {
          infinite_pair_[i * m + j] = infinite_pair_[j * m + i] = true;
        }
      }
    }
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const CoxeterDiagram& diagram() const { return diagram_; }

  std::size_t position(GeneratorTag t) const {
    return t.is_sigma() ? 0 : static_cast<std::size_t>(t.alpha_index());
  }
  const CoxAut& realize(GeneratorTag t) const { return realized_[position(t)]; }

  // --- FiniteClosure ------------------------------------------------------

  std::variant<FiniteClosure, std::string> finite_closure(
      const std::vector<GeneratorTag>& members, std::size_t cap) const {
    const std::size_t m = y_.size();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (infinite_pair_[position(members[a]) * m + position(members[b])]) {
          return "closure infinite: " + members[a].name() + " * " + members[b].name() +
                 " has infinite order (abelianized embedding image)";
        }
      }
    }
    std::vector<CoxAut> gens;
    for (const auto& t : members) gens.push_back(realize(t));
    const auto result = closure_order(gens, cap);
    if (const auto* order = std::get_if<std::size_t>(&result)) {
      return FiniteClosure{*order};
    }
    return "closure exceeds cap " + std::to_string(cap);
  }

  // --- DisconnectedParts --------------------------------------------------

  std::optional<std::string> disconnected_problem(
      int k, const std::vector<GeneratorTag>& members,
      const std::vector<std::vector<GeneratorTag>>& parts) const {
    if (parts.size() < 2) return "sub-diagram is connected";
    std::vector<GeneratorTag> flat;
    for (const auto& p : parts) {
      if (p.empty()) return "empty part";
      if (static_cast<int>(p.size()) > k) {
        return "part " + members_text(p) + " has more than k=" + std::to_string(k) +
               " elements";
      }
      flat.insert(flat.end(), p.begin(), p.end());
    }
    auto sorted_members = members;
    std::sort(flat.begin(), flat.end());
    std::sort(sorted_members.begin(), sorted_members.end());
    if (flat != sorted_members) return "parts do not partition the subset";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        for (const auto& a : parts[i]) {
          for (const auto& b : parts[j]) {
            if (diagram_.label(a, b) != 2) {
              return "diagram edge between parts: " + a.name() + " -- " + b.name();
            }
            if (!commute(realize(a), realize(b))) {
              return a.name() + " and " + b.name() + " do not commute";
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::variant<DisconnectedParts, std::string> disconnected(
      int k, const std::vector<GeneratorTag>& members) const {
    auto parts = diagram_.components(members);
    if (auto problem = disconnected_problem(k, members, parts)) return *problem;
    return DisconnectedParts{std::move(parts)};
  }

  // --- ConjugateBlocks ----------------------------------------------------

  std::optional<std::string> blocks_problem(int k, const std::vector<GeneratorTag>& members,
                                            const ConjugateBlocks& blocks) const {
    const int l = n_ / (k + 1);
    if (blocks.l != l) return "l must be floor(n/(k+1)) = " + std::to_string(l);
    if (!(d_ < k * l)) {
      return "d < k*l fails: " + std::to_string(d_) + " < " + std::to_string(k) + "*" +
             std::to_string(l) + " = " + std::to_string(k * l) + " is false";
    }
    if (static_cast<int>(blocks.taus.size()) != l) return "wrong number of tau permutations";
    std::vector<std::vector<CoxAut>> sets;
    std::vector<std::set<int>> supports;
    for (int i = 1; i <= l; ++i) {
      if (blocks.taus[static_cast<std::size_t>(i - 1)] != tau_permutation(k, i, n_)) {
        return "tau_" + std::to_string(i) + " differs from the block permutation";
      }
      const auto conj = alpha(blocks.taus[static_cast<std::size_t>(i - 1)]);
      std::vector<CoxAut> s;
      std::set<int> supp;
      for (const auto& t : members) {
        s.push_back(conj * realize(t) * conj.inverse());
        const auto part = support(s.back().forward());
        supp.insert(part.begin(), part.end());
      }
      sets.push_back(std::move(s));
      supports.push_back(std::move(supp));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        for (const auto& a : sets[i]) {
          for (const auto& b : sets[j]) {
            if (!commute(a, b)) {
              return "S_" + std::to_string(i + 1) + " and S_" + std::to_string(j + 1) +
                     " do not commute elementwise";
            }
          }
        }
        for (int v : supports[i]) {
          if (supports[j].count(v)) {
            return "supports of S_" + std::to_string(i + 1) + " and S_" +
                   std::to_string(j + 1) + " overlap at " + std::to_string(v);
          }
        }
      }
    }
    return std::nullopt;
  }

  std::variant<ConjugateBlocks, std::string> conjugate_blocks(
      int k, const std::vector<GeneratorTag>& members) const {
    ConjugateBlocks blocks{n_ / (k + 1), {}};
    if (d_ < k * blocks.l) {
      for (int i = 1; i <= blocks.l; ++i) blocks.taus.push_back(tau_permutation(k, i, n_));
    }
    if (auto problem = blocks_problem(k, members, blocks)) return *problem;
    return blocks;
  }

  std::optional<std::string> handler_problem(int k, const std::vector<GeneratorTag>& members,
                                             const Handler& h) const {
    if (const auto* fc = std::get_if<FiniteClosure>(&h)) {
      const auto got = finite_closure(members, std::max(cap_, fc->order));
      if (const auto* s = std::get_if<std::string>(&got)) return *s;
      const auto order = std::get<FiniteClosure>(got).order;
      if (order != fc->order) {
        return "closure order " + std::to_string(order) + ", certificate says " +
               std::to_string(fc->order);
      }
      return std::nullopt;
    }
    if (const auto* dp = std::get_if<DisconnectedParts>(&h)) {
      return disconnected_problem(k, members, dp->parts);
    }
    return blocks_problem(k, members, std::get<ConjugateBlocks>(h));
  }

  std::size_t cap() const { return cap_; }

 private:
  int n_;
  int d_;
  std::size_t cap_;
  CoxeterDiagram diagram_;
  std::vector<GeneratorTag> y_;
  std::vector<CoxAut> realized_;
  std::vector<bool> infinite_pair_;
};

struct SubsetKey {
  int k;
  std::vector<GeneratorTag> members;
  auto operator<=>(const SubsetKey&) const = default;
};

// All (k+1)-subsets of Y for k = 1..d, by k then lexicographically.
std::vector<SubsetKey> all_subsets(int n, int d) {
  const auto y = generating_set_y(n);
  std::vector<SubsetKey> out;
  for (int k = 1; k <= d; ++k) {
    const int size = k + 1;
    if (size > n) break;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      SubsetKey key{k, {}};
      for (int i : idx) key.members.push_back(y[static_cast<std::size_t>(i)]);
      out.push_back(std::move(key));
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  return out;
}

// Runs fn(i) for i in [0, count) on a small worker pool.  Results are stored
// by index so output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

json tags_json(const std::vector<GeneratorTag>& tags) {
  json a = json::array();
  for (const auto& t : tags) a.push_back(t.name());
  return a;
}

}  // namespace

std::string handler_name(const Handler& h) {
  switch (h.index()) {
    case 0: return "FiniteClosure";
    case 1: return "DisconnectedParts";
    default: return "ConjugateBlocks";
  }
}

std::string FailureReport::to_text() const {
  std::string out;
  for (const auto& f : failures) {
    const auto id = subset_id(f.k, f.members);
    out += "FAIL " + id + " FiniteClosure: " + f.finite_closure_reason + "\n";
    out += "FAIL " + id + " DisconnectedParts: " + f.disconnected_reason + "\n";
    out += "FAIL " + id + " ConjugateBlocks: " + f.conjugate_blocks_reason + "\n";
  }
  out += "FAIL helly(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ") " +
         std::to_string(failures.size()) + " subset(s) without a valid handler\n";
  return out;
}

Permutation tau_permutation(int k, int i, int n) {
  if (k < 1) throw InputError("tau_permutation needs k >= 1");
  const int l = n / (k + 1);
  if (i < 1 || i > l) {
    throw InputError("tau_permutation index " + std::to_string(i) + " outside 1.." +
                     std::to_string(l));
  }
  if (i == 1) return Permutation::identity(n);
  std::vector<std::vector<int>> cycles;
  for (int j = 1; j <= k + 1; ++j) cycles.push_back({j, (k + 1) * (i - 1) + j});
  return Permutation::from_cycles(n, cycles);
}

bool floor_inequality(int n, int k) {
  if (n < 4 || k < 1) throw InputError("floor_inequality needs n >= 4 and k >= 1");
  return n / 2 <= k * (n / (k + 1));
}

std::variant<HellyCertificate, FailureReport> helly_certificate(int n, int d,
                                                                const HellyOptions& options) {
  if (n < 4) throw InputError("helly_certificate needs n >= 4");
  if (d < 0) throw InputError("helly_certificate needs d >= 0");
  if (options.closure_cap == 0) throw InputError("closure cap must be at least 1");
  const Context ctx(n, d, options.closure_cap);
  const auto subsets = all_subsets(n, d);

  std::vector<std::optional<Handler>> handlers(subsets.size());
  std::vector<SubsetFailure> failures(subsets.size());
  parallel_for(subsets.size(), options.threads, [&](std::size_t i) {
    const auto& [k, members] = subsets[i];
    auto& failure = failures[i];
    auto h1 = ctx.finite_closure(members, ctx.cap());
    if (auto* ok = std::get_if<FiniteClosure>(&h1)) {
      handlers[i] = *ok;
      return;
    }
    failure.finite_closure_reason = std::get<std::string>(h1);
    auto h2 = ctx.disconnected(k, members);
    if (auto* ok = std::get_if<DisconnectedParts>(&h2)) {
      handlers[i] = std::move(*ok);
      return;
    }
    failure.disconnected_reason = std::get<std::string>(h2);
    auto h3 = ctx.conjugate_blocks(k, members);
    if (auto* ok = std::get_if<ConjugateBlocks>(&h3)) {
      handlers[i] = std::move(*ok);
      return;
    }
    failure.conjugate_blocks_reason = std::get<std::string>(h3);
  });

  FailureReport report{n, d, {}};
  HellyCertificate cert{n, d, {}};
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (handlers[i]) {
      cert.subsets.push_back({subsets[i].k, subsets[i].members, std::move(*handlers[i])});
    } else {
      failures[i].k = subsets[i].k;
      failures[i].members = subsets[i].members;
      report.failures.push_back(std::move(failures[i]));
    }
  }
  if (!report.failures.empty()) return report;
  return cert;
}

Report check_certificate(const HellyCertificate& cert, const HellyOptions& options) {
  Report report;
  const std::string head =
      "helly(n=" + std::to_string(cert.n) + ",d=" + std::to_string(cert.d) + ")";
  if (cert.n < 4 || cert.d < 0) {
    report.add(false, head + ".range", "needs n >= 4 and d >= 0");
    return report;
  }
  report.add(cert.d < cert.n / 2, head + ".bound",
             "d=" + std::to_string(cert.d) + " < floor(n/2)=" + std::to_string(cert.n / 2));

  std::map<SubsetKey, int> expected;
  for (auto& key : all_subsets(cert.n, cert.d)) expected.emplace(std::move(key), 0);
  bool coverage_ok = true;
  std::string coverage_detail;
  for (const auto& rec : cert.subsets) {
    const auto it = expected.find(SubsetKey{rec.k, rec.members});
    if (it == expected.end()) {
      coverage_ok = false;
      coverage_detail = "unexpected record " + subset_id(rec.k, rec.members);
    } else if (++it->second > 1) {
      coverage_ok = false;
      coverage_detail = "duplicate record " + subset_id(rec.k, rec.members);
    }
  }
  for (const auto& [key, seen] : expected) {
    if (seen == 0) {
      coverage_ok = false;
      coverage_detail = "missing record " + subset_id(key.k, key.members);
      break;
    }
  }
  report.add(coverage_ok, head + ".coverage",
             coverage_ok ? std::to_string(expected.size()) + " subsets, each exactly once"
                         : coverage_detail);

  const Context ctx(cert.n, cert.d, options.closure_cap);
  std::vector<std::optional<std::string>> problems(cert.subsets.size());
  parallel_for(cert.subsets.size(), options.threads, [&](std::size_t i) {
    const auto& rec = cert.subsets[i];
    if (rec.k < 1 || rec.members.size() != static_cast<std::size_t>(rec.k) + 1) {
      problems[i] = "record needs k >= 1 and exactly k+1 members";
      return;
    }
    problems[i] = ctx.handler_problem(rec.k, rec.members, rec.handler);
  });
  for (std::size_t i = 0; i < cert.subsets.size(); ++i) {
    const auto& rec = cert.subsets[i];
    report.add(!problems[i], subset_id(rec.k, rec.members),
               handler_name(rec.handler) + (problems[i] ? ": " + *problems[i] : ""));
  }
  return report;
}

std::string certificate_to_json(const HellyCertificate& cert) {
  json subsets = json::array();
  for (const auto& rec : cert.subsets) {
    json evidence;
    if (const auto* fc = std::get_if<FiniteClosure>(&rec.handler)) {
      evidence = {{"order", fc->order}};
    } else if (const auto* dp = std::get_if<DisconnectedParts>(&rec.handler)) {
      json parts = json::array();
      for (const auto& p : dp->parts) parts.push_back(tags_json(p));
      evidence = {{"parts", std::move(parts)}};
    } else {
      const auto& cb = std::get<ConjugateBlocks>(rec.handler);
      json taus = json::array();
      for (const auto& t : cb.taus) taus.push_back(format_permutation(t));
      evidence = {{"l", cb.l}, {"tau", std::move(taus)}};
    }
    subsets.push_back({{"k", rec.k},
                       {"members", tags_json(rec.members)},
                       {"handler", handler_name(rec.handler)},
                       {"evidence", std::move(evidence)}});
  }
  json doc = {{"n", cert.n}, {"d", cert.d}, {"subsets", std::move(subsets)}};
  return doc.dump(2) + "\n";
}

HellyCertificate certificate_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
  try {
    HellyCertificate cert{doc.at("n").get<int>(), doc.at("d").get<int>(), {}};
    if (cert.n < 2) throw ParseError(0, "certificate rank n must be at least 2");
    auto tags = [&](const json& a) {
      std::vector<GeneratorTag> out;
      for (const auto& t : a) out.push_back(GeneratorTag::parse(cert.n, t.get<std::string>()));
      return out;
    };
    for (const auto& rec : doc.at("subsets")) {
      SubsetRecord out{rec.at("k").get<int>(), tags(rec.at("members")), FiniteClosure{0}};
      const auto name = rec.at("handler").get<std::string>();
      const auto& ev = rec.at("evidence");
      if (name == "FiniteClosure") {
        out.handler = FiniteClosure{ev.at("order").get<std::size_t>()};
      } else if (name == "DisconnectedParts") {
        DisconnectedParts dp;
        for (const auto& p : ev.at("parts")) dp.parts.push_back(tags(p));
        out.handler = std::move(dp);
      } else if (name == "ConjugateBlocks") {
        ConjugateBlocks cb{ev.at("l").get<int>(), {}};
        for (const auto& t : ev.at("tau")) {
          cb.taus.push_back(parse_permutation(cert.n, t.get<std::string>()));
        }
        out.handler = std::move(cb);
      } else {
        throw ParseError(0, "unknown handler `" + name + "`");
      }
      cert.subsets.push_back(std::move(out));
    }
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace autw
