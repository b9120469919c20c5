#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "autw/checks.hpp"
#include "autw/closure.hpp"
#include "autw/diagram.hpp"
#include "autw/errors.hpp"
#include "autw/helly.hpp"
#include "json.hpp"
#include "support.hpp"

namespace autw {
namespace {

using nlohmann::json;
Permutation tr(int n, int a, int b) { return Permutation::transposition(n, a, b); }
GeneratorTag A(int i) { return GeneratorTag::alpha_adj(i); }
const GeneratorTag S = GeneratorTag::sigma12();

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

// ---- diagram ----

TEST(Diagram, GeneratingSet) {
  const auto y = generating_set_y(5);
  ASSERT_EQ(y.size(), 5u);
  EXPECT_EQ(y[0], S);
  EXPECT_EQ(y[3], A(3));
  EXPECT_TRUE(S < A(1));
  EXPECT_EQ(A(2).name(), "alpha(2,3)");
  EXPECT_EQ(GeneratorTag::parse(5, "alpha(4,5)"), A(4));
  EXPECT_EQ(GeneratorTag::parse(5, "sigma(1,2)"), S);
  EXPECT_THROW(GeneratorTag::parse(5, "alpha(5,6)"), ParseError);
  EXPECT_THROW(GeneratorTag::parse(5, "alpha(1,3)"), ParseError);
  EXPECT_EQ(A(1).realize(4), alpha(tr(4, 1, 2)));
  EXPECT_EQ(S.realize(4), sigma(1, 2, 4));
}

TEST(Diagram, Figure1Labels) {
  const auto g = figure1_diagram(6);
  EXPECT_EQ(g.label(S, A(1)), kInfiniteLabel);
  EXPECT_EQ(g.label(A(1), S), kInfiniteLabel);
  EXPECT_EQ(g.label(S, A(2)), 4);
  for (int i = 3; i < 6; ++i) EXPECT_EQ(g.label(S, A(i)), 2);
  for (int i = 1; i < 5; ++i) EXPECT_EQ(g.label(A(i), A(i + 1)), 3);
  EXPECT_EQ(g.label(A(1), A(3)), 2);
  EXPECT_EQ(g.label(A(2), A(5)), 2);
  EXPECT_EQ(format_label(kInfiniteLabel), "inf");
  EXPECT_THROW(figure1_diagram(2), InputError);
}

TEST(Diagram, LabelsAreProductOrdersByNaiveIteration) {
  for (int n = 3; n <= 6; ++n) {
    const auto g = figure1_diagram(n);
    for (const auto& a : g.vertices())
      for (const auto& b : g.vertices()) {
        if (!(a < b)) continue;
        const auto naive = test::naive_order(
            test::naive_compose(test::to_naive(a.realize(n).forward()),
                                test::to_naive(b.realize(n).forward())),
            40);
        const EdgeLabel want = naive == 0 ? kInfiniteLabel : static_cast<EdgeLabel>(naive);
        EXPECT_EQ(g.label(a, b), want) << a.name() << " " << b.name();
      }
  }
}

TEST(Diagram, Components) {
  const auto g = figure1_diagram(6);
  const auto parts = g.components({S, A(1), A(3), A(4)});
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (std::vector<GeneratorTag>{S, A(1)}));
  EXPECT_EQ(parts[1], (std::vector<GeneratorTag>{A(3), A(4)}));
  EXPECT_EQ(g.components({S, A(2), A(3)}).size(), 1u);
}

TEST(Diagram, VerifyRelations) {
  for (int n = 3; n <= 6; ++n) {
    const auto r = verify_diagram_relations(n, 64);
    EXPECT_TRUE(r.ok()) << r.to_text();
    const auto& lines = r.lines();
    EXPECT_TRUE(std::any_of(lines.begin(), lines.end(), [](const CheckLine& l) {
      return l.id == "edge(sigma(1,2),alpha(1,2)).matrix";
    }));
  }
  EXPECT_THROW(verify_diagram_relations(4, 4), InputError);
}

// ---- closure ----

TEST(Closure, Examples) {
  auto r = enumerate_closure({alpha(tr(4, 1, 2))}, 100);
  ASSERT_TRUE(std::holds_alternative<SubgroupEnumeration>(r));
  EXPECT_EQ(std::get<SubgroupEnumeration>(r).order(), 2u);

  std::vector<CoxAut> gens;
  for (int i = 1; i < 4; ++i) gens.push_back(alpha(tr(4, i, i + 1)));
  r = enumerate_closure(gens, 1000);
  EXPECT_EQ(std::get<SubgroupEnumeration>(r).order(), 24u);

  EXPECT_TRUE(std::holds_alternative<CapExceeded>(
      enumerate_closure({sigma(1, 2, 4), alpha(tr(4, 1, 2))}, 500)));
  EXPECT_THROW(enumerate_closure({}, 10), InputError);
  EXPECT_THROW(enumerate_closure({sigma(1, 2, 3), sigma(1, 2, 4)}, 10), InputError);
  EXPECT_THROW(enumerate_closure({sigma(1, 2, 3)}, 0), InputError);
}

TEST(Closure, EnumerationIsClosed) {
  const std::vector<CoxAut> gens{sigma(1, 2, 4), alpha(tr(4, 2, 3)), alpha(tr(4, 3, 4))};
  const auto e = std::get<SubgroupEnumeration>(enumerate_closure(gens, 1000));
  std::unordered_set<CoxEndo> elems;
  for (const auto& x : e.elements) {
    EXPECT_TRUE(elems.insert(x.forward()).second);
    EXPECT_TRUE((x * x.inverse()).forward().is_identity());
  }
  EXPECT_TRUE(elems.count(CoxEndo::identity(4)));
  for (const auto& x : e.elements)
    for (const auto& g : gens) EXPECT_TRUE(elems.count((g * x).forward()));
}

TEST(Closure, TypeBAgreesWithNaiveBfs) {
  for (int n = 3; n <= 5; ++n) {
    std::vector<CoxAut> gens{sigma(1, 2, n)};
    std::vector<test::NaiveEndo> naive{test::naive_sigma(1, 2, n)};
    for (int i = 2; i < n; ++i) {
      gens.push_back(alpha(tr(n, i, i + 1)));
      auto images = Permutation::identity(n).images();
      std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
      naive.push_back(test::naive_alpha(images));
    }
    const auto order = std::get<std::size_t>(closure_order(gens, 100000));
    EXPECT_EQ(order, test::naive_closure_order(naive, 100000).value());
    const std::size_t bound = (std::size_t{1} << (n - 1)) * factorial(n - 1);
    EXPECT_EQ(bound % order, 0u);
  }
}

TEST(Closure, PermutationGeneratorsGiveSymmetricGroup) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<CoxAut> gens;
    for (int i = 1; i < n; ++i) gens.push_back(alpha(tr(n, i, i + 1)));
    EXPECT_EQ(std::get<std::size_t>(closure_order(gens, 10000)), factorial(n));
  }
}

// ---- helly ----

TEST(Helly, TauPermutations) {
  EXPECT_EQ(tau_permutation(1, 2, 4), Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  EXPECT_TRUE(tau_permutation(1, 1, 4).is_identity());
  EXPECT_EQ(tau_permutation(2, 2, 6), Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_THROW(tau_permutation(1, 3, 4), InputError);
  EXPECT_THROW(tau_permutation(1, 0, 4), InputError);
}

TEST(Helly, FloorInequality) {
  EXPECT_TRUE(floor_inequality(4, 1));
  EXPECT_TRUE(floor_inequality(9, 2));
  for (int n = 4; n <= 64; ++n) {
    for (int k = 1; k < n / 2; ++k) {
      EXPECT_TRUE(floor_inequality(n, k)) << n << " " << k;
      // Direct arithmetic.
      int blocks = 0;
      for (int used = k + 1; used <= n; used += k + 1) ++blocks;
      EXPECT_EQ(floor_inequality(n, k), n / 2 <= k * blocks);
    }
  }
  EXPECT_THROW(floor_inequality(3, 1), InputError);
  EXPECT_THROW(floor_inequality(4, 0), InputError);
}

const SubsetRecord& find_record(const HellyCertificate& c, std::vector<GeneratorTag> members) {
  for (const auto& r : c.subsets)
    if (r.members == members) return r;
  throw std::runtime_error("subset not in certificate");
}

TEST(Helly, SmallCertificate) {
  const auto result = helly_certificate(4, 1);
  ASSERT_TRUE(std::holds_alternative<HellyCertificate>(result));
  const auto& c = std::get<HellyCertificate>(result);
  EXPECT_EQ(c.subsets.size(), 6u);

  const auto& infinite = find_record(c, {S, A(1)});
  ASSERT_TRUE(std::holds_alternative<ConjugateBlocks>(infinite.handler));
  const auto& blocks = std::get<ConjugateBlocks>(infinite.handler);
  EXPECT_EQ(blocks.l, 2);
  EXPECT_EQ(blocks.taus[1], Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  // The two conjugate sets commute elementwise.
  const auto t = alpha(blocks.taus[1]);
  for (const auto& a : {S, A(1)})
    for (const auto& b : {S, A(1)}) {
      const auto y = a.realize(4);
      const auto z = t * b.realize(4) * t.inverse();
      EXPECT_EQ(y * z, z * y);
    }

  const auto& four = find_record(c, {S, A(2)});
  ASSERT_TRUE(std::holds_alternative<FiniteClosure>(four.handler));
  EXPECT_EQ(std::get<FiniteClosure>(four.handler).order,
            test::naive_closure_order({test::naive_sigma(1, 2, 4), test::naive_alpha({1, 3, 2, 4})},
                                      1000)
                .value());

  EXPECT_TRUE(check_certificate(c).ok());
}

TEST(Helly, CertificatesBelowHalfN) {
  for (int n = 4; n <= 9; ++n) {
    for (int d = 1; d < n / 2; ++d) {
      const auto result = helly_certificate(n, d);
      ASSERT_TRUE(std::holds_alternative<HellyCertificate>(result)) << n << " " << d;
      const auto& c = std::get<HellyCertificate>(result);
      std::size_t expected = 0;
      for (int k = 1; k <= d; ++k) {
        std::size_t binom = 1;
        for (int i = 0; i <= k; ++i) binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
        expected += binom;
      }
      EXPECT_EQ(c.subsets.size(), expected);
      EXPECT_TRUE(check_certificate(c).ok());
    }
  }
}

TEST(Helly, ConjugateBlocksHaveDisjointSupports) {
  const auto c = std::get<HellyCertificate>(helly_certificate(9, 3));
  int seen = 0;
  for (const auto& r : c.subsets) {
    const auto* b = std::get_if<ConjugateBlocks>(&r.handler);
    if (!b) continue;
    ++seen;
    std::vector<std::set<int>> supports;
    for (const auto& tau : b->taus) {
      std::set<int> s;
      const auto a = alpha(tau);
      for (const auto& y : r.members) {
        const auto moved = support((a * y.realize(9) * a.inverse()).forward());
        s.insert(moved.begin(), moved.end());
      }
      supports.push_back(s);
    }
    for (std::size_t i = 0; i < supports.size(); ++i)
      for (std::size_t j = i + 1; j < supports.size(); ++j)
        for (int x : supports[i]) EXPECT_FALSE(supports[j].count(x));
  }
  EXPECT_GT(seen, 0);
}

TEST(Helly, DeterministicAcrossThreadCounts) {
  const auto a = certificate_to_json(std::get<HellyCertificate>(helly_certificate(8, 3, {100000, 1})));
  const auto b = certificate_to_json(std::get<HellyCertificate>(helly_certificate(8, 3, {100000, 4})));
  EXPECT_EQ(a, b);
}

TEST(Helly, FailureAtHalfN) {
  for (int n = 4; n <= 6; ++n) {
    const auto result = helly_certificate(n, n / 2);
    ASSERT_TRUE(std::holds_alternative<FailureReport>(result)) << n;
    const auto& f = std::get<FailureReport>(result);
    ASSERT_FALSE(f.failures.empty());
    for (const auto& s : f.failures) {
      EXPECT_FALSE(s.finite_closure_reason.empty());
      EXPECT_FALSE(s.disconnected_reason.empty());
      EXPECT_FALSE(s.conjugate_blocks_reason.empty());
    }
    if (n == 4) {
      const bool named = std::any_of(f.failures.begin(), f.failures.end(), [](const SubsetFailure& s) {
        return s.k == 2 && s.members == std::vector<GeneratorTag>{S, A(1), A(2)};
      });
      EXPECT_TRUE(named);
    }
    EXPECT_NE(f.to_text().find("FAIL"), std::string::npos);
  }
  EXPECT_THROW(helly_certificate(3, 1), InputError);
  EXPECT_THROW(helly_certificate(4, -1), InputError);
}

TEST(Helly, JsonRoundTrip) {
  const auto c = std::get<HellyCertificate>(helly_certificate(7, 2));
  const auto text = certificate_to_json(c);
  const auto back = certificate_from_json(text);
  EXPECT_EQ(certificate_to_json(back), text);
  EXPECT_TRUE(check_certificate(back).ok());
  const auto doc = json::parse(text);
  EXPECT_EQ(doc["n"], 7);
  EXPECT_EQ(doc["subsets"].size(), c.subsets.size());
}

Report check_text(const std::string& text) { return check_certificate(certificate_from_json(text)); }

TEST(Helly, TamperedCertificatesFail) {
  const auto c = std::get<HellyCertificate>(helly_certificate(6, 2));
  const auto doc = json::parse(certificate_to_json(c));

  auto first_of = [&](const std::string& handler) {
    for (std::size_t i = 0; i < doc["subsets"].size(); ++i)
      if (doc["subsets"][i]["handler"] == handler) return i;
    throw std::runtime_error("no " + handler);
  };

  auto wrong_order = doc;
  wrong_order["subsets"][first_of("FiniteClosure")]["evidence"]["order"] = 7;
  EXPECT_FALSE(check_text(wrong_order.dump()).ok());

  auto dropped = doc;
  dropped["subsets"].erase(dropped["subsets"].begin());
  EXPECT_FALSE(check_text(dropped.dump()).ok());

  auto duplicated = doc;
  duplicated["subsets"].push_back(duplicated["subsets"][0]);
  EXPECT_FALSE(check_text(duplicated.dump()).ok());

  auto wrong_tau = doc;
  wrong_tau["subsets"][first_of("ConjugateBlocks")]["evidence"]["tau"][1] = "(1 2)";
  EXPECT_FALSE(check_text(wrong_tau.dump()).ok());

  // A connected infinite subset cannot be split.
  auto bad_split = doc;
  const auto i = first_of("ConjugateBlocks");
  bad_split["subsets"][i]["handler"] = "DisconnectedParts";
  bad_split["subsets"][i]["evidence"] = {{"parts", json::array({json::array({"sigma(1,2)"}),
                                                                json::array({"alpha(1,2)"})})}};
  EXPECT_FALSE(check_text(bad_split.dump()).ok());

  auto too_big = doc;
  too_big["d"] = 3;
  EXPECT_FALSE(check_text(too_big.dump()).ok());

  EXPECT_THROW(certificate_from_json("{"), ParseError);
  EXPECT_THROW(certificate_from_json(R"({"n": 6})"), ParseError);
  auto bad_tag = doc;
  bad_tag["subsets"][0]["members"][0] = "alpha(9,10)";
  EXPECT_THROW(certificate_from_json(bad_tag.dump()), ParseError);
}

// ---- checks ----

TEST(Checks, ConjugationRelations) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_conjugation_relations(n);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.lines().size(), factorial(n));
  }
}

std::set<test::PermVec> as_set(const std::vector<Permutation>& h) {
  std::set<test::PermVec> out;
  for (const auto& p : h) out.insert(p.images());
  return out;
}

TEST(Checks, NormalSubgroupsMatchBruteForce) {
  for (int n = 2; n <= 5; ++n) {
    const auto mine = normal_subgroups_sym(n);
    std::set<std::set<test::PermVec>> ours;
    for (const auto& h : mine) ours.insert(as_set(h));
    EXPECT_EQ(ours, test::naive_normal_subgroups(n)) << n;
  }
  EXPECT_EQ(normal_subgroups_sym(2).size(), 2u);
  EXPECT_EQ(normal_subgroups_sym(5).size(), 3u);
  EXPECT_THROW(normal_subgroups_sym(1), InputError);
  EXPECT_THROW(normal_subgroups_sym(7), InputError);
}

TEST(Checks, NormalSubgroupsOfSym4) {
  const auto subs = normal_subgroups_sym(4);
  ASSERT_EQ(subs.size(), 4u);
  const std::set<test::PermVec> klein{{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  EXPECT_EQ(as_set(subs[1]), klein);
  EXPECT_EQ(subs[2].size(), 12u);
  EXPECT_EQ(subs[3].size(), 24u);
}

TEST(Checks, NormalSubgroupsAreClosed) {
  for (int n = 2; n <= 6; ++n) {
    const auto all = all_permutations(n);
    for (const auto& h : normal_subgroups_sym(n)) {
      const std::set<Permutation> s(h.begin(), h.end());
      for (const auto& a : h) {
        for (const auto& b : h) ASSERT_TRUE(s.count(a * b));
        for (const auto& g : all) ASSERT_TRUE(s.count(g * a * g.inverse()));
      }
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& h : normal_subgroups_sym(6)) sizes.push_back(h.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 360, 720}));
}

TEST(Checks, HomomorphismsThroughSym) {
  for (int n = 4; n <= 6; ++n) EXPECT_TRUE(theorem_d_check(n).ok()) << theorem_d_check(n).to_text();
  const auto r = theorem_d_check(5);
  const auto& lines = r.lines();
  EXPECT_TRUE(std::any_of(lines.begin(), lines.end(), [](const CheckLine& l) {
    return l.id == "theorem-d(n=5).generate(sigma(2,5))";
  }));
  EXPECT_THROW(theorem_d_check(3), InputError);
}

TEST(Checks, InnerAutomorphismWords) {
  const auto w = prop34_word(3, 1);
  EXPECT_EQ(w, sigma(1, 2, 3) * sigma(1, 3, 3) * sigma(2, 1, 3) * sigma(2, 3, 3));
  EXPECT_EQ(prop34_word(4, 2),
            sigma(2, 1, 4) * sigma(2, 3, 4) * sigma(2, 4, 4) * sigma(3, 1, 4) * sigma(3, 2, 4) *
                sigma(3, 4, 4));
  for (int n = 3; n <= 6; ++n) EXPECT_TRUE(prop34_check(n, 3).ok()) << n;
  EXPECT_THROW(prop34_check(2, 3), InputError);
}

TEST(Checks, FreeSubgroupBall) {
  const auto r = prop34_check(3, 6);
  EXPECT_TRUE(r.ok());
  // 4 * 3^(L-1) reduced words of length L.
  EXPECT_NE(r.lines().back().detail.find("(972 of length 6)"), std::string::npos);
}

TEST(Checks, SpeW2) {
  const auto r = spe_w2_check(1000);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_THROW(spe_w2_check(4), InputError);
}

TEST(Checks, NielsenGeneratorsReached) {
  const auto w = lemma23_surjectivity_search(6);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 3u);
  for (const auto& x : *w) {
    CoxAut f = CoxAut::identity(3);
    for (const auto& t : x.word) f = f * t.realize(3);
    EXPECT_EQ(iota(f), x.image);
    EXPECT_LE(x.word.size(), 6u);
  }
  EXPECT_EQ((*w)[1].image.images()[0], FreeWord::generator(2, 1, -1));
  EXPECT_FALSE(lemma23_surjectivity_search(1).has_value());
  EXPECT_TRUE(lemma23_check(6).ok());
}

}  // namespace
}  // namespace autw
