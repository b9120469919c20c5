#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "autw/automorphisms.hpp"
#include "autw/checks.hpp"
#include "autw/closure.hpp"
#include "autw/diagram.hpp"
#include "autw/errors.hpp"
#include "autw/helly.hpp"
#include "autw/intmatrix.hpp"
#include "autw/text_format.hpp"
#include "autw/words.hpp"
#include "json.hpp"

namespace autw::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool strict = false;
  bool meta = false;
};

// Lines of a multi-line automorphism listing, without the trailing newline.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool is_aut_listing(const std::string& text) { return text.find("->") != std::string::npos; }

CoxEndo read_endo(int n, const std::string& text, const Globals& g) {
  if (is_aut_listing(text)) return parse_aut(n, text, {g.strict});
  return parse_aut_product(n, text).forward();
}

CoxAut read_product(int n, const std::string& text) {
  if (is_aut_listing(text)) {
    throw InputError("expected a product of generators such as `sigma(1,2) alpha(1 2)`");
  }
  return parse_aut_product(n, text);
}

std::string vector_text(const ExpVector& v) {
  std::vector<std::string> parts;
  for (auto e : v) parts.push_back(std::to_string(e));
  return "(" + join(parts, ", ") + ")";
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void configure(CLI::App& app);
  void emit_text_or_json(const std::string& text, const json& value) {
    if (globals_.json) {
      out_ << value.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }
  int emit_report(const Report& report) {
    out_ << (globals_.json ? report.to_json() + "\n" : report.to_text());
    return report.ok() ? kOk : kVerificationFailed;
  }
  void emit_aut(const std::vector<std::string>& lines) {
    if (globals_.json) {
      out_ << json{{"images", lines}}.dump() << '\n';
    } else {
      for (const auto& l : lines) out_ << l << '\n';
    }
  }
  void emit_meta();

  std::ostream& out_;
  std::ostream& err_;
  Globals globals_;
  std::function<int()> action_;

  int n_ = 0;
  int d_ = 0;
  bool free_ = false;
  bool aut_ = false;
  std::uint64_t order_cutoff_ = 1000;
  std::uint64_t figure_cutoff_ = 64;
  std::uint64_t spe_cutoff_ = 1000;
  std::size_t cap_ = 100000;
  unsigned threads_ = 0;
  int ball_ = 8;
  int length_ = 6;
  std::string first_;
  std::string second_;
  std::string out_file_;
  std::vector<std::string> many_;
};

void Runner::emit_meta() {
  json meta{{"tool", "autw"},
            {"version", "0.1.0"},
            {"compiler", __VERSION__},
            {"hardware_threads", std::thread::hardware_concurrency()}};
  err_ << "meta " << meta.dump() << '\n';
}

void Runner::configure(CLI::App& app) {
  app.require_subcommand(1);
  app.add_flag("--json", globals_.json, "Structured output");
  app.add_flag("--strict", globals_.strict, "Reject unreduced input words");
  app.add_flag("--meta", globals_.meta, "Print environment info to stderr");

  auto rank = [this](CLI::App* sub, const char* what = "Rank n of W_n") {
    sub->add_option("--n", n_, what)->required()->check(CLI::Range(1, 4096));
  };

  auto* reduce = app.add_subcommand("reduce", "Normal form of a word");
  rank(reduce);
  reduce->add_flag("--free", free_, "Word in the free group F_n");
  reduce->add_option("word", first_)->required();
  reduce->callback([this] {
    action_ = [this] {
      const std::string w = free_ ? format_word(parse_free_word(n_, first_, {globals_.strict}))
                                  : format_word(parse_cox_word(n_, first_, {globals_.strict}));
      emit_text_or_json(w, {{"word", w}});
      return kOk;
    };
  });

  auto* mul = app.add_subcommand("mul", "Product u v of two words");
  rank(mul);
  mul->add_flag("--free", free_, "Words in the free group F_n");
  mul->add_option("u", first_)->required();
  mul->add_option("v", second_)->required();
  mul->callback([this] {
    action_ = [this] {
      const ParseOptions o{globals_.strict};
      const std::string w =
          free_ ? format_word(parse_free_word(n_, first_, o) * parse_free_word(n_, second_, o))
                : format_word(parse_cox_word(n_, first_, o) * parse_cox_word(n_, second_, o));
      emit_text_or_json(w, {{"word", w}});
      return kOk;
    };
  });

  auto* apply_cmd = app.add_subcommand("apply", "Image of a word under an automorphism");
  rank(apply_cmd);
  apply_cmd->add_flag("--free", free_, "Endomorphism and word of F_n");
  apply_cmd->add_option("aut", first_)->required();
  apply_cmd->add_option("word", second_)->required();
  apply_cmd->callback([this] {
    action_ = [this] {
      const ParseOptions o{globals_.strict};
      const std::string w =
          free_ ? format_word(free_apply(parse_free_endo(n_, first_, o),
                                         parse_free_word(n_, second_, o)))
                : format_word(apply(read_endo(n_, first_, globals_), parse_cox_word(n_, second_, o)));
      emit_text_or_json(w, {{"word", w}});
      return kOk;
    };
  });

  auto* compose_cmd = app.add_subcommand("compose", "Composite f o g (g acts first)");
  rank(compose_cmd);
  compose_cmd->add_flag("--free", free_, "Endomorphisms of F_n");
  compose_cmd->add_option("f", first_)->required();
  compose_cmd->add_option("g", second_)->required();
  compose_cmd->callback([this] {
    action_ = [this] {
      const ParseOptions o{globals_.strict};
      const std::string text =
          free_ ? format_aut(free_compose(parse_free_endo(n_, first_, o),
                                          parse_free_endo(n_, second_, o)))
                : format_aut(compose(read_endo(n_, first_, globals_),
                                     read_endo(n_, second_, globals_)));
      emit_aut(split_lines(text));
      return kOk;
    };
  });

  auto* order = app.add_subcommand("order", "Order of an automorphism by iteration");
  rank(order);
  order->add_option("aut", first_)->required();
  order->add_option("--cutoff", order_cutoff_, "Iteration bound")->check(CLI::PositiveNumber);
  order->callback([this] {
    action_ = [this] {
      const auto k = order_with_cutoff(read_endo(n_, first_, globals_), order_cutoff_);
      if (k) {
        emit_text_or_json(std::to_string(*k), {{"order", *k}});
      } else {
        emit_text_or_json("exceeds " + std::to_string(order_cutoff_),
                          {{"order", nullptr}, {"exceeds", order_cutoff_}});
      }
      return kOk;
    };
  });

  auto* embed = app.add_subcommand("embed", "Embedding image in Aut(F_{n-1})");
  rank(embed);
  embed->add_option("aut", first_)->required();
  embed->callback([this] {
    action_ = [this] {
      emit_aut(split_lines(format_aut(iota(read_endo(n_, first_, globals_)))));
      return kOk;
    };
  });

  auto* abel = app.add_subcommand("abelianize", "Exponent vector or abelianized matrix");
  rank(abel);
  abel->add_flag("--aut", aut_,
                 "Argument is an automorphism: an F_n listing, or a W_n automorphism "
                 "taken through the embedding");
  abel->add_option("arg", first_)->required();
  abel->callback([this] {
    action_ = [this] {
      if (!aut_) {
        const auto v = abelianize(parse_free_word(n_, first_, {globals_.strict}));
        emit_text_or_json(vector_text(v), {{"vector", v}});
        return kOk;
      }
      const FreeEndo f = first_.find('x') != std::string::npos
                             ? parse_free_endo(n_, first_, {globals_.strict})
                             : iota(read_endo(n_, first_, globals_));
      const auto m = format_matrix(abelianization_matrix(f));
      emit_text_or_json(m, {{"matrix", m}});
      return kOk;
    };
  });

  auto* morder = app.add_subcommand("matrix-order", "Exact order of a unimodular matrix");
  morder->add_option("matrix", first_, "Rows separated by `;`, e.g. \"0 -1; 1 0\"")->required();
  morder->callback([this] {
    action_ = [this] {
      const auto k = finite_order_exact(parse_matrix(first_));
      if (k) {
        emit_text_or_json(std::to_string(*k), {{"order", *k}});
      } else {
        emit_text_or_json("infinite", {{"order", "infinite"}});
      }
      return kOk;
    };
  });

  auto* special = app.add_subcommand("special", "Whether an automorphism is special");
  rank(special);
  special->add_option("aut", first_)->required();
  special->callback([this] {
    action_ = [this] {
      const auto f = read_endo(n_, first_, globals_);
      if (!is_special(f)) {
        emit_text_or_json("not special", {{"special", false}});
        return kOk;
      }
      const auto p = format_permutation(spe_quotient_perm(f));
      emit_text_or_json("special, quotient " + p, {{"special", true}, {"quotient", p}});
      return kOk;
    };
  });

  auto* project = app.add_subcommand("project", "Projection to W_2");
  rank(project);
  project->add_flag("--aut", aut_, "Argument is an automorphism product");
  project->add_option("arg", first_)->required();
  project->callback([this] {
    action_ = [this] {
      if (!aut_) {
        const auto w = format_word(project_to_w2(parse_cox_word(n_, first_, {globals_.strict})));
        emit_text_or_json(w, {{"word", w}});
        return kOk;
      }
      try {
        emit_aut(split_lines(format_aut(induced_on_w2(read_product(n_, first_)).forward())));
        return kOk;
      } catch (const NotInducible& e) {
        err_ << "not inducible: " << e.what() << '\n';
        if (globals_.json) out_ << json{{"inducible", false}, {"reason", e.what()}}.dump() << '\n';
        return kVerificationFailed;
      }
    };
  });

  auto* closure = app.add_subcommand("closure", "Order of the subgroup generated by products");
  rank(closure);
  closure->add_option("--cap", cap_, "Element cap")->check(CLI::PositiveNumber);
  closure->add_option("generators", many_)->required();
  closure->callback([this] {
    action_ = [this] {
      std::vector<CoxAut> gens;
      for (const auto& text : many_) gens.push_back(read_product(n_, text));
      const auto result = closure_order(gens, cap_);
      if (const auto* k = std::get_if<std::size_t>(&result)) {
        emit_text_or_json(std::to_string(*k), {{"order", *k}});
        return kOk;
      }
      emit_text_or_json("exceeds cap " + std::to_string(cap_),
                        {{"order", nullptr}, {"cap", cap_}});
      return kVerificationFailed;
    };
  });

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);

  auto* relations = verify->add_subcommand("relations", "alpha_p sigma_ij alpha_p^-1 relations");
  rank(relations);
  relations->callback([this] {
    action_ = [this] { return emit_report(verify_conjugation_relations(n_)); };
  });

  auto* figure1 = verify->add_subcommand("figure1", "Edge orders of the Coxeter diagram");
  rank(figure1);
  figure1->add_option("--cutoff", figure_cutoff_, "Iteration bound for the infinite edge");
  figure1->callback([this] {
    action_ = [this] { return emit_report(verify_diagram_relations(n_, figure_cutoff_)); };
  });

  auto* prop34 = verify->add_subcommand("prop34", "Inner automorphisms by x1 and x2");
  rank(prop34);
  prop34->add_option("--ball", ball_, "Word length for the freeness check")
      ->check(CLI::PositiveNumber);
  prop34->callback([this] {
    action_ = [this] { return emit_report(prop34_check(n_, ball_)); };
  });

  auto* theorem_d = verify->add_subcommand("theorem-d", "Homomorphisms through Sym(n)");
  rank(theorem_d);
  theorem_d->callback([this] {
    action_ = [this] { return emit_report(theorem_d_check(n_)); };
  });

  auto* spe = verify->add_subcommand("spe", "Special automorphisms and W_2");
  spe->add_option("--cutoff", spe_cutoff_, "Iteration bound");
  spe->callback([this] {
    action_ = [this] { return emit_report(spe_w2_check(spe_cutoff_)); };
  });

  auto* lemma23 = verify->add_subcommand("lemma23", "Nielsen generators reached from Y at n = 3");
  lemma23->add_option("--length", length_, "Search depth")->check(CLI::PositiveNumber);
  lemma23->callback([this] {
    action_ = [this] { return emit_report(lemma23_check(length_)); };
  });

  auto* certify = app.add_subcommand("certify", "Produce certificates");
  certify->require_subcommand(1);
  auto* certify_helly = certify->add_subcommand("helly", "Subset induction certificate");
  rank(certify_helly);
  certify_helly->add_option("--d", d_, "Dimension")->required()->check(CLI::NonNegativeNumber);
  certify_helly->add_option("--cap", cap_, "Closure element cap")->check(CLI::PositiveNumber);
  certify_helly->add_option("--threads", threads_, "Worker threads, 0 for all cores");
  certify_helly->add_option("--out", out_file_, "Write the certificate here");
  certify_helly->callback([this] {
    action_ = [this] {
      const auto result = helly_certificate(n_, d_, {cap_, threads_});
      if (const auto* fail = std::get_if<FailureReport>(&result)) {
        if (globals_.json) {
          json failures = json::array();
          for (const auto& f : fail->failures) {
            std::vector<std::string> members;
            for (const auto& t : f.members) members.push_back(t.name());
            failures.push_back({{"k", f.k},
                                {"members", members},
                                {"FiniteClosure", f.finite_closure_reason},
                                {"DisconnectedParts", f.disconnected_reason},
                                {"ConjugateBlocks", f.conjugate_blocks_reason}});
          }
          out_ << json{{"ok", false}, {"n", fail->n}, {"d", fail->d}, {"failures", failures}}
                      .dump()
               << '\n';
        } else {
          out_ << fail->to_text();
        }
        return kVerificationFailed;
      }
      const auto& cert = std::get<HellyCertificate>(result);
      const std::string doc = certificate_to_json(cert);
      if (out_file_.empty()) {
        out_ << doc << '\n';
        return kOk;
      }
      std::ofstream file(out_file_);
      if (!(file << doc << '\n')) throw InputError("cannot write " + out_file_);
      emit_text_or_json("certificate with " + std::to_string(cert.subsets.size()) +
                            " subsets written to " + out_file_,
                        {{"ok", true}, {"subsets", cert.subsets.size()}, {"file", out_file_}});
      return kOk;
    };
  });

  auto* check = app.add_subcommand("check", "Re-validate certificates");
  check->require_subcommand(1);
  auto* check_helly = check->add_subcommand("helly", "Re-run every handler condition");
  check_helly->add_option("file", out_file_)->required();
  check_helly->add_option("--cap", cap_, "Closure element cap")->check(CLI::PositiveNumber);
  check_helly->add_option("--threads", threads_, "Worker threads, 0 for all cores");
  check_helly->callback([this] {
    action_ = [this] {
      std::ifstream file(out_file_);
      if (!file) throw InputError("cannot read " + out_file_);
      std::stringstream buffer;
      buffer << file.rdbuf();
      return emit_report(check_certificate(certificate_from_json(buffer.str()), {cap_, threads_}));
    };
  });
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app("Computations in Aut(W_n), W_n the free product of n copies of Z/2", "autw");
  configure(app);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  if (globals_.meta) emit_meta();
  if (!action_) {
    err_ << "usage error: no command given\n";
    return kUsageError;
  }
  try {
    return action_();
  } catch (const ParseError& e) {
    err_ << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err_ << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace autw::cli
