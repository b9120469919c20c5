#include "autw/text_format.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "autw/errors.hpp"

namespace autw {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<Token> tokenize(std::string_view text, std::size_t base) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    if (pos > start) out.push_back({text.substr(start, pos - start), base + start});
  }
  return out;
}

// Parses a positive decimal at the front of `s`; returns digits consumed.
std::size_t parse_index(std::string_view s, long& value) {
  std::size_t i = 0;
  value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i] - '0');
    if (value > 1'000'000'000L) return 0;
    ++i;
  }
  return i;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Word parsers with an offset base so that nested parses report positions
// relative to the outermost text.

CoxWord parse_cox_at(int rank, std::string_view text, std::size_t base,
                     ParseOptions options) {
  const auto tokens = tokenize(text, base);
  if (tokens.empty()) throw ParseError(base, "empty word; write `e` for the identity");
  if (tokens.size() == 1 && tokens[0].text == "e") return CoxWord(rank);
  std::vector<int> stack;
  for (const auto& tok : tokens) {
    if (tok.text == "e") throw ParseError(tok.offset, "`e` must stand alone");
    if (tok.text.size() < 2 || tok.text[0] != 's') {
      throw ParseError(tok.offset, "expected a token `s<k>`, got `" +
                                       std::string(tok.text) + "`");
    }
    long k = 0;
    const std::size_t used = parse_index(tok.text.substr(1), k);
    if (used == 0 || used + 1 != tok.text.size()) {
      throw ParseError(tok.offset, "malformed generator `" + std::string(tok.text) + "`");
    }
    if (k < 1 || k > rank) {
      throw ParseError(tok.offset, "generator s" + std::to_string(k) +
                                       " outside s1..s" + std::to_string(rank));
    }
    if (!stack.empty() && stack.back() == k) {
      if (options.strict) throw ParseError(tok.offset, "word is not reduced");
      stack.pop_back();
    } else {
      stack.push_back(static_cast<int>(k));
    }
  }
  return cox_reduce(rank, stack);
}

FreeWord parse_free_at(int rank, std::string_view text, std::size_t base,
                       ParseOptions options) {
  const auto tokens = tokenize(text, base);
  if (tokens.empty()) throw ParseError(base, "empty word; write `e` for the identity");
  if (tokens.size() == 1 && tokens[0].text == "e") return FreeWord(rank);
  std::vector<int> stack;
  for (const auto& tok : tokens) {
    if (tok.text == "e") throw ParseError(tok.offset, "`e` must stand alone");
    if (tok.text.size() < 2 || tok.text[0] != 'x') {
      throw ParseError(tok.offset, "expected a token `x<k>` or `x<k>^-1`, got `" +
                                       std::string(tok.text) + "`");
    }
    long k = 0;
    const std::size_t used = parse_index(tok.text.substr(1), k);
    const auto rest = tok.text.substr(1 + used);
    int exponent = 1;
    if (used == 0 || (!rest.empty() && rest != "^-1")) {
      throw ParseError(tok.offset, "malformed generator `" + std::string(tok.text) + "`");
    }
    if (rest == "^-1") exponent = -1;
    if (k < 1 || k > rank) {
      throw ParseError(tok.offset, "generator x" + std::to_string(k) +
                                       " outside x1..x" + std::to_string(rank));
    }
    const int letter = static_cast<int>(k) * exponent;
    if (!stack.empty() && stack.back() == -letter) {
      if (options.strict) throw ParseError(tok.offset, "word is not freely reduced");
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return free_reduce(rank, stack);
}

struct EndoLine {
  int generator;
  std::string_view image;
  std::size_t image_offset;
};

std::vector<EndoLine> split_endo_lines(int rank, std::string_view text, char prefix) {
  std::vector<EndoLine> out;
  std::vector<bool> seen(static_cast<std::size_t>(rank) + 1, false);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != '\n' && text[end] != ';') ++end;
    std::size_t offset = pos;
    const auto line = trim(text.substr(pos, end - pos), offset);
    pos = end + 1;
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(offset, "expected `" + std::string(1, prefix) + "<i> -> <word>`");
    }
    std::size_t lhs_offset = offset;
    const auto lhs = trim(line.substr(0, arrow), lhs_offset);
    long k = 0;
    if (lhs.size() < 2 || lhs[0] != prefix || parse_index(lhs.substr(1), k) + 1 != lhs.size()) {
      throw ParseError(lhs_offset, "malformed generator on the left of `->`");
    }
    if (k < 1 || k > rank) {
      throw ParseError(lhs_offset, "generator index " + std::to_string(k) +
                                       " outside 1.." + std::to_string(rank));
    }
    if (seen[static_cast<std::size_t>(k)]) {
      throw ParseError(lhs_offset, "generator listed twice");
    }
    seen[static_cast<std::size_t>(k)] = true;
    out.push_back({static_cast<int>(k), line.substr(arrow + 2), offset + arrow + 2});
  }
  if (out.empty()) throw ParseError(0, "no generator images given");
  return out;
}

}  // namespace

std::string format_word(const CoxWord& u) {
  if (u.is_identity()) return "e";
  std::string out;
  for (int a : u.letters()) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(a);
  }
  return out;
}

std::string format_word(const FreeWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int a : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(a > 0 ? a : -a);
    if (a < 0) out += "^-1";
  }
  return out;
}

CoxWord parse_cox_word(int rank, std::string_view text, ParseOptions options) {
  return parse_cox_at(rank, text, 0, options);
}

FreeWord parse_free_word(int rank, std::string_view text, ParseOptions options) {
  return parse_free_at(rank, text, 0, options);
}

std::string format_aut(const CoxEndo& f) {
  std::string out;
  for (int i = 1; i <= f.rank(); ++i) {
    out += "s" + std::to_string(i) + " -> " + format_word(f.image(i)) + "\n";
  }
  return out;
}

std::string format_aut(const FreeEndo& f) {
  std::string out;
  for (int i = 1; i <= f.rank(); ++i) {
    out += "x" + std::to_string(i) + " -> " + format_word(f.image(i)) + "\n";
  }
  return out;
}

CoxEndo parse_aut(int rank, std::string_view text, ParseOptions options) {
  auto images = CoxEndo::identity(rank).images();
  for (const auto& line : split_endo_lines(rank, text, 's')) {
    auto w = parse_cox_at(rank, line.image, line.image_offset, options);
    if (!cox_mul(w, w).is_identity()) {
      throw ParseError(line.image_offset, "image of s" + std::to_string(line.generator) +
                                              " is not an involution");
    }
    images[static_cast<std::size_t>(line.generator - 1)] = std::move(w);
  }
  return CoxEndo::from_images(rank, std::move(images));
}

FreeEndo parse_free_endo(int rank, std::string_view text, ParseOptions options) {
  auto images = FreeEndo::identity(rank).images();
  for (const auto& line : split_endo_lines(rank, text, 'x')) {
    images[static_cast<std::size_t>(line.generator - 1)] =
        parse_free_at(rank, line.image, line.image_offset, options);
  }
  return FreeEndo::from_images(rank, std::move(images));
}

CoxAut parse_aut_product(int rank, std::string_view text) {
  CoxAut result = CoxAut::identity(rank);
  std::size_t pos = 0;
  bool any = false;
  auto skip = [&] {
    while (pos < text.size() && (is_space(text[pos]) || text[pos] == '*')) ++pos;
  };
  // Returns the index just past the parenthesis matching text[open].
  auto match_paren = [&](std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) return i + 1;
    }
    throw ParseError(open, "unbalanced parenthesis");
  };
  while (true) {
    skip();
    if (pos == text.size()) break;
    const std::size_t start = pos;
    const auto rest = text.substr(pos);
    if (rest.substr(0, 6) == "sigma(") {
      const std::size_t close = match_paren(pos + 5);
      const auto inner = text.substr(pos + 6, close - pos - 7);
      const auto comma = inner.find(',');
      long i = 0;
      long j = 0;
      std::size_t io = 0;
      std::size_t jo = comma + 1;
      const auto a = comma == std::string_view::npos ? inner : trim(inner.substr(0, comma), io);
      const auto b = comma == std::string_view::npos ? std::string_view{}
                                                     : trim(inner.substr(comma + 1), jo);
      if (comma == std::string_view::npos || parse_index(a, i) != a.size() || a.empty() ||
          parse_index(b, j) != b.size() || b.empty()) {
        throw ParseError(start, "expected `sigma(i,j)`");
      }
      if (i < 1 || i > rank || j < 1 || j > rank || i == j) {
        throw ParseError(start, "sigma(i,j) needs 1 <= i != j <= " + std::to_string(rank));
      }
      result = result * sigma(static_cast<int>(i), static_cast<int>(j), rank);
      pos = close;
    } else if (rest.substr(0, 6) == "alpha(") {
      const std::size_t close = match_paren(pos + 5);
      const std::size_t inner_start = pos + 6;
      std::size_t offset = inner_start;
      const auto inner = trim(text.substr(inner_start, close - inner_start - 1), offset);
      Permutation p = Permutation::identity(rank);
      try {
        if (inner == "id" || (!inner.empty() && inner.front() == '(')) {
          p = parse_permutation(rank, inner);
        } else {
          p = parse_permutation(rank, "(" + std::string(inner) + ")");
        }
      } catch (const ParseError& e) {
        throw ParseError(offset, std::string("in alpha: ") + e.what());
      }
      result = result * alpha(p);
      pos = close;
    } else if (rest.substr(0, 2) == "id" &&
               (rest.size() == 2 || is_space(rest[2]) || rest[2] == '*')) {
      pos += 2;
    } else {
      throw ParseError(start, "expected `sigma(i,j)`, `alpha(...)` or `id`");
    }
    any = true;
  }
  if (!any) throw ParseError(0, "empty automorphism product");
  return result;
}

}  // namespace autw
