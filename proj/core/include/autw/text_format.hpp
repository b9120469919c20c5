#pragma once

// Text codecs.
//
//   Coxeter word   `s1 s2 s1`, identity `e`
//   free word      `x1 x2^-1`, identity `e`
//   endomorphism   one line per generator, `s1 -> s2 s1 s2` (lines may also
//                  be separated by `;`); unlisted generators are fixed
//   product        `sigma(1,2) alpha(2 3) alpha((1 2)(3 4)) id`, read as a
//                  product with the rightmost factor acting first
//
// Parse failures throw ParseError carrying the byte offset of the bad token.

#include <string>
#include <string_view>

#include "autw/automorphisms.hpp"
#include "autw/words.hpp"

namespace autw {

struct ParseOptions {
  /// Reject words that are not already reduced instead of reducing them.
  bool strict = false;
};

std::string format_word(const CoxWord& u);
std::string format_word(const FreeWord& w);

CoxWord parse_cox_word(int rank, std::string_view text, ParseOptions options = {});
FreeWord parse_free_word(int rank, std::string_view text, ParseOptions options = {});

std::string format_aut(const CoxEndo& f);
std::string format_aut(const FreeEndo& f);

CoxEndo parse_aut(int rank, std::string_view text, ParseOptions options = {});
FreeEndo parse_free_endo(int rank, std::string_view text, ParseOptions options = {});

/// Product of sigma(i,j), alpha(<cycles>) and id factors.
CoxAut parse_aut_product(int rank, std::string_view text);

}  // namespace autw
