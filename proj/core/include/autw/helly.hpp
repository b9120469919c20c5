#pragma once

// Certificates for the subset induction behind the fixed-point criterion on
// d-dimensional CAT(0) spaces: if every (d+1)-subset of the generating set
// Y has a fixed point, so does Aut(W_n).  The certificate assigns to every
// (k+1)-subset Y' of Y, 1 <= k <= d, one handler whose algebraic premises
// are checked here; the geometric conclusions are those of the cited fixed
// point theorems and are recorded only as justification tags.
//
//   FiniteClosure      <Y'> is finite (bounded, so it fixes a point)
//   DisconnectedParts  Y' splits into mutually commuting parts of size <= k
//   ConjugateBlocks    l = floor(n/(k+1)) conjugates alpha_tau_i Y'
//                      alpha_tau_i^-1 commute pairwise and d < k*l

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "autw/diagram.hpp"
#include "autw/permutation.hpp"
#include "autw/report.hpp"

namespace autw {

struct FiniteClosure {
  std::size_t order;
};

struct DisconnectedParts {
  std::vector<std::vector<GeneratorTag>> parts;
};

struct ConjugateBlocks {
  int l;
  std::vector<Permutation> taus;
};

using Handler = std::variant<FiniteClosure, DisconnectedParts, ConjugateBlocks>;

std::string handler_name(const Handler& h);

struct SubsetRecord {
  int k;
  std::vector<GeneratorTag> members;
  Handler handler;
};

struct HellyCertificate {
  int n;
  int d;
  /// Ordered by k, then lexicographically by member tags.
  std::vector<SubsetRecord> subsets;
};

struct SubsetFailure {
  int k;
  std::vector<GeneratorTag> members;
  std::string finite_closure_reason;
  std::string disconnected_reason;
  std::string conjugate_blocks_reason;
};

struct FailureReport {
  int n;
  int d;
  std::vector<SubsetFailure> failures;
  std::string to_text() const;
};

struct HellyOptions {
  /// Element cap for FiniteClosure enumerations.
  std::size_t closure_cap = 100000;
  /// Worker threads for subset validation; 0 picks the hardware count.
  unsigned threads = 0;
};

/// (1, (k+1)(i-1)+1)(2, (k+1)(i-1)+2)...(k+1, (k+1)i).  Throws InputError
/// unless k >= 1 and 1 <= i <= floor(n/(k+1)).
Permutation tau_permutation(int k, int i, int n);

/// floor(n/2) <= k * floor(n/(k+1)).  Throws InputError unless n >= 4, k >= 1.
bool floor_inequality(int n, int k);

/// Throws InputError for n < 4 or d < 0.
std::variant<HellyCertificate, FailureReport> helly_certificate(
    int n, int d, const HellyOptions& options = {});

/// Re-runs every handler condition from scratch and checks that the records
/// cover each (k+1)-subset exactly once.
Report check_certificate(const HellyCertificate& cert, const HellyOptions& options = {});

/// {"n", "d", "subsets": [{"k", "members", "handler", "evidence"}]}
std::string certificate_to_json(const HellyCertificate& cert);
/// Throws ParseError on malformed documents.
HellyCertificate certificate_from_json(std::string_view text);

}  // namespace autw
