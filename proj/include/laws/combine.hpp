#ifndef LAWS_COMBINE_HPP
#define LAWS_COMBINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "laws/expr.hpp"

namespace laws {

// How the recursive combiner decides whether two half-results are equal as
// reduced words (the w1 = w2^{+-1} shortcut that keeps the output
// non-trivial).
//
//   exact            compare reduced words.  Halves whose flattened form is
//                    unavailable (beyond flatten_cap) are first compared by
//                    evaluating both on a fixed deterministic probe set;
//                    differing values prove inequality, which is the only
//                    fact needed to build [w1,w2].  If the probes cannot
//                    separate them the words are flattened outright and a
//                    scale_error escapes when that exceeds the cap.
//   distinct_powers  only valid when the inputs are pairwise distinct powers
//                    of a single generator: sub-combines of disjoint
//                    nonempty input sets are never equal, so no checks run
//                    and nothing is flattened.  Used at length-accounting
//                    scale (Landau laws for large n); validated against the
//                    exact policy everywhere both can run.
enum class CollapsePolicy { exact, distinct_powers };

struct CombineOptions {
  CollapsePolicy policy = CollapsePolicy::exact;
  std::size_t flatten_cap = kDefaultFlattenCap;
};

struct CombineTrace {
  WordExpr output;
  std::size_t m = 0;
  std::uint64_t max_input_length = 0;
  std::uint64_t nominal_output_length = 0;
  std::size_t collapse_events = 0;
  // Reduced form of the output; absent when flattening was skipped.
  std::optional<Word> reduced;
};

// Merges m trivializing words into one non-trivial word trivializing the
// union of the tuples any input trivializes.  The output length obeys
// 16 * m^2 * max|v_i| and, for m >= 2, 4^(floor(log2(m-1))+2) * max|v_i|.
CombineTrace combine(const std::vector<Word>& words, const CombineOptions& options = {});

// Expression-level inputs, for constructions whose building blocks are
// themselves large law trees.  max_input_length is then nominal length.
struct CombineInput {
  WordExpr expr;
  std::optional<Word> flat;  // reduced form, if the caller has it
};
CombineTrace combine_exprs(std::vector<CombineInput> inputs, const CombineOptions& options = {});

// W' = { w^e : w in words, e in exponents }, deduplicated as reduced words
// (first occurrence wins).  Exponents must be positive.
std::vector<Word> power_closure(const std::vector<Word>& words,
                                const std::vector<std::uint64_t>& exponents);

// The sharper bound of the combiner proof: 4 * max for m = 1, otherwise
// 4^(floor(log2(m-1))+2) * max.
std::uint64_t combine_length_bound(std::size_t m, std::uint64_t max_input_length);

}  // namespace laws

#endif
