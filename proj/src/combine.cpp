#include "laws/combine.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "laws/eval.hpp"
#include "laws/perm.hpp"
#include "laws/rng.hpp"

namespace laws {

namespace {

bool equal_or_inverse(const Word& u, const Word& v) {
  if (u.length() != v.length()) return false;
  if (u == v) return true;
  return u == inverse(v);
}

// Fixed probe assignments used to separate words that are too large to
// flatten: differing evaluations prove the words are distinct group
// elements.  Built once, deterministically.
const std::vector<std::vector<Perm>>& probe_assignments() {
  static const std::vector<std::vector<Perm>> probes = [] {
    Rng rng(0x9e3779b97f4a7c15ull);
    std::vector<std::vector<Perm>> out;
    for (int degree : {6, 8, 10, 12}) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Perm> tuple;
        for (int slot = 0; slot < 4; ++slot) {
          std::vector<int> images(static_cast<std::size_t>(degree));
          for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
          for (int i = degree - 1; i > 0; --i)
            std::swap(images[static_cast<std::size_t>(i)],
                      images[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
          tuple.push_back(Perm::from_images(images));
        }
        out.push_back(std::move(tuple));
      }
    }
    return out;
  }();
  return probes;
}

// True if the probes prove u != w and u != w^-1 in the free group.
bool probes_separate(const WordExpr& u, const WordExpr& w) {
  bool diff_direct = false;
  bool diff_inverse = false;
  for (const std::vector<Perm>& tuple : probe_assignments()) {
    Perm pu = evaluate(u, tuple);
    Perm pw = evaluate(w, tuple);
    if (!(pu == pw)) diff_direct = true;
    if (!(pu == invert(pw))) diff_inverse = true;
    if (diff_direct && diff_inverse) return true;
  }
  return false;
}

struct Piece {
  WordExpr expr;
  std::optional<Word> flat;
};

struct Combiner {
  const std::vector<CombineInput>& inputs;
  const CombineOptions& options;
  int rank;
  std::size_t collapses = 0;

  const Word& force_flat(Piece& p) {
    if (!p.flat) p.flat = flatten(p.expr, options.flatten_cap);
    return *p.flat;
  }

  bool halves_equal(Piece& left, Piece& right) {
    if (left.flat && right.flat) return equal_or_inverse(*left.flat, *right.flat);
    if (probes_separate(left.expr, right.expr)) return false;
    return equal_or_inverse(force_flat(left), force_flat(right));
  }

  Piece run(std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      const CombineInput& input = inputs[lo];
      // z := the smallest-index generator of which the input is not a power.
      // A reduced word is a generator power exactly when its support is a
      // single index.
      int z_index = input.expr->support() == 1u ? 1 : 0;
      WordExpr expr = ExprNode::comm(input.expr, ExprNode::gen(Generator::make(z_index, +1), rank));
      Piece piece{expr, std::nullopt};
      if (options.policy == CollapsePolicy::exact && input.flat &&
          checked_mul(2, checked_add(input.flat->length(), 1)) <= options.flatten_cap)
        piece.flat = commutator(input.flat->with_rank(rank),
                                reduce({Generator::make(z_index, +1)}, rank));
      return piece;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Piece left = run(lo, mid);
    Piece right = run(mid, hi);
    if (options.policy == CollapsePolicy::exact && halves_equal(left, right)) {
      // The halves trivialize the same tuples; [w1,w2] would be trivial, so
      // take w1 itself.
      ++collapses;
      return left;
    }
    Piece piece{ExprNode::comm(left.expr, right.expr), std::nullopt};
    if (options.policy == CollapsePolicy::exact && left.flat && right.flat &&
        2 * (left.flat->length() + right.flat->length()) <= options.flatten_cap) {
      piece.flat = commutator(*left.flat, *right.flat);
      if (piece.flat->empty())
        throw error("combine produced a trivial word despite the collapse check");
    }
    return piece;
  }
};

}  // namespace

std::uint64_t combine_length_bound(std::size_t m, std::uint64_t max_input_length) {
  if (m == 0) throw error("combine_length_bound requires m >= 1");
  if (m == 1) return checked_mul(4, max_input_length);
  unsigned log2_floor = 0;
  for (std::size_t v = m - 1; v > 1; v >>= 1) ++log2_floor;
  std::uint64_t factor = 1;
  for (unsigned i = 0; i < log2_floor + 2; ++i) factor = checked_mul(factor, 4);
  return checked_mul(factor, max_input_length);
}

CombineTrace combine_exprs(std::vector<CombineInput> inputs, const CombineOptions& options) {
  if (inputs.empty()) throw error("combine requires at least one word");
  int rank = 2;
  for (const CombineInput& input : inputs) {
    if (!input.expr) throw error("combine input expression is null");
    if (input.expr->nominal() == 0 || (input.flat && input.flat->empty()))
      throw error("combine inputs must be nonempty");
    rank = std::max(rank, input.expr->rank());
  }
  if (rank < 2) throw error("combine requires rank >= 2");
  std::uint64_t max_len = 0;
  for (const CombineInput& input : inputs) {
    std::uint64_t len = input.flat ? input.flat->length() : nominal_length(input.expr);
    max_len = std::max(max_len, len);
  }
  if (options.policy == CollapsePolicy::distinct_powers) {
    std::set<Word> seen;
    unsigned support0 = inputs[0].expr->support();
    for (const CombineInput& input : inputs) {
      unsigned s = input.expr->support();
      bool single = s == support0 && (s & (s - 1)) == 0 && s != 0;
      if (!single || !input.flat || !seen.insert(*input.flat).second)
        throw error("distinct_powers policy requires pairwise distinct flat powers of one generator");
    }
  }

  Combiner combiner{inputs, options, rank};
  Piece top = combiner.run(0, inputs.size());

  CombineTrace trace;
  trace.output = top.expr;
  trace.m = inputs.size();
  trace.max_input_length = max_len;
  trace.nominal_output_length = nominal_length(top.expr);
  trace.collapse_events = combiner.collapses;
  trace.reduced = std::move(top.flat);
  if (trace.reduced && trace.reduced->empty())
    throw error("combine produced a trivial word");
  return trace;
}

CombineTrace combine(const std::vector<Word>& words, const CombineOptions& options) {
  if (words.empty()) throw error("combine requires at least one word");
  int rank = words[0].rank();
  std::vector<CombineInput> inputs;
  inputs.reserve(words.size());
  for (const Word& w : words) {
    if (w.empty()) throw error("combine inputs must be nonempty");
    if (w.rank() != rank) throw error("combine inputs must share a rank");
    inputs.push_back(CombineInput{ExprNode::lit(w), w});
  }
  return combine_exprs(std::move(inputs), options);
}

std::vector<Word> power_closure(const std::vector<Word>& words,
                                const std::vector<std::uint64_t>& exponents) {
  for (std::uint64_t e : exponents)
    if (e == 0) throw error("power_closure exponents must be positive");
  std::vector<Word> result;
  std::set<Word> seen;
  for (const Word& w : words) {
    if (w.empty()) throw error("power_closure inputs must be nonempty");
    for (std::uint64_t e : exponents) {
      Word p = power(w, e);
      if (seen.insert(p).second) result.push_back(std::move(p));
    }
  }
  return result;
}

}  // namespace laws
