#ifndef LAWS_EXPR_HPP
#define LAWS_EXPR_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "json.hpp"
#include "laws/word.hpp"

namespace laws {

// Structured word expressions.  Constructed laws reach nominal lengths of
// 1e4..1e6 and beyond; the tree form keeps evaluation at O(nodes) group
// operations instead of O(flattened length).
//
// Lit is an internal leaf holding a whole flat word; it serializes as a
// concat of gen nodes, so the external JSON schema stays
// gen | inv | concat | pow | comm | subst.
enum class ExprKind { Gen, Lit, Concat, Inv, Pow, Comm, Subst };

class ExprNode;
using WordExpr = std::shared_ptr<const ExprNode>;

class ExprNode {
 public:
  static WordExpr gen(Generator g, int rank = 0);
  static WordExpr lit(Word w);
  static WordExpr concat(std::vector<WordExpr> parts);
  static WordExpr inv(WordExpr e);
  static WordExpr pow(WordExpr base, std::uint64_t exponent);  // exponent >= 1
  static WordExpr comm(WordExpr u, WordExpr v);
  // body must have rank 4; images are the words substituted for a,b,c,d and
  // must be rank-2 words.
  static WordExpr subst(WordExpr body, std::array<Word, 4> images);

  ExprKind kind() const { return kind_; }
  int rank() const { return rank_; }
  unsigned support() const { return support_; }  // bitmask of generator indices
  Generator generator() const { return gen_; }
  const Word& literal() const { return lit_; }
  const std::vector<WordExpr>& children() const { return kids_; }
  std::uint64_t exponent() const { return exponent_; }
  const std::array<Word, 4>& images() const { return images_; }
  std::uint64_t nominal() const { return nominal_; }

 private:
  ExprNode() = default;
  ExprKind kind_ = ExprKind::Gen;
  int rank_ = 2;
  unsigned support_ = 0;
  Generator gen_;
  Word lit_;
  std::vector<WordExpr> kids_;
  std::uint64_t exponent_ = 0;
  std::array<Word, 4> images_;
  std::uint64_t nominal_ = 0;
};

// Unreduced construction length: Gen -> 1, Concat -> sum, Inv -> same,
// Pow(e,k) -> k*len(e), Comm -> 2len+2len, Subst -> sum of image lengths
// over the body's letters.
std::uint64_t nominal_length(const WordExpr& e);

inline constexpr std::size_t kDefaultFlattenCap = 60'000'000;

// Fully reduced word equal to the expression as a group element.  Throws
// scale_error if intermediate words would exceed max_letters.
Word flatten(const WordExpr& e, std::size_t max_letters = kDefaultFlattenCap);

// Expression-level substitution: replaces generator i of body by images[i]
// (used to plug laws into laws, where the images are themselves trees).
WordExpr substitute_expr(const WordExpr& body, const std::vector<WordExpr>& images);

WordExpr word_to_expr(const Word& w);

nlohmann::ordered_json expr_to_json(const WordExpr& e);
WordExpr expr_from_json(const nlohmann::json& j);

}  // namespace laws

#endif
