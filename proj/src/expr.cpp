#include "laws/expr.hpp"

#include <algorithm>

namespace laws {

namespace {

std::uint64_t weighted_word(const Word& w, const std::array<std::uint64_t, 4>& weight) {
  std::uint64_t total = 0;
  for (const Generator& g : w.letters())
    total = checked_add(total, weight[static_cast<std::size_t>(g.index())]);
  return total;
}

std::uint64_t weighted_nominal(const ExprNode& e, const std::array<std::uint64_t, 4>& weight) {
  switch (e.kind()) {
    case ExprKind::Gen:
      return weight[static_cast<std::size_t>(e.generator().index())];
    case ExprKind::Lit:
      return weighted_word(e.literal(), weight);
    case ExprKind::Concat: {
      std::uint64_t total = 0;
      for (const WordExpr& k : e.children())
        total = checked_add(total, weighted_nominal(*k, weight));
      return total;
    }
    case ExprKind::Inv:
      return weighted_nominal(*e.children()[0], weight);
    case ExprKind::Pow:
      return checked_mul(e.exponent(), weighted_nominal(*e.children()[0], weight));
    case ExprKind::Comm:
      return checked_add(
          checked_mul(2, weighted_nominal(*e.children()[0], weight)),
          checked_mul(2, weighted_nominal(*e.children()[1], weight)));
    case ExprKind::Subst: {
      std::array<std::uint64_t, 4> inner{};
      for (std::size_t i = 0; i < 4; ++i)
        inner[i] = weighted_word(e.images()[i], weight);
      return weighted_nominal(*e.children()[0], inner);
    }
  }
  throw error("unreachable expression kind");
}

constexpr std::array<std::uint64_t, 4> kUnitWeights{1, 1, 1, 1};

}  // namespace

WordExpr ExprNode::gen(Generator g, int rank) {
  if (rank == 0) rank = std::max(2, g.index() + 1);
  if (g.index() >= rank) throw error("generator index exceeds expression rank");
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Gen;
  n->rank_ = rank;
  n->gen_ = g;
  n->support_ = 1u << g.index();
  n->nominal_ = 1;
  return n;
}

WordExpr ExprNode::lit(Word w) {
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Lit;
  n->rank_ = w.rank();
  for (const Generator& g : w.letters()) n->support_ |= 1u << g.index();
  n->nominal_ = w.length();
  n->lit_ = std::move(w);
  return n;
}

WordExpr ExprNode::concat(std::vector<WordExpr> parts) {
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Concat;
  n->rank_ = 2;
  for (const WordExpr& k : parts) {
    n->rank_ = std::max(n->rank_, k->rank());
    n->support_ |= k->support();
    n->nominal_ = checked_add(n->nominal_, k->nominal());
  }
  n->kids_ = std::move(parts);
  return n;
}

WordExpr ExprNode::inv(WordExpr e) {
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Inv;
  n->rank_ = e->rank();
  n->support_ = e->support();
  n->nominal_ = e->nominal();
  n->kids_.push_back(std::move(e));
  return n;
}

WordExpr ExprNode::pow(WordExpr base, std::uint64_t exponent) {
  if (exponent == 0) throw error("Pow exponent must be positive");
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Pow;
  n->rank_ = base->rank();
  n->support_ = base->support();
  n->nominal_ = checked_mul(exponent, base->nominal());
  n->exponent_ = exponent;
  n->kids_.push_back(std::move(base));
  return n;
}

WordExpr ExprNode::comm(WordExpr u, WordExpr v) {
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Comm;
  n->rank_ = std::max(u->rank(), v->rank());
  n->support_ = u->support() | v->support();
  n->nominal_ = checked_add(checked_mul(2, u->nominal()), checked_mul(2, v->nominal()));
  n->kids_.push_back(std::move(u));
  n->kids_.push_back(std::move(v));
  return n;
}

WordExpr ExprNode::subst(WordExpr body, std::array<Word, 4> images) {
  if (body->rank() > 4) throw error("subst body rank exceeds 4");
  for (const Word& im : images)
    if (im.rank() != 2) throw error("subst images must be rank-2 words");
  auto n = std::shared_ptr<ExprNode>(new ExprNode());
  n->kind_ = ExprKind::Subst;
  n->rank_ = 2;
  for (int i = 0; i < 4; ++i)
    if (body->support() & (1u << i))
      for (const Generator& g : images[static_cast<std::size_t>(i)].letters())
        n->support_ |= 1u << g.index();
  n->images_ = std::move(images);
  n->kids_.push_back(std::move(body));
  n->nominal_ = weighted_nominal(*n, kUnitWeights);
  return n;
}

std::uint64_t nominal_length(const WordExpr& e) { return e->nominal(); }

namespace {

void check_flatten_size(std::size_t len, std::size_t cap) {
  if (len > cap)
    throw scale_error("flatten exceeds letter cap (" + std::to_string(cap) + ")");
}

Word flatten_rec(const ExprNode& e, std::size_t cap) {
  switch (e.kind()) {
    case ExprKind::Gen: {
      Letters l{e.generator()};
      return reduce(l, e.rank());
    }
    case ExprKind::Lit:
      return e.literal();
    case ExprKind::Concat: {
      Word acc(e.rank());
      for (const WordExpr& k : e.children()) {
        acc = concat(acc, flatten_rec(*k, cap).with_rank(e.rank()));
        check_flatten_size(acc.length(), cap);
      }
      return acc;
    }
    case ExprKind::Inv:
      return inverse(flatten_rec(*e.children()[0], cap));
    case ExprKind::Pow: {
      // Same doubling scheme as power(), with the cap enforced on partials.
      Word base = flatten_rec(*e.children()[0], cap);
      Word acc(base.rank());
      std::uint64_t k = e.exponent();
      while (k > 0) {
        if (k & 1) {
          acc = concat(acc, base);
          check_flatten_size(acc.length(), cap);
        }
        k >>= 1;
        if (k > 0) {
          base = concat(base, base);
          check_flatten_size(base.length(), cap);
        }
      }
      return acc;
    }
    case ExprKind::Comm: {
      Word u = flatten_rec(*e.children()[0], cap).with_rank(e.rank());
      Word v = flatten_rec(*e.children()[1], cap).with_rank(e.rank());
      check_flatten_size(2 * (u.length() + v.length()), cap);
      return commutator(u, v);
    }
    case ExprKind::Subst: {
      Word body = flatten_rec(*e.children()[0], cap);
      std::array<Word, 4> inv_images;
      for (std::size_t i = 0; i < 4; ++i) inv_images[i] = inverse(e.images()[i]);
      Letters out;
      for (const Generator& g : body.letters()) {
        const Word& im = g.sign() > 0 ? e.images()[static_cast<std::size_t>(g.index())]
                                      : inv_images[static_cast<std::size_t>(g.index())];
        for (const Generator& x : im.letters()) {
          if (!out.empty() && out.back() == x.inverse())
            out.pop_back();
          else
            out.push_back(x);
        }
        check_flatten_size(out.size(), cap);
      }
      return reduce(out, 2);
    }
  }
  throw error("unreachable expression kind");
}

}  // namespace

Word flatten(const WordExpr& e, std::size_t max_letters) {
  return flatten_rec(*e, max_letters);
}

WordExpr substitute_expr(const WordExpr& body, const std::vector<WordExpr>& images) {
  int needed = 0;
  for (int i = 0; i < 4; ++i)
    if (body->support() & (1u << i)) needed = i + 1;
  if (static_cast<int>(images.size()) < needed)
    throw error("substitute_expr: not enough images for the body's support");

  switch (body->kind()) {
    case ExprKind::Gen: {
      const WordExpr& im = images[static_cast<std::size_t>(body->generator().index())];
      return body->generator().sign() > 0 ? im : ExprNode::inv(im);
    }
    case ExprKind::Lit: {
      std::vector<WordExpr> parts;
      parts.reserve(body->literal().length());
      for (const Generator& g : body->literal().letters()) {
        const WordExpr& im = images[static_cast<std::size_t>(g.index())];
        parts.push_back(g.sign() > 0 ? im : ExprNode::inv(im));
      }
      return ExprNode::concat(std::move(parts));
    }
    case ExprKind::Concat: {
      std::vector<WordExpr> parts;
      parts.reserve(body->children().size());
      for (const WordExpr& k : body->children()) parts.push_back(substitute_expr(k, images));
      return ExprNode::concat(std::move(parts));
    }
    case ExprKind::Inv:
      return ExprNode::inv(substitute_expr(body->children()[0], images));
    case ExprKind::Pow:
      return ExprNode::pow(substitute_expr(body->children()[0], images), body->exponent());
    case ExprKind::Comm:
      return ExprNode::comm(substitute_expr(body->children()[0], images),
                            substitute_expr(body->children()[1], images));
    case ExprKind::Subst: {
      // Expand the inner substitution to expression level first.
      std::vector<WordExpr> inner;
      inner.reserve(4);
      for (const Word& im : body->images()) inner.push_back(word_to_expr(im));
      WordExpr expanded = substitute_expr(body->children()[0], inner);
      return substitute_expr(expanded, images);
    }
  }
  throw error("unreachable expression kind");
}

WordExpr word_to_expr(const Word& w) { return ExprNode::lit(w); }

nlohmann::ordered_json expr_to_json(const WordExpr& e) {
  using json = nlohmann::ordered_json;
  switch (e->kind()) {
    case ExprKind::Gen: {
      char c = static_cast<char>((e->generator().sign() > 0 ? 'a' : 'A') + e->generator().index());
      return json{{"gen", std::string(1, c)}};
    }
    case ExprKind::Lit: {
      json parts = json::array();
      for (const Generator& g : e->literal().letters()) {
        char c = static_cast<char>((g.sign() > 0 ? 'a' : 'A') + g.index());
        parts.push_back(json{{"gen", std::string(1, c)}});
      }
      return json{{"concat", std::move(parts)}};
    }
    case ExprKind::Concat: {
      json parts = json::array();
      for (const WordExpr& k : e->children()) parts.push_back(expr_to_json(k));
      return json{{"concat", std::move(parts)}};
    }
    case ExprKind::Inv:
      return json{{"inv", expr_to_json(e->children()[0])}};
    case ExprKind::Pow:
      return json{{"pow", json{{"base", expr_to_json(e->children()[0])}, {"exp", e->exponent()}}}};
    case ExprKind::Comm:
      return json{{"comm", json::array({expr_to_json(e->children()[0]), expr_to_json(e->children()[1])})}};
    case ExprKind::Subst: {
      json images = json::array();
      for (const Word& im : e->images()) images.push_back(to_string(im));
      return json{{"subst", json{{"body", expr_to_json(e->children()[0])}, {"images", std::move(images)}}}};
    }
  }
  throw error("unreachable expression kind");
}

WordExpr expr_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) throw parse_error("expression node must be a single-key object");
  const auto it = j.begin();
  const std::string& key = it.key();
  const nlohmann::json& v = it.value();
  if (key == "gen") {
    const std::string s = v.get<std::string>();
    if (s.size() != 1) throw parse_error("gen expects a single letter");
    Word w = parse_word(s);
    return ExprNode::gen(w.letters().at(0), w.rank());
  }
  if (key == "concat") {
    if (!v.is_array()) throw parse_error("concat expects an array");
    // Coalesce a concat of bare generators back into a flat literal.
    bool all_gen = !v.empty();
    for (const auto& part : v)
      if (!(part.is_object() && part.size() == 1 && part.begin().key() == "gen")) all_gen = false;
    if (all_gen) {
      std::string text;
      for (const auto& part : v) text += part.begin().value().get<std::string>();
      return ExprNode::lit(parse_word(text));
    }
    std::vector<WordExpr> parts;
    parts.reserve(v.size());
    for (const auto& part : v) parts.push_back(expr_from_json(part));
    return ExprNode::concat(std::move(parts));
  }
  if (key == "inv") return ExprNode::inv(expr_from_json(v));
  if (key == "pow")
    return ExprNode::pow(expr_from_json(v.at("base")), v.at("exp").get<std::uint64_t>());
  if (key == "comm") {
    if (!v.is_array() || v.size() != 2) throw parse_error("comm expects two children");
    return ExprNode::comm(expr_from_json(v[0]), expr_from_json(v[1]));
  }
  if (key == "subst") {
    std::array<Word, 4> images;
    const auto& ims = v.at("images");
    if (!ims.is_array() || ims.size() != 4) throw parse_error("subst expects four images");
    for (std::size_t i = 0; i < 4; ++i) images[i] = parse_word(ims[i].get<std::string>(), 2);
    return ExprNode::subst(expr_from_json(v.at("body")), std::move(images));
  }
  throw parse_error("unknown expression key: " + key);
}

}  // namespace laws
