#ifndef LAWS_EVAL_HPP
#define LAWS_EVAL_HPP

#include <concepts>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "laws/expr.hpp"
#include "laws/perm.hpp"

namespace laws {

// A group context supplies the operations the evaluator needs.  Contexts are
// cheap to copy by reference and never own per-evaluation state.
template <class C>
concept GroupContext = requires(const C& c, const typename C::Elem& x, const typename C::Elem& y) {
  { c.mul(x, y) } -> std::same_as<typename C::Elem>;
  { c.inv(x) } -> std::same_as<typename C::Elem>;
  { c.identity() } -> std::same_as<typename C::Elem>;
  { c.is_identity(x) } -> std::same_as<bool>;
  { c.equal(x, y) } -> std::same_as<bool>;
};

struct PermCtx {
  using Elem = Perm;
  int degree;
  Elem mul(const Perm& a, const Perm& b) const { return compose(a, b); }
  Elem inv(const Perm& a) const { return invert(a); }
  Elem identity() const { return Perm::identity(degree); }
  bool is_identity(const Perm& a) const { return a.is_identity(); }
  bool equal(const Perm& a, const Perm& b) const { return a == b; }
};

// Index-based context for tiny groups: elements are indices into a dense
// multiplication table (element 0 is the identity).
struct TableCtx {
  using Elem = std::uint16_t;
  std::size_t size = 0;
  std::vector<std::uint16_t> mul_table;  // size*size, row-major
  std::vector<std::uint16_t> inv_table;

  static TableCtx from_elements(const std::vector<Perm>& elements);

  Elem mul(Elem a, Elem b) const { return mul_table[static_cast<std::size_t>(a) * size + b]; }
  Elem inv(Elem a) const { return inv_table[a]; }
  Elem identity() const { return 0; }
  bool is_identity(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
};

// Tree evaluator with subexpression caching.  The expression is compiled
// once into a node array; repeated eval() calls reuse every cached subtree
// whose supporting generators did not change since the previous call.  In
// verification sweeps (outer loop over g, inner loop over h) this makes all
// g-only subtrees, e.g. the power words a^k of the combined laws, cost one
// evaluation per g instead of one per pair.
//
// Commutator nodes short-circuit on an identity child ([e,x] = [x,e] = e),
// which is what keeps exhaustive verification of combined laws linear in the
// group size once some input word kills the current pair.
template <GroupContext Ctx>
class Evaluator {
 public:
  Evaluator(const Ctx& ctx, const WordExpr& root) : ctx_(ctx) {
    root_ = compile(root);
    frames_[0].gens.resize(4, ctx_.identity());
    frames_[0].inv_ok.assign(4, false);
    frames_[0].invs.resize(4, ctx_.identity());
    frames_[0].epoch.assign(4, 1);
    frames_[0].have.assign(4, false);
  }

  using Elem = typename Ctx::Elem;

  // Evaluates the expression with generator i bound to assignment[i].
  Elem eval(std::span<const Elem> assignment) {
    Frame& f = frames_[0];
    unsigned sup = nodes_[static_cast<std::size_t>(root_)].expr->support();
    for (int i = 0; i < 4; ++i)
      if ((sup & (1u << i)) && static_cast<std::size_t>(i) >= assignment.size())
        throw error("missing generator assignment");
    for (std::size_t i = 0; i < assignment.size() && i < 4; ++i) {
      if (!f.have[i] || !ctx_.equal(f.gens[i], assignment[i])) {
        f.gens[i] = assignment[i];
        f.have[i] = true;
        f.inv_ok[i] = false;
        ++f.epoch[i];
      }
    }
    return value(root_);
  }

 private:
  struct Frame {
    std::vector<Elem> gens;
    std::vector<Elem> invs;
    std::vector<char> inv_ok;
    std::vector<std::uint64_t> epoch;
    std::vector<char> have;
    int parent = -1;
  };

  struct Node {
    const ExprNode* expr;
    int frame;                 // frame whose generators this node reads
    std::vector<int> kids;
    int subst_frame = -1;      // for Subst: the frame its body lives in
    Elem cached{};
    std::uint64_t stamp = 0;   // sum of frame epochs at caching time; 0 = never
  };

  int compile(const WordExpr& e, int frame = 0) {
    auto key = std::make_pair(e.get(), frame);
    if (auto it = compiled_.find(key); it != compiled_.end()) return it->second;
    Node node;
    node.expr = e.get();
    node.frame = frame;
    if (e->kind() == ExprKind::Subst) {
      node.subst_frame = static_cast<int>(frames_.size());
      frames_.emplace_back();
      Frame& nf = frames_.back();
      nf.gens.resize(4, ctx_.identity());
      nf.invs.resize(4, ctx_.identity());
      nf.inv_ok.assign(4, false);
      nf.epoch.assign(4, 1);
      nf.have.assign(4, false);
      nf.parent = frame;
      node.kids.push_back(compile(e->children()[0], node.subst_frame));
    } else {
      for (const WordExpr& k : e->children()) node.kids.push_back(compile(k, frame));
    }
    nodes_.push_back(std::move(node));
    int idx = static_cast<int>(nodes_.size()) - 1;
    compiled_.emplace(key, idx);
    return idx;
  }

  std::uint64_t stamp_for(const Node& n) const {
    const Frame& f = frames_[static_cast<std::size_t>(n.frame)];
    std::uint64_t s = 1;
    unsigned sup = n.expr->support();
    for (int i = 0; i < 4; ++i)
      if (sup & (1u << i)) s += f.epoch[static_cast<std::size_t>(i)];
    return s;
  }

  const Elem& gen_value(int frame, Generator g) {
    Frame& f = frames_[static_cast<std::size_t>(frame)];
    std::size_t i = static_cast<std::size_t>(g.index());
    if (g.sign() > 0) return f.gens[i];
    if (!f.inv_ok[i]) {
      f.invs[i] = ctx_.inv(f.gens[i]);
      f.inv_ok[i] = true;
    }
    return f.invs[i];
  }

  Elem eval_word(int frame, const Word& w) {
    Elem acc = ctx_.identity();
    for (const Generator& g : w.letters()) acc = ctx_.mul(acc, gen_value(frame, g));
    return acc;
  }

  const Elem& value(int idx) {
    Node& n = nodes_[static_cast<std::size_t>(idx)];
    std::uint64_t want = stamp_for(n);
    if (n.stamp == want) return n.cached;
    n.cached = compute(n);
    n.stamp = want;
    return n.cached;
  }

  Elem compute(Node& n) {
    const ExprNode& e = *n.expr;
    switch (e.kind()) {
      case ExprKind::Gen:
        return gen_value(n.frame, e.generator());
      case ExprKind::Lit:
        return eval_word(n.frame, e.literal());
      case ExprKind::Concat: {
        Elem acc = ctx_.identity();
        for (int k : n.kids) {
          const Elem& v = value(k);
          if (!ctx_.is_identity(v)) acc = ctx_.mul(acc, v);
        }
        return acc;
      }
      case ExprKind::Inv:
        return ctx_.inv(value(n.kids[0]));
      case ExprKind::Pow: {
        Elem base = value(n.kids[0]);
        if (ctx_.is_identity(base)) return base;
        Elem acc = ctx_.identity();
        std::uint64_t k = e.exponent();
        while (k > 0) {
          if (k & 1) acc = ctx_.mul(acc, base);
          k >>= 1;
          if (k > 0) base = ctx_.mul(base, base);
        }
        return acc;
      }
      case ExprKind::Comm: {
        const Elem& u = value(n.kids[0]);
        if (ctx_.is_identity(u)) return ctx_.identity();
        const Elem& v = value(n.kids[1]);
        if (ctx_.is_identity(v)) return ctx_.identity();
        Elem uv = ctx_.mul(u, v);
        Elem iuiv = ctx_.mul(ctx_.inv(u), ctx_.inv(v));
        return ctx_.mul(uv, iuiv);
      }
      case ExprKind::Subst: {
        Frame& inner = frames_[static_cast<std::size_t>(n.subst_frame)];
        for (std::size_t i = 0; i < 4; ++i) {
          if (!(e.children()[0]->support() & (1u << i))) continue;
          Elem v = eval_word(n.frame, e.images()[i]);
          if (!inner.have[i] || !ctx_.equal(inner.gens[i], v)) {
            inner.gens[i] = std::move(v);
            inner.have[i] = true;
            inner.inv_ok[i] = false;
            ++inner.epoch[i];
          }
        }
        return value(n.kids[0]);
      }
    }
    throw error("unreachable expression kind");
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<const ExprNode*, int>& k) const {
      return std::hash<const ExprNode*>()(k.first) ^ (static_cast<std::size_t>(k.second) * 0x9e3779b97f4a7c15ull);
    }
  };

  const Ctx& ctx_;
  std::vector<Node> nodes_;
  std::vector<Frame> frames_{1};
  std::unordered_map<std::pair<const ExprNode*, int>, int, KeyHash> compiled_;
  int root_ = 0;
};

// Plain fold over a flat word; deliberately independent of Evaluator so the
// two paths can cross-check each other.
template <GroupContext Ctx>
typename Ctx::Elem evaluate_word(const Ctx& ctx, const Word& w,
                                 std::span<const typename Ctx::Elem> assignment) {
  std::vector<typename Ctx::Elem> invs;
  invs.reserve(assignment.size());
  for (const auto& a : assignment) invs.push_back(ctx.inv(a));
  typename Ctx::Elem acc = ctx.identity();
  for (const Generator& g : w.letters()) {
    const auto& v = g.sign() > 0 ? assignment[static_cast<std::size_t>(g.index())]
                                 : invs[static_cast<std::size_t>(g.index())];
    acc = ctx.mul(acc, v);
  }
  return acc;
}

// Convenience wrappers for permutation assignments.
Perm evaluate(const WordExpr& e, const std::vector<Perm>& assignment);
Perm evaluate(const Word& w, const std::vector<Perm>& assignment);

}  // namespace laws

#endif
