#include "laws/eval.hpp"

#include <map>

namespace laws {

TableCtx TableCtx::from_elements(const std::vector<Perm>& elements) {
  TableCtx ctx;
  ctx.size = elements.size();
  if (ctx.size == 0 || ctx.size > 65535) throw error("table context size out of range");
  if (!elements[0].is_identity()) throw error("table context expects identity first");
  std::map<std::uint64_t, std::uint16_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[elements[i].pack()] = static_cast<std::uint16_t>(i);
  if (index.size() != elements.size()) throw error("duplicate elements in table context");
  ctx.mul_table.resize(ctx.size * ctx.size);
  ctx.inv_table.resize(ctx.size);
  for (std::size_t i = 0; i < ctx.size; ++i) {
    for (std::size_t j = 0; j < ctx.size; ++j) {
      Perm prod = compose(elements[i], elements[j]);
      auto it = index.find(prod.pack());
      if (it == index.end()) throw error("element set is not closed under multiplication");
      ctx.mul_table[i * ctx.size + j] = it->second;
      if (it->second == 0) {
        ctx.inv_table[i] = static_cast<std::uint16_t>(j);
      }
    }
  }
  return ctx;
}

Perm evaluate(const WordExpr& e, const std::vector<Perm>& assignment) {
  if (assignment.empty()) throw error("evaluate requires an assignment");
  PermCtx ctx{assignment[0].degree()};
  for (const Perm& p : assignment)
    if (p.degree() != ctx.degree) throw error("assignment degrees differ");
  Evaluator<PermCtx> ev(ctx, e);
  return ev.eval(std::span<const Perm>(assignment.data(), assignment.size()));
}

Perm evaluate(const Word& w, const std::vector<Perm>& assignment) {
  if (assignment.empty()) throw error("evaluate requires an assignment");
  PermCtx ctx{assignment[0].degree()};
  for (const Perm& p : assignment)
    if (p.degree() != ctx.degree) throw error("assignment degrees differ");
  for (const Generator& g : w.letters())
    if (static_cast<std::size_t>(g.index()) >= assignment.size())
      throw error("missing generator assignment");
  return evaluate_word(ctx, w, std::span<const Perm>(assignment.data(), assignment.size()));
}

}  // namespace laws
