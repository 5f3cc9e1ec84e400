#ifndef LAWS_VERIFY_DETAIL_HPP
#define LAWS_VERIFY_DETAIL_HPP

#include <atomic>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "laws/eval.hpp"

namespace laws::detail {

// Scans sigma x tau for the first pair where the expression evaluates to a
// non-identity element.  "First" means lexicographically smallest index
// pair, so the result is independent of the worker count.
template <GroupContext Ctx>
std::optional<std::pair<std::size_t, std::size_t>> find_counterexample(
    const Ctx& ctx, const WordExpr& expr, std::span<const typename Ctx::Elem> sigmas,
    std::span<const typename Ctx::Elem> taus, int jobs = 1) {
  using Elem = typename Ctx::Elem;
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(sigmas.size(), 1)));

  auto scan_range = [&](std::size_t begin, std::size_t step,
                        const std::atomic<std::size_t>* best_sigma)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    Evaluator<Ctx> ev(ctx, expr);
    Elem asg[2] = {ctx.identity(), ctx.identity()};
    for (std::size_t i = begin; i < sigmas.size(); i += step) {
      if (best_sigma && i > best_sigma->load(std::memory_order_relaxed)) break;
      asg[0] = sigmas[i];
      for (std::size_t j = 0; j < taus.size(); ++j) {
        asg[1] = taus[j];
        if (!ctx.is_identity(ev.eval(std::span<const Elem>(asg, 2))))
          return std::make_pair(i, j);
      }
    }
    return std::nullopt;
  };

  if (jobs == 1) return scan_range(0, 1, nullptr);

  std::atomic<std::size_t> best_sigma{sigmas.size()};
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      auto r = scan_range(static_cast<std::size_t>(t), static_cast<std::size_t>(jobs), &best_sigma);
      if (r) {
        std::size_t current = best_sigma.load();
        while (r->first < current && !best_sigma.compare_exchange_weak(current, r->first)) {
        }
        found[static_cast<std::size_t>(t)] = r;
      }
    });
  }
  for (std::thread& w : workers) w.join();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& f : found)
    if (f && (!best || *f < *best)) best = f;
  return best;
}

}  // namespace laws::detail

#endif
