#include "laws/cayley.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_map>

namespace laws {

CayleyGraph build_cayley(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) throw error("build_cayley requires generators");
  const int n = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != n) throw error("permutation degree mismatch");

  CayleyGraph graph;
  // S = generators followed by any missing inverses, without duplicates.
  for (const Perm& g : gens) {
    bool dup = false;
    for (const Perm& s : graph.symmetric_set) dup = dup || s == g;
    if (!dup) graph.symmetric_set.push_back(g);
  }
  for (const Perm& g : gens) {
    Perm gi = invert(g);
    bool dup = false;
    for (const Perm& s : graph.symmetric_set) dup = dup || s == gi;
    if (!dup) graph.symmetric_set.push_back(gi);
  }

  // Degrees up to 16 pack into 64-bit keys; larger degrees fall back to an
  // ordered map on the image list.
  std::unordered_map<std::uint64_t, std::uint32_t> packed;
  std::map<Perm, std::uint32_t> ordered;
  auto lookup = [&](const Perm& p, std::uint32_t next_index) -> std::pair<std::uint32_t, bool> {
    if (n <= 16) {
      auto [it, fresh] = packed.emplace(p.pack(), next_index);
      return {it->second, fresh};
    }
    auto [it, fresh] = ordered.emplace(p, next_index);
    return {it->second, fresh};
  };
  Perm id = Perm::identity(n);
  graph.elements.push_back(id);
  lookup(id, 0);
  for (std::size_t head = 0; head < graph.elements.size(); ++head) {
    Perm current = graph.elements[head];
    graph.adjacency.emplace_back();
    graph.adjacency.back().reserve(graph.symmetric_set.size());
    for (const Perm& s : graph.symmetric_set) {
      Perm next = compose(current, s);
      auto [idx, fresh] = lookup(next, static_cast<std::uint32_t>(graph.elements.size()));
      if (fresh) {
        if (graph.elements.size() >= cap)
          throw scale_error("cayley graph exceeds cap " + std::to_string(cap));
        graph.elements.push_back(std::move(next));
      }
      graph.adjacency[head].push_back(idx);
    }
  }
  return graph;
}

std::vector<int> bfs_distances(const CayleyGraph& g, std::uint32_t source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<std::uint32_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : g.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const CayleyGraph& g) {
  std::vector<int> dist = bfs_distances(g, 0);
  int d = 0;
  for (int x : dist) {
    if (x < 0) throw error("cayley graph is not connected");
    d = std::max(d, x);
  }
  return d;
}

WalkOperator lazy_walk(const CayleyGraph& g) { return WalkOperator{&g}; }

namespace {

std::vector<double> walk_step(const CayleyGraph& g, const std::vector<double>& v) {
  const double move = 1.0 / (2.0 * static_cast<double>(g.s_size()));
  std::vector<double> next(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    next[i] += 0.5 * v[i];
    for (std::uint32_t w : g.adjacency[static_cast<std::uint32_t>(i)]) next[w] += move * v[i];
  }
  return next;
}

}  // namespace

std::vector<double> walk_distribution(const WalkOperator& op, std::uint64_t steps) {
  const CayleyGraph& g = *op.graph;
  std::vector<double> v(g.order(), 0.0);
  v[0] = 1.0;
  for (std::uint64_t t = 0; t < steps; ++t) v = walk_step(g, v);
  return v;
}

double spectral_gap(const WalkOperator& op, std::size_t cap) {
  const CayleyGraph& g = *op.graph;
  const std::size_t n = g.order();
  if (n > cap) throw scale_error("spectral_gap: group order exceeds dense-solver cap");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double move = 1.0 / (2.0 * static_cast<double>(g.s_size()));
  for (std::size_t i = 0; i < n; ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += 0.5;
    for (std::uint32_t w : g.adjacency[static_cast<std::uint32_t>(i)])
      m(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(i)) += move;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw error("eigensolver failed");
  const auto& ev = solver.eigenvalues();  // ascending
  std::size_t ones = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 1.0 - kSpectralTol) ++ones;
  if (ones != 1) throw error("eigenvalue-1 eigenspace is not one-dimensional");
  double lambda1 = n >= 2 ? ev(static_cast<Eigen::Index>(n) - 2) : 0.0;
  return 1.0 - lambda1;
}

std::uint64_t mixing_bound(std::size_t s_size, std::uint64_t diam, std::uint64_t group_order) {
  if (s_size == 0 || group_order == 0) throw error("mixing_bound requires positive inputs");
  double value = 2.0 * static_cast<double>(s_size) * static_cast<double>(diam) *
                 static_cast<double>(diam) * std::log(2.0 * static_cast<double>(group_order));
  return static_cast<std::uint64_t>(std::ceil(value));
}

GapReport check_gap_inequality(const CayleyGraph& g, std::size_t cap) {
  GapReport report;
  WalkOperator op = lazy_walk(g);
  report.gap = spectral_gap(op, cap);
  std::uint64_t d = static_cast<std::uint64_t>(diameter(g));
  report.bound = 1.0 / (2.0 * static_cast<double>(g.s_size()) * static_cast<double>(d) * static_cast<double>(d));
  report.holds = report.gap >= report.bound - kSpectralTol;
  return report;
}

std::vector<WalkCsvRow> walk_trace(const WalkOperator& op, std::uint64_t steps,
                                   const std::vector<std::uint32_t>& target) {
  const CayleyGraph& g = *op.graph;
  std::vector<double> v(g.order(), 0.0);
  v[0] = 1.0;
  const double uniform = 1.0 / static_cast<double>(g.order());
  std::vector<WalkCsvRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  for (std::uint64_t t = 0;; ++t) {
    double tv = 0.0;
    for (double x : v) tv += std::abs(x - uniform);
    double mass = 0.0;
    for (std::uint32_t w : target) mass += v[w];
    rows.push_back({t, tv / 2.0, mass});
    if (t == steps) break;
    v = walk_step(g, v);
  }
  return rows;
}

}  // namespace laws
