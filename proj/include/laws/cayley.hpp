#ifndef LAWS_CAYLEY_HPP
#define LAWS_CAYLEY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "laws/perm.hpp"

namespace laws {

// Cayley graph of the subgroup generated by a list of permutations, with the
// symmetric connection set S = gens united with their inverses.  Elements are
// indexed in BFS discovery order from the identity (index 0), so the layout
// is deterministic for fixed generators.
struct CayleyGraph {
  std::vector<Perm> elements;
  std::vector<Perm> symmetric_set;                 // S, deduplicated
  std::vector<std::vector<std::uint32_t>> adjacency;  // adjacency[v][s] = index of elements[v]*S[s]

  std::size_t order() const { return elements.size(); }
  std::size_t s_size() const { return symmetric_set.size(); }
};

CayleyGraph build_cayley(const std::vector<Perm>& gens, std::size_t cap = 50000);

// Eccentricity of the identity (equals the graph diameter by vertex
// transitivity).
int diameter(const CayleyGraph& g);

std::vector<int> bfs_distances(const CayleyGraph& g, std::uint32_t source);

// The lazy walk operator M = 1/2 + 1/(2|S|) sum_s lambda(s): stay with
// probability 1/2, otherwise move by a uniform element of S.
struct WalkOperator {
  const CayleyGraph* graph;
};

WalkOperator lazy_walk(const CayleyGraph& g);

// Distribution after `steps` lazy steps from the point mass at the identity
// (exact vector iteration, no sampling).
std::vector<double> walk_distribution(const WalkOperator& op, std::uint64_t steps);

// 1 - lambda_1 of the walk operator, via a dense symmetric eigensolver.
// Checks that the eigenvalue-1 eigenspace is one-dimensional.  Throws
// scale_error above `cap` vertices.
double spectral_gap(const WalkOperator& op, std::size_t cap = 2000);

// ceil(2 |S| diam^2 ln(2 |G|)), the walk length of the mixing proposition.
std::uint64_t mixing_bound(std::size_t s_size, std::uint64_t diam, std::uint64_t group_order);

struct GapReport {
  double gap = 0;
  double bound = 0;
  bool holds = false;
};

// Checks the diameter inequality  1 - lambda_1 >= 1 / (2 |S| diam^2).
GapReport check_gap_inequality(const CayleyGraph& g, std::size_t cap = 2000);

struct WalkCsvRow {
  std::uint64_t step;
  double tv_to_uniform;
  double target_mass;
};

// Walk trace for experiments: per step the total-variation distance to
// uniform and the mass on the target element set.
std::vector<WalkCsvRow> walk_trace(const WalkOperator& op, std::uint64_t steps,
                                   const std::vector<std::uint32_t>& target);

inline constexpr double kSpectralTol = 1e-9;
inline constexpr double kStochasticTol = 1e-12;

}  // namespace laws

#endif
