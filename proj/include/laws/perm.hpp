#ifndef LAWS_PERM_HPP
#define LAWS_PERM_HPP

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laws/common.hpp"
#include "laws/word.hpp"

namespace laws {

// A permutation of {0,..,n-1} as its image list.  Degrees up to 16 live
// inline; composition convention is "apply p, then q" (so evaluating a word
// multiplies letters left to right).
class Perm {
 public:
  using Images = boost::container::small_vector<std::uint8_t, 16>;

  Perm() = default;
  static Perm identity(int degree);
  static Perm from_images(const std::vector<int>& images);
  // Cycle notation over 0-based points, e.g. "(0 1 2)(3 4)"; points not
  // mentioned are fixed.  degree must cover every point used.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const Images& images() const { return img_; }

  bool is_identity() const;
  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // Packs degrees <= 16 into a 64-bit key (4 bits per point).
  std::uint64_t pack() const;

 private:
  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm invert(const Perm& p);
  Images img_;
};

Perm compose(const Perm& p, const Perm& q);  // apply p first, then q
Perm invert(const Perm& p);
Perm conjugate(const Perm& g, const Perm& p);  // g p g^-1 in our convention

std::uint64_t order(const Perm& p);

// Multiset of cycle lengths (a partition of the degree), descending.
using CycleType = std::vector<int>;
CycleType cycle_type(const Perm& p);

bool is_k_cycle(const Perm& p, int k);
bool has_regular_cycle(const Perm& p);
bool is_even(const Perm& p);

std::string to_cycle_string(const Perm& p);
std::string to_oneline_string(const Perm& p);
Perm parse_perm(const std::string& text, int degree);  // cycle or [..] form

// Orbits of the group generated by gens on points 0..n-1 (sorted partition).
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens);

// Nontrivial block system of a transitive action, if one exists.  Seed pairs
// {0,x} are refined with union-find under the generators; the system for the
// smallest x wins.  Returns std::nullopt for primitive actions.
std::optional<std::vector<std::vector<int>>> minimal_block_system(const std::vector<Perm>& gens);

// Breadth-first closure of the generated subgroup.  Throws scale_error when
// the subgroup exceeds cap.
std::vector<Perm> generate_subgroup(const std::vector<Perm>& gens, std::size_t cap = 40320);

enum class SubgroupCase {
  full_sym,
  alt,
  intransitive,
  imprimitive,
  product_action_suspect,
  small,
  unknown,
};

std::string to_string(SubgroupCase c);

struct SubgroupReport {
  int degree = 0;
  std::vector<std::vector<int>> orbit_partition;
  std::optional<std::vector<std::vector<int>>> blocks;
  std::optional<std::uint64_t> order;  // set when the closure fit under the cap
  SubgroupCase label = SubgroupCase::unknown;
};

// Desk-scale case split: intransitive, else imprimitive, else Sym/Alt by
// closure order, else "small" with the exact order recorded.  A primitive
// action whose closure overflows the cap is reported as
// product_action_suspect (the evidence cannot separate a product action from
// a large primitive group).
SubgroupReport classify(const std::vector<Perm>& gens, std::size_t closure_cap = 40320,
                        int max_degree = 12);

// One canonical permutation per partition of n: cycles in decreasing length
// over consecutive points.
std::vector<Perm> conjugacy_class_reps(int n);

std::vector<std::vector<int>> partitions_of(int n);

// All n! permutations of degree n in lexicographic image order.
std::vector<Perm> all_perms(int n);

}  // namespace laws

#endif
