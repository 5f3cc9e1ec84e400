#ifndef LAWS_DIVIS_HPP
#define LAWS_DIVIS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laws/perm.hpp"
#include "laws/word.hpp"

namespace laws {

using BigInt = boost::multiprecision::cpp_int;

// Smallest m >= 2 not dividing n; nullopt (the infinity sentinel) for n = 0,
// which lies in every subgroup of Z.
std::optional<std::uint64_t> d_z(std::uint64_t n);
std::optional<std::uint64_t> d_z(const BigInt& n);

// Chebyshev sums over primes (theta) and prime powers (psi) up to x.
double chebyshev_theta(double x);
double chebyshev_psi(double x);

BigInt lcm_upto(std::uint64_t x);
double log_big(const BigInt& n);  // natural log

enum class DivisOracle { law, subgroup };

struct DivisibilityWitness {
  int degree = 0;
  Perm sigma, tau;
  int moved_point = 0;
};

struct DivisibilityResult {
  Word word;
  std::optional<std::uint64_t> value;  // nullopt: "> n_max" (law for every tested degree)
  int n_max = 0;
  std::optional<DivisibilityWitness> witness;
  DivisOracle oracle = DivisOracle::law;

  std::string value_str() const;
};

// D_F2 via Lemma "w is a law for Sym(n) iff D(w) > n": the smallest n <= n_max
// where exhaustive/class-reduced verification finds a counterexample.
DivisibilityResult d_f2_law_oracle(const Word& w, int n_max);

// Independent route via point stabilizers: minimum orbit size of a moved
// point over all degrees m <= n_max and all pairs in Sym(m)^2.
DivisibilityResult d_f2_subgroup_oracle(const Word& w, int n_max);

struct ProfileRow {
  int length = 0;
  std::optional<std::uint64_t> value;  // max over words of exactly this length
  // max over words of length <= this (the divisibility function D_F2(n)).
  // The per-length value is not monotone: odd-length words have odd total
  // exponent parity and already die in Sym(2).
  std::optional<std::uint64_t> cumulative;
  Word extremal;
  std::size_t classes_scanned = 0;
};

// Exact D_F2 over all reduced words of each length 1..max_len, deduplicated
// under inversion and cyclic rotation (both D-preserving; property-tested).
std::vector<ProfileRow> d_f2_profile(int max_len, int n_max);

// Canonical representative of a word class under cyclic conjugation and
// inversion (used by the profile sweep).
Word divis_canonical(const Word& w);

}  // namespace laws

#endif
