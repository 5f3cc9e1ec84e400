#ifndef LAWS_SYMLAW_HPP
#define LAWS_SYMLAW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laws/certificate.hpp"
#include "laws/combine.hpp"
#include "laws/perm.hpp"
#include "laws/rng.hpp"

namespace laws {

// Largest order of an element of Sym(n) (max lcm over partitions of n),
// computed by dynamic programming over prime powers.  n <= 200.
std::uint64_t landau_g(int n);

struct SymVerifyResult {
  bool verified = true;
  std::optional<std::pair<Perm, Perm>> counterexample;
  std::uint64_t pairs_checked = 0;
};

// Checks w(s,t) = e over Sym(n) pairs.  exhaustive needs n <= 6 (all (n!)^2
// pairs), class_reduced needs n <= 9 (class representative s against all t;
// exact by conjugation equivariance), sampled needs n <= 12.
SymVerifyResult verify_sym(const WordExpr& e, int n, const VerifyModeSpec& mode, int jobs = 1);
SymVerifyResult verify_alt(const WordExpr& e, int n, const VerifyModeSpec& mode, int jobs = 1);

// The claim certified by the randomized construction: the word kills every
// pair generating Sym(k) or Alt(k) for some k <= n (class-reduced sweep).
SymVerifyResult verify_generating_pairs(const WordExpr& e, int n, int jobs = 1);

VerifyModeSpec default_sym_mode(int n);

// Law from Landau's bound: combine(a^1, ..., a^g(n)).  Verification per the
// requested mode; pass kind none to skip (large n).
LawCertificate landau_law(int n, const VerifyModeSpec& mode, int jobs = 1);

// combine(a^1, ..., a^max_order): trivializes every pair whose first element
// has order <= max_order; certified against Sym(n_target).
LawCertificate order_law(std::uint64_t max_order, int n_target, const VerifyModeSpec& mode,
                         int jobs = 1);

struct RandomSearchConfig {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> walk_length_override;  // default: mixing_bound
  std::size_t pool_budget = 48;                       // words sampled per attempt, per k
  std::size_t max_attempts = 8;
  enum class TargetRule { long_cycle, low_order };
  TargetRule target_rule = TargetRule::long_cycle;
};

class coverage_failure : public error {
 public:
  coverage_failure(int k, const std::string& pair_display)
      : error("random word search failed to cover a pair in degree " + std::to_string(k) + ": " +
              pair_display),
        k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

struct CoverageEntry {
  int k = 0;
  bool alt = false;                // generated group is Alt(k) rather than Sym(k)
  std::string sigma, tau;          // cycle form, for audit
  std::size_t word_index = 0;      // index into RandomWords::words
  std::uint64_t hit_order = 0;     // order of the hit element
};

struct RandomWords {
  std::vector<Word> words;
  std::vector<CoverageEntry> coverage;
  std::map<int, std::uint64_t> walk_length;  // per k
};

// Lazy-walk word pool covering, for every k <= n and every class-reduced
// pair generating Sym(k) or Alt(k), some word whose value lies in the target
// set of the configured rule.  n <= 7.
RandomWords random_cycle_words(int n, const RandomSearchConfig& cfg);

// combine(power_closure(W, hit orders)) with the generating-pair claim
// verified class-reduced.
LawCertificate random_law(int n, const RandomSearchConfig& cfg, int jobs = 1);

// y_{i,j}: x_i composed with [x_j,c], [x_j,d] inside F4, then pulled back to
// F2 via a, bab^-1, b^2ab^-2, b^3ab^-3.
WordExpr y_word(const WordExpr& x_i, const WordExpr& x_j);

struct RecursiveOptions {
  RandomSearchConfig random_cfg{};
  bool random_v = false;  // use the randomized v for n <= 7 (default: Landau words)
  std::optional<std::uint64_t> order_bound;  // v' bound; default g(n)
  int jobs = 1;
};

// The recursive assembly: combine({v, v'} union {y_{i,j} : i,j < log2 n,
// 2^(i+j) < 4n}) with x_i memoized over Sym(2^i), base x_1 = a^2.
LawCertificate recursive_law(int n, const VerifyModeSpec& mode, const RecursiveOptions& opts = {});

struct ExponentViolation {
  int m = 0, i = 0, j = 0;
};

struct ExponentIneqReport {
  int m_lo = 0, m_hi = 0;
  std::uint64_t triples_checked = 0;
  std::vector<ExponentViolation> violations;  // capped at 1000 entries
  std::optional<int> max_violating_m;
};

// Enumerates admissible (i, j, m): 1 <= i,j < m, i+j <= m+1, and records
// violations of i^4 + j^4 <= m^4 - m^2.
ExponentIneqReport check_exponent_inequality(int m_lo, int m_hi);

struct AlphaRow {
  int n = 0;
  Method method = Method::landau;
  std::uint64_t nominal = 0;
  std::optional<std::uint64_t> reduced;
  std::string mode;
  bool verified = false;
};

// Measured upper bounds on the shortest-law length per n and construction.
std::vector<AlphaRow> alpha_table(int n_max, const RandomSearchConfig& cfg, int jobs = 1);

}  // namespace laws

#endif
