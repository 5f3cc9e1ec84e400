#ifndef LAWS_LIELAW_HPP
#define LAWS_LIELAW_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>
#include <vector>

#include "laws/certificate.hpp"
#include "laws/combine.hpp"

namespace laws {

// F_q, q = p^s <= 512, as residue polynomials over the prime field modulo a
// fixed monic irreducible of degree s (the lexicographically smallest one,
// coefficients compared high to low).  Elements are integer codes in [0, q):
// code = sum of coefficient_i * p^i.  All arithmetic is table-driven.
class Fq {
 public:
  static Fq make(int p, int s);

  int p() const { return p_; }
  int s() const { return s_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }  // ascending coeffs, monic

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, b)]; }
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, neg_[b])]; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[idx(a, b)]; }
  std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

  std::vector<int> element_coeffs(std::uint16_t a) const;  // base-p digits

 private:
  Fq() = default;
  std::size_t idx(std::uint16_t a, std::uint16_t b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }
  int p_ = 2, s_ = 1;
  std::uint32_t q_ = 2;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

// Lexicographically smallest monic irreducible of degree s over F_p
// (ascending coefficient vector of length s+1, leading 1).
std::vector<int> find_irreducible(int p, int s);

// Square matrix over Fq, n <= 6, row-major.
struct FqMatrix {
  int n = 0;
  std::array<std::uint16_t, 36> e{};

  std::uint16_t& at(int r, int c) { return e[static_cast<std::size_t>(r * n + c)]; }
  std::uint16_t at(int r, int c) const { return e[static_cast<std::size_t>(r * n + c)]; }
  bool operator==(const FqMatrix&) const = default;
};

FqMatrix mat_identity(int n);
FqMatrix mat_mul(const Fq& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_inv(const Fq& F, const FqMatrix& a);
bool mat_is_identity(const FqMatrix& a);
FqMatrix mat_pow(const Fq& F, FqMatrix a, std::uint64_t e);
std::uint64_t mat_order(const Fq& F, const FqMatrix& a);

struct MatCtx {
  using Elem = FqMatrix;
  const Fq* field;
  int n;
  Elem mul(const Elem& a, const Elem& b) const { return mat_mul(*field, a, b); }
  Elem inv(const Elem& a) const { return mat_inv(*field, a); }
  Elem identity() const { return mat_identity(n); }
  bool is_identity(const Elem& a) const { return mat_is_identity(a); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

// Scales so the first nonzero entry (row-major) is 1: a canonical coset
// representative modulo scalars.
FqMatrix proj_canonical(const Fq& F, const FqMatrix& a);

struct ProjCtx {
  using Elem = FqMatrix;  // always stored in canonical form
  const Fq* field;
  int n;
  Elem mul(const Elem& a, const Elem& b) const { return proj_canonical(*field, mat_mul(*field, a, b)); }
  Elem inv(const Elem& a) const { return proj_canonical(*field, mat_inv(*field, a)); }
  Elem identity() const { return mat_identity(n); }
  bool is_identity(const Elem& a) const { return a == mat_identity(n); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

std::uint64_t proj_order(const Fq& F, const FqMatrix& a);

// Monic characteristic polynomial det(tI - A), ascending coefficients of
// length n+1, by Hessenberg reduction over the field (no integer division,
// safe in any characteristic).
std::vector<std::uint16_t> charpoly(const Fq& F, const FqMatrix& a);

// Degrees of the irreducible factors, each counted once, via squarefree
// radical plus distinct-degree splitting.
std::set<int> irreducible_factor_degrees(const Fq& F, std::vector<std::uint16_t> f);

struct ExponentSet {
  int n = 0;
  std::uint32_t q = 0;
  int p = 0;
  std::vector<std::vector<int>> degree_sets;          // distinct degrees, sum <= n
  std::vector<std::uint64_t> semisimple_exponents;    // k = prod(q^j - 1), dedup sorted
  std::uint64_t unipotent_factor = 1;                 // p^ceil(log2 n)
  std::vector<std::uint64_t> exponents;               // unipotent_factor * k, dedup sorted
  std::vector<std::uint64_t> pgl_exponents;           // refined rule, dedup sorted
};

// All sets of distinct degrees with sum <= n, their k values, and the full
// GL exponents p^ceil(log2 n) * k.  The PGL refinement divides k by q-1
// exactly when the degree set has >= 2 elements and drops the unipotent
// factor.
ExponentSet exponent_set(int n, const Fq& F);

// k = prod(q^j - 1) over the degree set of A's characteristic polynomial.
std::uint64_t semisimple_exponent_of(const Fq& F, const FqMatrix& a);

// All invertible n x n matrices, row-by-row enumeration with rank pruning
// (deterministic order).  Throws scale_error when |GL_n(q)| exceeds cap.
std::vector<FqMatrix> enumerate_gl(const Fq& F, int n, std::uint64_t cap = 1'000'000);

std::vector<FqMatrix> enumerate_pgl(const Fq& F, int n, std::uint64_t cap = 1'000'000);

std::uint64_t gl_order(int n, std::uint32_t q);  // prod(q^n - q^i)

struct LieLawOptions {
  VerifyModeSpec mode{};  // exhaustive or none
  int jobs = 1;
  std::uint64_t enumeration_cap = 1'000'000;
};

// combine({a^(p^e k_i)}) verified exhaustively over GL_n(q) pairs.
LawCertificate gl_law(int n, const Fq& F, const LieLawOptions& opts = {});

// The refined exponents verified exhaustively over PGL_n(q); a counterexample
// outcome is a first-class result (this empirically tests the refinement).
LawCertificate pgl_law(int n, const Fq& F, const LieLawOptions& opts = {});

// The closed-form length bound of the paper for the combined GL law.
double gl_length_bound(int n, std::uint32_t q, int p);

struct LieRankBoundReport {
  int rank = 0;
  std::uint32_t q = 0;
  boost::multiprecision::cpp_int general_bound;  // 48 * q^(155 r)
  double general_log10 = 0;
  double pgl_bound = 0;  // 48 * exp(2 sqrt(2) sqrt(n) log n) * q^(n-1) with n = rank + 1
};

// Formula-level outputs only; no embeddings are constructed.
LieRankBoundReport lie_rank_bound_report(int rank, std::uint32_t q);

nlohmann::ordered_json matrix_to_json(const Fq& F, const FqMatrix& a);
std::string matrix_display(const Fq& F, const FqMatrix& a);

}  // namespace laws

#endif
