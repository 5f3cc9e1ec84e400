#include "laws/lielaw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "laws/eval.hpp"
#include "laws/verify_detail.hpp"

namespace laws {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p (ascending coefficients) for modulus selection.
using PPoly = std::vector<int>;

void ppoly_trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly ppoly_mod(PPoly f, const PPoly& g, int p) {
  // g monic
  while (f.size() >= g.size() && !f.empty()) {
    int coeff = f.back();
    std::size_t shift = f.size() - g.size();
    if (coeff != 0) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t k = i + shift;
        f[k] = ((f[k] - coeff * g[i]) % p + p) % p;
      }
    }
    f.pop_back();
    ppoly_trim(f);
  }
  return f;
}

}  // namespace

std::vector<int> find_irreducible(int p, int s) {
  if (!is_prime(p)) throw error("field characteristic must be prime");
  if (s < 1) throw error("field degree must be >= 1");
  if (s == 1) return {0, 1};  // x
  std::uint64_t count = 1;
  for (int i = 0; i < s; ++i) count *= static_cast<std::uint64_t>(p);
  // Candidate moduli in increasing integer code; divisors of degree <= s/2
  // suffice for the irreducibility test.
  std::vector<PPoly> divisors;
  for (int d = 1; 2 * d <= s; ++d) {
    std::uint64_t dn = 1;
    for (int i = 0; i < d; ++i) dn *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < dn; ++code) {
      PPoly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
      g[static_cast<std::size_t>(d)] = 1;
      divisors.push_back(std::move(g));
    }
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    PPoly f(static_cast<std::size_t>(s) + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < s; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    f[static_cast<std::size_t>(s)] = 1;
    bool irreducible = true;
    for (const PPoly& g : divisors) {
      if (ppoly_mod(f, g, p).empty()) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) return f;
  }
  throw error("no irreducible polynomial found (unreachable)");
}

Fq Fq::make(int p, int s) {
  if (!is_prime(p)) throw error("field characteristic must be prime");
  std::uint64_t q = 1;
  for (int i = 0; i < s; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > 512) throw scale_error("field size cap is q <= 512");
  }
  Fq F;
  F.p_ = p;
  F.s_ = s;
  F.q_ = static_cast<std::uint32_t>(q);
  F.modulus_ = find_irreducible(p, s);

  auto decode = [&](std::uint16_t a) {
    std::vector<int> c(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(a % p);
      a = static_cast<std::uint16_t>(a / p);
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    std::uint32_t v = 0;
    for (int i = s - 1; i >= 0; --i)
      v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(c[static_cast<std::size_t>(i)]);
    return static_cast<std::uint16_t>(v);
  };

  F.add_.resize(static_cast<std::size_t>(F.q_) * F.q_);
  F.mul_.resize(static_cast<std::size_t>(F.q_) * F.q_);
  F.neg_.resize(F.q_);
  F.inv_.assign(F.q_, 0);
  for (std::uint32_t a = 0; a < F.q_; ++a) {
    std::vector<int> ca = decode(static_cast<std::uint16_t>(a));
    std::vector<int> cn(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i)
      cn[static_cast<std::size_t>(i)] = (p - ca[static_cast<std::size_t>(i)]) % p;
    F.neg_[a] = encode(cn);
    for (std::uint32_t b = 0; b < F.q_; ++b) {
      std::vector<int> cb = decode(static_cast<std::uint16_t>(b));
      std::vector<int> sum(static_cast<std::size_t>(s), 0);
      for (int i = 0; i < s; ++i)
        sum[static_cast<std::size_t>(i)] = (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p;
      F.add_[static_cast<std::size_t>(a) * F.q_ + b] = encode(sum);
      // polynomial product reduced modulo the modulus
      std::vector<int> prod(static_cast<std::size_t>(2 * s - 1), 0);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] +
               ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) %
              p;
      for (int d = 2 * s - 2; d >= s; --d) {
        int coeff = prod[static_cast<std::size_t>(d)];
        if (coeff == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < s; ++i) {
          std::size_t k = static_cast<std::size_t>(d - s + i);
          prod[k] = ((prod[k] - coeff * F.modulus_[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(s));
      F.mul_[static_cast<std::size_t>(a) * F.q_ + b] = encode(prod);
    }
  }
  for (std::uint32_t a = 1; a < F.q_; ++a)
    for (std::uint32_t b = 1; b < F.q_; ++b)
      if (F.mul_[static_cast<std::size_t>(a) * F.q_ + b] == 1) F.inv_[a] = static_cast<std::uint16_t>(b);
  return F;
}

std::uint16_t Fq::inv(std::uint16_t a) const {
  if (a == 0) throw error("division by zero in F_q");
  return inv_[a];
}

std::uint16_t Fq::pow(std::uint16_t a, std::uint64_t e) const {
  std::uint16_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return acc;
}

std::vector<int> Fq::element_coeffs(std::uint16_t a) const {
  std::vector<int> c(static_cast<std::size_t>(s_), 0);
  for (int i = 0; i < s_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(a % p_);
    a = static_cast<std::uint16_t>(a / p_);
  }
  return c;
}

FqMatrix mat_identity(int n) {
  FqMatrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix mat_mul(const Fq& F, const FqMatrix& a, const FqMatrix& b) {
  FqMatrix r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      std::uint16_t acc = 0;
      for (int k = 0; k < a.n; ++k) acc = F.add(acc, F.mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = acc;
    }
  }
  return r;
}

FqMatrix mat_inv(const Fq& F, const FqMatrix& a) {
  const int n = a.n;
  FqMatrix left = a;
  FqMatrix right = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (left.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw error("matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(left.e[static_cast<std::size_t>(pivot * n + c)], left.e[static_cast<std::size_t>(col * n + c)]);
        std::swap(right.e[static_cast<std::size_t>(pivot * n + c)], right.e[static_cast<std::size_t>(col * n + c)]);
      }
    }
    std::uint16_t pinv = F.inv(left.at(col, col));
    for (int c = 0; c < n; ++c) {
      left.at(col, c) = F.mul(left.at(col, c), pinv);
      right.at(col, c) = F.mul(right.at(col, c), pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint16_t f = left.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) {
        left.at(r, c) = F.sub(left.at(r, c), F.mul(f, left.at(col, c)));
        right.at(r, c) = F.sub(right.at(r, c), F.mul(f, right.at(col, c)));
      }
    }
  }
  return right;
}

bool mat_is_identity(const FqMatrix& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FqMatrix mat_pow(const Fq& F, FqMatrix a, std::uint64_t e) {
  FqMatrix acc = mat_identity(a.n);
  while (e > 0) {
    if (e & 1) acc = mat_mul(F, acc, a);
    e >>= 1;
    if (e > 0) a = mat_mul(F, a, a);
  }
  return acc;
}

std::uint64_t mat_order(const Fq& F, const FqMatrix& a) {
  FqMatrix acc = a;
  std::uint64_t ord = 1;
  while (!mat_is_identity(acc)) {
    acc = mat_mul(F, acc, a);
    ++ord;
    if (ord > (1ull << 60)) throw error("order runaway (element not invertible?)");
  }
  return ord;
}

FqMatrix proj_canonical(const Fq& F, const FqMatrix& a) {
  for (int i = 0; i < a.n * a.n; ++i) {
    std::uint16_t v = a.e[static_cast<std::size_t>(i)];
    if (v != 0) {
      if (v == 1) return a;
      FqMatrix r = a;
      std::uint16_t scale = F.inv(v);
      for (int k = 0; k < a.n * a.n; ++k)
        r.e[static_cast<std::size_t>(k)] = F.mul(r.e[static_cast<std::size_t>(k)], scale);
      return r;
    }
  }
  return a;  // zero matrix; harmless, never invertible
}

std::uint64_t proj_order(const Fq& F, const FqMatrix& a) {
  FqMatrix canon = proj_canonical(F, a);
  FqMatrix acc = canon;
  std::uint64_t ord = 1;
  FqMatrix id = mat_identity(a.n);
  while (!(proj_canonical(F, acc) == id)) {
    acc = mat_mul(F, acc, canon);
    ++ord;
    if (ord > (1ull << 60)) throw error("order runaway");
  }
  return ord;
}

// ---- polynomials over Fq (ascending coefficient vectors) ----

namespace {

using QPoly = std::vector<std::uint16_t>;

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int qdeg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly qmul(const Fq& F, const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  qtrim(r);
  return r;
}

void qmake_monic(const Fq& F, QPoly& f) {
  qtrim(f);
  if (f.empty()) return;
  std::uint16_t lead = f.back();
  if (lead == 1) return;
  std::uint16_t s = F.inv(lead);
  for (auto& c : f) c = F.mul(c, s);
}

QPoly qmod(const Fq& F, QPoly f, const QPoly& g) {
  if (g.empty()) throw error("polynomial division by zero");
  std::uint16_t lead_inv = F.inv(g.back());
  while (f.size() >= g.size()) {
    std::uint16_t coeff = F.mul(f.back(), lead_inv);
    std::size_t shift = f.size() - g.size();
    if (coeff != 0)
      for (std::size_t i = 0; i < g.size(); ++i)
        f[i + shift] = F.sub(f[i + shift], F.mul(coeff, g[i]));
    f.pop_back();
    qtrim(f);
    if (f.empty()) break;
  }
  return f;
}

QPoly qdiv_exact(const Fq& F, QPoly f, const QPoly& g) {
  QPoly quotient(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  std::uint16_t lead_inv = F.inv(g.back());
  while (f.size() >= g.size() && !f.empty()) {
    std::uint16_t coeff = F.mul(f.back(), lead_inv);
    std::size_t shift = f.size() - g.size();
    quotient[shift] = coeff;
    for (std::size_t i = 0; i < g.size(); ++i)
      f[i + shift] = F.sub(f[i + shift], F.mul(coeff, g[i]));
    f.pop_back();
    qtrim(f);
  }
  if (!f.empty()) throw error("polynomial division was not exact");
  qtrim(quotient);
  return quotient;
}

QPoly qgcd(const Fq& F, QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  qmake_monic(F, a);
  return a;
}

QPoly qderivative(const Fq& F, const QPoly& f) {
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) {
    std::uint16_t c = 0;
    for (std::size_t k = 0; k < i % static_cast<std::size_t>(F.p()); ++k) c = F.add(c, f[i]);
    // i * f[i] in the prime field: repeated addition i mod p times
    d.push_back(c);
  }
  qtrim(d);
  return d;
}

// x^(q^d) mod f by square-and-multiply on the exponent (q^d fits in 64 bits
// for q <= 512, d <= 6).
QPoly q_xq_power_mod(const Fq& F, int d, const QPoly& f) {
  std::uint64_t e = 1;
  for (int i = 0; i < d; ++i) e *= F.q();
  QPoly base{0, 1};  // x
  QPoly acc{1};
  while (e > 0) {
    if (e & 1) acc = qmod(F, qmul(F, acc, base), f);
    e >>= 1;
    if (e > 0) base = qmod(F, qmul(F, base, base), f);
  }
  return acc;
}

// p-th root of a polynomial in F_q[x^p]: maps c * x^(pi) to c^(1/p) * x^i.
QPoly q_pth_root(const Fq& F, const QPoly& f) {
  std::uint64_t root_exp = 1;  // c^(1/p) = c^(p^(s-1))
  for (int i = 0; i < F.s() - 1; ++i) root_exp *= static_cast<std::uint64_t>(F.p());
  QPoly r;
  for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(F.p()))
    r.push_back(F.pow(f[i], root_exp));
  qtrim(r);
  return r;
}

// Product of the distinct irreducible factors of f (the radical), handling
// characteristic p correctly.
QPoly qradical(const Fq& F, QPoly f) {
  qmake_monic(F, f);
  if (qdeg(f) <= 1) return f;
  QPoly fd = qderivative(F, f);
  if (fd.empty()) return qradical(F, q_pth_root(F, f));
  QPoly g = qgcd(F, f, fd);
  if (qdeg(g) == 0) return f;  // squarefree already
  QPoly part = qdiv_exact(F, f, g);     // factors with multiplicity not divisible by p
  QPoly rest = qradical(F, g);          // may repeat factors of `part`
  QPoly overlap = qgcd(F, part, rest);
  if (qdeg(overlap) > 0) rest = qdiv_exact(F, rest, overlap);
  return qmul(F, part, rest);
}

}  // namespace

std::vector<std::uint16_t> charpoly(const Fq& F, const FqMatrix& a) {
  const int n = a.n;
  FqMatrix m = a;
  // Similarity reduction to upper Hessenberg form.
  for (int col = 0; col + 2 < n; ++col) {
    int pivot = -1;
    for (int r = col + 1; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != col + 1) {
      for (int c = 0; c < n; ++c) std::swap(m.e[static_cast<std::size_t>(pivot * n + c)], m.e[static_cast<std::size_t>((col + 1) * n + c)]);
      for (int r = 0; r < n; ++r) std::swap(m.e[static_cast<std::size_t>(r * n + pivot)], m.e[static_cast<std::size_t>(r * n + col + 1)]);
    }
    std::uint16_t pinv = F.inv(m.at(col + 1, col));
    for (int r = col + 2; r < n; ++r) {
      std::uint16_t f = F.mul(m.at(r, col), pinv);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(col + 1, c)));
      for (int rr = 0; rr < n; ++rr) m.at(rr, col + 1) = F.add(m.at(rr, col + 1), F.mul(f, m.at(rr, r)));
    }
  }
  // Leading-principal-minor recurrence for Hessenberg matrices.
  std::vector<QPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = QPoly{1};
  for (int k = 1; k <= n; ++k) {
    QPoly t_minus{F.neg(m.at(k - 1, k - 1)), 1};
    QPoly acc = qmul(F, t_minus, p[static_cast<std::size_t>(k - 1)]);
    std::uint16_t subdiag = 1;
    for (int i = k - 1; i >= 1; --i) {
      subdiag = F.mul(subdiag, m.at(i, i - 1));
      std::uint16_t coeff = F.mul(m.at(i - 1, k - 1), subdiag);
      if (coeff == 0) continue;
      // acc -= coeff * p_{i-1}
      const QPoly& pi = p[static_cast<std::size_t>(i - 1)];
      if (acc.size() < pi.size()) acc.resize(pi.size(), 0);
      for (std::size_t c = 0; c < pi.size(); ++c) acc[c] = F.sub(acc[c], F.mul(coeff, pi[c]));
    }
    qtrim(acc);
    p[static_cast<std::size_t>(k)] = std::move(acc);
  }
  QPoly result = p[static_cast<std::size_t>(n)];
  result.resize(static_cast<std::size_t>(n) + 1, 0);
  return result;
}

std::set<int> irreducible_factor_degrees(const Fq& F, std::vector<std::uint16_t> f) {
  qmake_monic(F, f);
  if (qdeg(f) < 1) throw error("irreducible_factor_degrees expects deg >= 1");
  if (qdeg(f) > 12) throw scale_error("irreducible_factor_degrees supports deg <= 12");
  QPoly r = qradical(F, std::move(f));
  std::set<int> degrees;
  for (int d = 1; 2 * d <= qdeg(r); ++d) {
    QPoly h = q_xq_power_mod(F, d, r);
    // h - x
    QPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], 1);
    qtrim(hx);
    QPoly g = qgcd(F, hx, r);
    if (qdeg(g) > 0) {
      degrees.insert(d);
      r = qdiv_exact(F, r, g);
    }
  }
  if (qdeg(r) > 0) degrees.insert(qdeg(r));
  return degrees;
}

ExponentSet exponent_set(int n, const Fq& F) {
  if (n < 1 || n > 6) throw scale_error("exponent_set supports n <= 6");
  ExponentSet es;
  es.n = n;
  es.q = F.q();
  es.p = F.p();
  int e = 0;
  while ((1 << e) < n) ++e;  // ceil(log2 n)
  es.unipotent_factor = 1;
  for (int i = 0; i < e; ++i) es.unipotent_factor *= static_cast<std::uint64_t>(F.p());

  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int next_degree, int remaining) {
    if (!current.empty()) es.degree_sets.push_back(current);
    for (int d = next_degree; d <= remaining; ++d) {
      current.push_back(d);
      rec(d + 1, remaining - d);
      current.pop_back();
    }
  };
  rec(1, n);

  std::set<std::uint64_t> ks, full, pgl;
  for (const std::vector<int>& degrees : es.degree_sets) {
    std::uint64_t k = 1;
    for (int d : degrees) {
      std::uint64_t qd = 1;
      for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(F.q());
      k *= qd - 1;
    }
    ks.insert(k);
    full.insert(checked_mul(es.unipotent_factor, k));
    // q-1 divides every q^j - 1, so the division is exact.
    std::uint64_t refined = degrees.size() >= 2 ? k / (F.q() - 1) : k;
    pgl.insert(refined);
  }
  es.semisimple_exponents.assign(ks.begin(), ks.end());
  es.exponents.assign(full.begin(), full.end());
  es.pgl_exponents.assign(pgl.begin(), pgl.end());
  return es;
}

std::uint64_t semisimple_exponent_of(const Fq& F, const FqMatrix& a) {
  std::set<int> degrees = irreducible_factor_degrees(F, charpoly(F, a));
  std::uint64_t k = 1;
  for (int d : degrees) {
    std::uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(F.q());
    k *= qd - 1;
  }
  return k == 0 ? 1 : k;
}

std::uint64_t gl_order(int n, std::uint32_t q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn = checked_mul(qn, q);
  std::uint64_t result = 1;
  std::uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    result = checked_mul(result, qn - qi);
    qi = checked_mul(qi, q);
  }
  return result;
}

std::vector<FqMatrix> enumerate_gl(const Fq& F, int n, std::uint64_t cap) {
  if (n < 1 || n > 6) throw scale_error("enumerate_gl supports n <= 6");
  if (gl_order(n, F.q()) > cap)
    throw scale_error("|GL_n(q)| exceeds enumeration cap");
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= F.q();

  std::vector<FqMatrix> out;
  FqMatrix m;
  m.n = n;
  // Incremental echelon basis of the rows chosen so far.
  std::vector<std::vector<std::uint16_t>> basis;

  std::function<bool(std::vector<std::uint16_t>)> independent = [&](std::vector<std::uint16_t> row) {
    for (const auto& b : basis) {
      int lead = -1;
      for (int i = 0; i < n; ++i)
        if (b[static_cast<std::size_t>(i)] != 0) {
          lead = i;
          break;
        }
      std::uint16_t f = F.mul(row[static_cast<std::size_t>(lead)], F.inv(b[static_cast<std::size_t>(lead)]));
      if (f != 0)
        for (int i = 0; i < n; ++i)
          row[static_cast<std::size_t>(i)] = F.sub(row[static_cast<std::size_t>(i)], F.mul(f, b[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < n; ++i)
      if (row[static_cast<std::size_t>(i)] != 0) {
        basis.push_back(std::move(row));
        return true;
      }
    return false;
  };

  std::function<void(int)> rec = [&](int r) {
    if (r == n) {
      out.push_back(m);
      return;
    }
    for (std::uint64_t code = 1; code < qn; ++code) {
      std::vector<std::uint16_t> row(static_cast<std::size_t>(n));
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        row[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(c % F.q());
        c /= F.q();
      }
      if (!independent(row)) continue;
      for (int i = 0; i < n; ++i) m.at(r, i) = row[static_cast<std::size_t>(i)];
      rec(r + 1);
      basis.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<FqMatrix> enumerate_pgl(const Fq& F, int n, std::uint64_t cap) {
  std::vector<FqMatrix> gl = enumerate_gl(F, n, cap);
  std::vector<FqMatrix> out;
  std::set<std::array<std::uint16_t, 36>> seen;
  for (const FqMatrix& a : gl) {
    FqMatrix canon = proj_canonical(F, a);
    if (seen.insert(canon.e).second) out.push_back(canon);
  }
  return out;
}

namespace {

Word a_power_word(std::uint64_t e) {
  Letters l(static_cast<std::size_t>(e), Generator::make(0, +1));
  return reduce(l, 2);
}

Counterexample matrix_counterexample(const Fq& F, const FqMatrix& a, const FqMatrix& b) {
  Counterexample ce;
  ce.first = matrix_to_json(F, a);
  ce.second = matrix_to_json(F, b);
  ce.display = matrix_display(F, a) + ", " + matrix_display(F, b);
  return ce;
}

template <GroupContext Ctx>
LawCertificate matrix_law(const Fq& F, int n, const std::vector<std::uint64_t>& exponents,
                          const Ctx& ctx, const std::vector<FqMatrix>& elements,
                          GroupSpec::Kind kind, const LieLawOptions& opts) {
  std::vector<Word> words;
  words.reserve(exponents.size());
  for (std::uint64_t e : exponents) words.push_back(a_power_word(e));
  CombineTrace trace = combine(words);

  LawCertificate cert;
  cert.law = trace.output;
  cert.target = GroupSpec{kind, n, F.q()};
  cert.method = Method::lie;
  cert.mode = opts.mode;
  cert.nominal_length = trace.nominal_output_length;
  if (trace.reduced) cert.reduced_length = trace.reduced->length();
  cert.seed = 0;
  if (opts.mode.kind == VerifyModeSpec::Kind::none) {
    cert.verified = false;
    return cert;
  }
  if (opts.mode.kind != VerifyModeSpec::Kind::exhaustive)
    throw error("matrix laws support exhaustive verification only");
  auto hit = detail::find_counterexample(
      ctx, cert.law, std::span<const FqMatrix>(elements.data(), elements.size()),
      std::span<const FqMatrix>(elements.data(), elements.size()), opts.jobs);
  cert.verified = !hit.has_value();
  if (hit) cert.counterexample = matrix_counterexample(F, elements[hit->first], elements[hit->second]);
  return cert;
}

}  // namespace

LawCertificate gl_law(int n, const Fq& F, const LieLawOptions& opts) {
  ExponentSet es = exponent_set(n, F);
  MatCtx ctx{&F, n};
  std::vector<FqMatrix> elements;
  if (opts.mode.kind == VerifyModeSpec::Kind::exhaustive)
    elements = enumerate_gl(F, n, opts.enumeration_cap);
  return matrix_law(F, n, es.exponents, ctx, elements, GroupSpec::Kind::gl, opts);
}

LawCertificate pgl_law(int n, const Fq& F, const LieLawOptions& opts) {
  ExponentSet es = exponent_set(n, F);
  ProjCtx ctx{&F, n};
  std::vector<FqMatrix> elements;
  if (opts.mode.kind == VerifyModeSpec::Kind::exhaustive)
    elements = enumerate_pgl(F, n, opts.enumeration_cap);
  return matrix_law(F, n, es.pgl_exponents, ctx, elements, GroupSpec::Kind::pgl, opts);
}

double gl_length_bound(int n, std::uint32_t q, int p) {
  int e = 0;
  while ((1 << e) < n) ++e;
  double pe = std::pow(static_cast<double>(p), e);
  double qn = std::pow(static_cast<double>(q), n);
  return 16.0 * std::exp(2.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n))) *
         (2.0 * pe * qn + 2.0);
}

LieRankBoundReport lie_rank_bound_report(int rank, std::uint32_t q) {
  if (rank < 1) throw error("rank must be >= 1");
  LieRankBoundReport report;
  report.rank = rank;
  report.q = q;
  boost::multiprecision::cpp_int base = q;
  boost::multiprecision::cpp_int power = 1;
  for (int i = 0; i < 155 * rank; ++i) power *= base;
  report.general_bound = 48 * power;
  report.general_log10 = std::log10(48.0) + 155.0 * rank * std::log10(static_cast<double>(q));
  int n = rank + 1;
  report.pgl_bound = 48.0 *
                     std::exp(2.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(n)) *
                              std::log(static_cast<double>(n))) *
                     std::pow(static_cast<double>(q), n - 1);
  return report;
}

nlohmann::ordered_json matrix_to_json(const Fq& F, const FqMatrix& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < a.n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < a.n; ++j) {
      if (F.s() == 1) {
        row.push_back(a.at(i, j));
      } else {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int c : F.element_coeffs(a.at(i, j))) coeffs.push_back(c);
        row.push_back(std::move(coeffs));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_display(const Fq& F, const FqMatrix& a) {
  (void)F;
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.n; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < a.n; ++j) {
      if (j) os << ' ';
      os << a.at(i, j);
    }
  }
  os << ']';
  return os.str();
}

}  // namespace laws
