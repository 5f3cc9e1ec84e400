#include "laws/divis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "laws/eval.hpp"
#include "laws/symlaw.hpp"

namespace laws {

std::optional<std::uint64_t> d_z(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  for (std::uint64_t m = 2;; ++m)
    if (n % m != 0) return m;
}

std::optional<std::uint64_t> d_z(const BigInt& n) {
  if (n == 0) return std::nullopt;
  for (std::uint64_t m = 2;; ++m)
    if (n % m != 0) return m;
}

namespace {

std::vector<std::uint32_t> primes_upto(std::uint64_t x) {
  if (x > 100'000'000ull) throw scale_error("sieve cap is 10^8");
  std::vector<bool> composite(static_cast<std::size_t>(x) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= x; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

}  // namespace

double chebyshev_theta(double x) {
  if (x < 2) return 0.0;
  double total = 0.0;
  for (std::uint32_t p : primes_upto(static_cast<std::uint64_t>(x)))
    total += std::log(static_cast<double>(p));
  return total;
}

double chebyshev_psi(double x) {
  if (x < 2) return 0.0;
  double total = 0.0;
  std::uint64_t bound = static_cast<std::uint64_t>(x);
  for (std::uint32_t p : primes_upto(bound)) {
    double logp = std::log(static_cast<double>(p));
    // every prime power p^k <= x contributes log p
    for (std::uint64_t pk = p; pk <= bound; ) {
      total += logp;
      if (pk > bound / p) break;
      pk *= p;
    }
  }
  return total;
}

BigInt lcm_upto(std::uint64_t x) {
  BigInt acc = 1;
  for (std::uint64_t m = 2; m <= x; ++m) {
    BigInt g = boost::multiprecision::gcd(acc, BigInt(m));
    acc = acc / g * m;
  }
  return acc;
}

double log_big(const BigInt& n) {
  if (n <= 0) throw error("log_big requires a positive integer");
  unsigned bits = boost::multiprecision::msb(n);
  if (bits <= 52) return std::log(n.convert_to<double>());
  BigInt top = n >> (bits - 52);
  return std::log(top.convert_to<double>()) + static_cast<double>(bits - 52) * std::log(2.0);
}

std::string DivisibilityResult::value_str() const {
  return value ? std::to_string(*value) : ("> " + std::to_string(n_max));
}

namespace {

DivisibilityWitness make_witness(int degree, const Perm& sigma, const Perm& tau, const Word& w) {
  DivisibilityWitness witness;
  witness.degree = degree;
  witness.sigma = sigma;
  witness.tau = tau;
  Perm value = evaluate(w, {sigma, tau});
  for (int k = 0; k < degree; ++k)
    if (value(k) != k) {
      witness.moved_point = k;
      break;
    }
  return witness;
}

}  // namespace

DivisibilityResult d_f2_law_oracle(const Word& w, int n_max) {
  if (n_max < 2 || n_max > 9) throw scale_error("d_f2_law_oracle supports 2 <= n_max <= 9");
  DivisibilityResult result;
  result.word = w;
  result.n_max = n_max;
  result.oracle = DivisOracle::law;
  if (w.empty()) return result;  // identity is in every subgroup: D = infinity
  WordExpr expr = word_to_expr(w);
  for (int n = 2; n <= n_max; ++n) {
    VerifyModeSpec mode;
    mode.kind = n <= 6 ? VerifyModeSpec::Kind::exhaustive : VerifyModeSpec::Kind::class_reduced;
    SymVerifyResult vr = verify_sym(expr, n, mode);
    if (!vr.verified) {
      result.value = static_cast<std::uint64_t>(n);
      result.witness = make_witness(n, vr.counterexample->first, vr.counterexample->second, w);
      return result;
    }
  }
  return result;
}

DivisibilityResult d_f2_subgroup_oracle(const Word& w, int n_max) {
  if (n_max < 2 || n_max > 6) throw scale_error("d_f2_subgroup_oracle supports 2 <= n_max <= 6");
  DivisibilityResult result;
  result.word = w;
  result.n_max = n_max;
  result.oracle = DivisOracle::subgroup;
  if (w.empty()) return result;
  std::uint64_t best = 0;
  // The index of the point stabilizer Lambda = {v : v(sigma,tau)(k) = k} is
  // the orbit size of k under <sigma,tau>; minimize over all pairs and all
  // moved points.
  for (int m = 2; m <= n_max; ++m) {
    std::vector<Perm> elems = all_perms(m);
    for (const Perm& sigma : elems) {
      for (const Perm& tau : elems) {
        Perm value = evaluate(w, {sigma, tau});
        if (value.is_identity()) continue;
        for (int k = 0; k < m; ++k) {
          if (value(k) == k) continue;
          // orbit of k under the pair
          std::vector<bool> seen(static_cast<std::size_t>(m), false);
          std::vector<int> stack{k};
          seen[static_cast<std::size_t>(k)] = true;
          std::size_t orbit = 0;
          while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++orbit;
            for (const Perm* g : {&sigma, &tau}) {
              int y = (*g)(x);
              if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
              }
            }
          }
          if (best == 0 || orbit < best) {
            best = orbit;
            result.witness = DivisibilityWitness{m, sigma, tau, k};
          }
        }
      }
    }
  }
  if (best != 0) result.value = best;
  return result;
}

Word divis_canonical(const Word& w) {
  Letters core(w.letters().begin(), w.letters().end());
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    core.erase(core.begin());
    core.pop_back();
  }
  if (core.empty()) return Word(w.rank());
  Word best = reduce(core, w.rank());
  for (int flip = 0; flip < 2; ++flip) {
    Letters current = core;
    if (flip) {
      Letters inv;
      for (auto it = current.rbegin(); it != current.rend(); ++it) inv.push_back(it->inverse());
      current = std::move(inv);
    }
    for (std::size_t r = 0; r < current.size(); ++r) {
      std::rotate(current.begin(), current.begin() + 1, current.end());
      Word candidate = reduce(current, w.rank());
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

namespace {

void enumerate_reduced_words(int length, const std::function<void(const Word&)>& visit) {
  Letters letters;
  std::function<void()> rec = [&] {
    if (static_cast<int>(letters.size()) == length) {
      visit(reduce(letters, 2));
      return;
    }
    for (std::uint8_t code = 0; code < 4; ++code) {
      Generator g{code};
      if (!letters.empty() && letters.back() == g.inverse()) continue;
      letters.push_back(g);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

}  // namespace

std::vector<ProfileRow> d_f2_profile(int max_len, int n_max) {
  if (max_len < 1 || max_len > 8) throw scale_error("d_f2_profile supports lengths <= 8");
  std::vector<ProfileRow> rows;
  std::map<Word, std::optional<std::uint64_t>> cache;
  for (int len = 1; len <= max_len; ++len) {
    ProfileRow row;
    row.length = len;
    bool have = false;
    enumerate_reduced_words(len, [&](const Word& w) {
      Word canon = divis_canonical(w);
      auto it = cache.find(canon);
      if (it == cache.end()) {
        DivisibilityResult r = d_f2_law_oracle(canon, n_max);
        it = cache.emplace(canon, r.value).first;
        ++row.classes_scanned;
      }
      const std::optional<std::uint64_t>& value = it->second;
      bool better = false;
      if (!have)
        better = true;
      else if (!row.value && value)
        better = false;
      else if (!value && row.value)
        better = true;
      else if (value && row.value && *value > *row.value)
        better = true;
      if (better) {
        row.value = value;
        row.extremal = w;
        have = true;
      }
    });
    // nullopt means "> n_max", which dominates any exact value
    if (rows.empty()) {
      row.cumulative = row.value;
    } else if (!rows.back().cumulative.has_value() || !row.value.has_value()) {
      row.cumulative = std::nullopt;
    } else {
      row.cumulative = std::max(*rows.back().cumulative, *row.value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace laws
