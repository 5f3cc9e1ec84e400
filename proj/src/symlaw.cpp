#include "laws/symlaw.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "laws/cayley.hpp"
#include "laws/verify_detail.hpp"

namespace laws {

std::uint64_t landau_g(int n) {
  if (n < 1 || n > 200) throw scale_error("landau_g supports 1 <= n <= 200");
  std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
  std::vector<int> primes;
  for (int p = 2; p <= n; ++p) {
    if (!sieve[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (int q = 2 * p; q <= n; q += p) sieve[static_cast<std::size_t>(q)] = false;
  }
  // dp[j] = largest lcm achievable with cycle-length budget j, using each
  // prime in at most one power.
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(n) + 1, 1);
  for (int p : primes) {
    std::vector<std::uint64_t> next = dp;
    for (std::uint64_t pk = static_cast<std::uint64_t>(p); pk <= static_cast<std::uint64_t>(n);
         pk *= static_cast<std::uint64_t>(p)) {
      for (int j = static_cast<int>(pk); j <= n; ++j) {
        std::uint64_t candidate = dp[static_cast<std::size_t>(j) - static_cast<std::size_t>(pk)] * pk;
        next[static_cast<std::size_t>(j)] = std::max(next[static_cast<std::size_t>(j)], candidate);
      }
    }
    dp = std::move(next);
  }
  return *std::max_element(dp.begin(), dp.end());
}

namespace {

Word a_power(std::uint64_t e) {
  Letters l(static_cast<std::size_t>(e), Generator::make(0, +1));
  return reduce(l, 2);
}

SymVerifyResult sweep(const WordExpr& e, int degree, const std::vector<Perm>& sigmas,
                      const std::vector<Perm>& taus, int jobs) {
  PermCtx ctx{degree};
  auto hit = detail::find_counterexample(
      ctx, e, std::span<const Perm>(sigmas.data(), sigmas.size()),
      std::span<const Perm>(taus.data(), taus.size()), jobs);
  SymVerifyResult result;
  result.pairs_checked = static_cast<std::uint64_t>(sigmas.size()) * taus.size();
  if (hit) {
    result.verified = false;
    result.counterexample = std::make_pair(sigmas[hit->first], taus[hit->second]);
    result.pairs_checked = static_cast<std::uint64_t>(hit->first) * taus.size() + hit->second + 1;
  }
  return result;
}

std::vector<Perm> even_perms(int n) {
  std::vector<Perm> evens;
  for (const Perm& p : all_perms(n))
    if (is_even(p)) evens.push_back(p);
  return evens;
}

}  // namespace

VerifyModeSpec default_sym_mode(int n) {
  VerifyModeSpec mode;
  if (n <= 6) {
    mode.kind = VerifyModeSpec::Kind::exhaustive;
  } else if (n <= 9) {
    mode.kind = VerifyModeSpec::Kind::class_reduced;
  } else if (n <= 12) {
    mode.kind = VerifyModeSpec::Kind::sampled;
    mode.seed = kDefaultSeed;
    mode.trials = 20000;
  } else {
    mode.kind = VerifyModeSpec::Kind::none;
  }
  return mode;
}

SymVerifyResult verify_sym(const WordExpr& e, int n, const VerifyModeSpec& mode, int jobs) {
  if (n < 1) throw error("degree must be positive");
  switch (mode.kind) {
    case VerifyModeSpec::Kind::none:
      throw error("verification mode none cannot produce an outcome");
    case VerifyModeSpec::Kind::exhaustive: {
      if (n > 6) throw scale_error("exhaustive verification needs n <= 6");
      std::vector<Perm> elems = all_perms(n);
      return sweep(e, n, elems, elems, jobs);
    }
    case VerifyModeSpec::Kind::class_reduced: {
      if (n > 9) throw scale_error("class-reduced verification needs n <= 9");
      return sweep(e, n, conjugacy_class_reps(n), all_perms(n), jobs);
    }
    case VerifyModeSpec::Kind::sampled: {
      if (n > 12) throw scale_error("sampled verification needs n <= 12");
      Rng rng(mode.seed);
      PermCtx ctx{n};
      Evaluator<PermCtx> ev(ctx, e);
      SymVerifyResult result;
      std::vector<int> images(static_cast<std::size_t>(n));
      auto draw = [&] {
        std::iota(images.begin(), images.end(), 0);
        for (int i = n - 1; i > 0; --i)
          std::swap(images[static_cast<std::size_t>(i)],
                    images[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
        return Perm::from_images(images);
      };
      for (std::uint64_t t = 0; t < mode.trials; ++t) {
        Perm sigma = draw();
        Perm tau = draw();
        Perm asg[2] = {sigma, tau};
        ++result.pairs_checked;
        if (!ctx.is_identity(ev.eval(std::span<const Perm>(asg, 2)))) {
          result.verified = false;
          result.counterexample = std::make_pair(std::move(sigma), std::move(tau));
          return result;
        }
      }
      return result;
    }
  }
  throw error("unreachable verification mode");
}

SymVerifyResult verify_alt(const WordExpr& e, int n, const VerifyModeSpec& mode, int jobs) {
  if (n < 3) {
    // Alt(1) and Alt(2) are trivial.
    SymVerifyResult r;
    r.pairs_checked = 1;
    return r;
  }
  switch (mode.kind) {
    case VerifyModeSpec::Kind::none:
      throw error("verification mode none cannot produce an outcome");
    case VerifyModeSpec::Kind::exhaustive: {
      if (n > 6) throw scale_error("exhaustive verification needs n <= 6");
      std::vector<Perm> elems = even_perms(n);
      return sweep(e, n, elems, elems, jobs);
    }
    case VerifyModeSpec::Kind::class_reduced: {
      if (n > 9) throw scale_error("class-reduced verification needs n <= 9");
      std::vector<Perm> reps;
      for (const Perm& p : conjugacy_class_reps(n))
        if (is_even(p)) reps.push_back(p);
      return sweep(e, n, reps, even_perms(n), jobs);
    }
    case VerifyModeSpec::Kind::sampled: {
      if (n > 12) throw scale_error("sampled verification needs n <= 12");
      Rng rng(mode.seed);
      PermCtx ctx{n};
      Evaluator<PermCtx> ev(ctx, e);
      SymVerifyResult result;
      std::vector<int> images(static_cast<std::size_t>(n));
      auto draw_even = [&] {
        while (true) {
          std::iota(images.begin(), images.end(), 0);
          for (int i = n - 1; i > 0; --i)
            std::swap(images[static_cast<std::size_t>(i)],
                      images[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
          Perm p = Perm::from_images(images);
          if (is_even(p)) return p;
        }
      };
      for (std::uint64_t t = 0; t < mode.trials; ++t) {
        Perm sigma = draw_even();
        Perm tau = draw_even();
        Perm asg[2] = {sigma, tau};
        ++result.pairs_checked;
        if (!ctx.is_identity(ev.eval(std::span<const Perm>(asg, 2)))) {
          result.verified = false;
          result.counterexample = std::make_pair(std::move(sigma), std::move(tau));
          return result;
        }
      }
      return result;
    }
  }
  throw error("unreachable verification mode");
}

namespace {

// true if the pair generates Sym(k) (order k!) or Alt(k) (order k!/2, k>=3).
enum class GeneratedKind { other, sym, alt };

GeneratedKind generated_kind(int k, std::uint64_t subgroup_order) {
  std::uint64_t full = 1;
  for (int i = 2; i <= k; ++i) full *= static_cast<std::uint64_t>(i);
  if (subgroup_order == full) return GeneratedKind::sym;
  if (k >= 3 && subgroup_order == full / 2) return GeneratedKind::alt;
  return GeneratedKind::other;
}

}  // namespace

SymVerifyResult verify_generating_pairs(const WordExpr& e, int n, int jobs) {
  (void)jobs;
  SymVerifyResult result;
  for (int k = 2; k <= n; ++k) {
    std::vector<Perm> taus = all_perms(k);
    PermCtx ctx{k};
    Evaluator<PermCtx> ev(ctx, e);
    for (const Perm& sigma : conjugacy_class_reps(k)) {
      for (const Perm& tau : taus) {
        std::vector<Perm> gens{sigma, tau};
        std::uint64_t ord = generate_subgroup(gens).size();
        if (generated_kind(k, ord) == GeneratedKind::other) continue;
        Perm asg[2] = {sigma, tau};
        ++result.pairs_checked;
        if (!ctx.is_identity(ev.eval(std::span<const Perm>(asg, 2)))) {
          result.verified = false;
          result.counterexample = std::make_pair(sigma, tau);
          return result;
        }
      }
    }
  }
  return result;
}

namespace {

Counterexample perm_counterexample(const std::pair<Perm, Perm>& pair) {
  Counterexample ce;
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  nlohmann::ordered_json b = nlohmann::ordered_json::array();
  for (int i = 0; i < pair.first.degree(); ++i) a.push_back(pair.first(i));
  for (int i = 0; i < pair.second.degree(); ++i) b.push_back(pair.second(i));
  ce.first = std::move(a);
  ce.second = std::move(b);
  ce.display = to_cycle_string(pair.first) + ", " + to_cycle_string(pair.second);
  return ce;
}

LawCertificate certify_sym(CombineTrace trace, int n, Method method, const VerifyModeSpec& mode,
                           std::uint64_t seed, int jobs) {
  LawCertificate cert;
  cert.law = trace.output;
  cert.target = GroupSpec{GroupSpec::Kind::sym, n, 0};
  cert.method = method;
  cert.mode = mode;
  cert.nominal_length = trace.nominal_output_length;
  if (trace.reduced) cert.reduced_length = trace.reduced->length();
  cert.seed = seed;
  if (mode.kind == VerifyModeSpec::Kind::none) {
    cert.verified = false;
    return cert;
  }
  SymVerifyResult vr = method == Method::random_ ? verify_generating_pairs(cert.law, n, jobs)
                                                 : verify_sym(cert.law, n, mode, jobs);
  cert.verified = vr.verified;
  if (vr.counterexample) cert.counterexample = perm_counterexample(*vr.counterexample);
  return cert;
}

}  // namespace

LawCertificate landau_law(int n, const VerifyModeSpec& mode, int jobs) {
  if (n < 2) throw error("landau_law requires n >= 2");
  std::uint64_t g = landau_g(n);
  if (g > 200000) throw scale_error("landau_law word count g(n) too large to materialize");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(g));
  for (std::uint64_t e = 1; e <= g; ++e) words.push_back(a_power(e));
  CombineOptions opts;
  // Beyond flatten scale the inputs are distinct powers of one generator, so
  // the collapse checks are vacuous; see CollapsePolicy.
  if (16 * g * g * g > 20'000'000ull) opts.policy = CollapsePolicy::distinct_powers;
  CombineTrace trace = combine(words, opts);
  return certify_sym(std::move(trace), n, Method::landau, mode, 0, jobs);
}

LawCertificate order_law(std::uint64_t max_order, int n_target, const VerifyModeSpec& mode, int jobs) {
  if (max_order < 1) throw error("order_law requires max_order >= 1");
  if (max_order > 200000) throw scale_error("order_law word count too large to materialize");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(max_order));
  for (std::uint64_t e = 1; e <= max_order; ++e) words.push_back(a_power(e));
  CombineOptions opts;
  if (max_order >= 2 && combine_length_bound(words.size(), max_order) > 20'000'000ull)
    opts.policy = CollapsePolicy::distinct_powers;
  CombineTrace trace = combine(words, opts);
  return certify_sym(std::move(trace), n_target, Method::order, mode, 0, jobs);
}

namespace {

struct PairInfo {
  Perm sigma, tau;
  GeneratedKind kind = GeneratedKind::other;
  std::uint64_t group_order = 0;
  std::uint64_t mixing = 0;
};

bool hit_target(const Perm& value, int k, GeneratedKind kind, RandomSearchConfig::TargetRule rule) {
  if (value.is_identity()) return false;
  if (rule == RandomSearchConfig::TargetRule::low_order)
    return order(value) <= static_cast<std::uint64_t>(k);
  if (kind == GeneratedKind::sym || k % 2 == 1) return is_k_cycle(value, k);
  return is_k_cycle(value, k - 1);
}

Word sample_lazy_walk_word(Rng& rng, std::uint64_t steps) {
  Letters letters;
  for (std::uint64_t t = 0; t < steps; ++t) {
    std::uint64_t r = rng.below(8);
    if (r < 4) continue;  // lazy: stay with probability 1/2
    int idx = static_cast<int>((r - 4) / 2);
    int sign = (r % 2 == 0) ? +1 : -1;
    Generator g = Generator::make(idx, sign);
    if (!letters.empty() && letters.back() == g.inverse())
      letters.pop_back();
    else
      letters.push_back(g);
  }
  return reduce(letters, 2);
}

}  // namespace

RandomWords random_cycle_words(int n, const RandomSearchConfig& cfg) {
  if (n < 1 || n > 7) throw scale_error("random_cycle_words supports n <= 7");
  RandomWords rw;
  for (int k = 2; k <= n; ++k) {
    // Class-reduced pairs that generate Sym(k) or Alt(k).
    std::vector<PairInfo> pairs;
    std::vector<Perm> taus = all_perms(k);
    std::uint64_t max_bound = 0;
    std::uint64_t full_order = 1;
    for (int i = 2; i <= k; ++i) full_order *= static_cast<std::uint64_t>(i);
    for (const Perm& sigma : conjugacy_class_reps(k)) {
      for (const Perm& tau : taus) {
        std::vector<Perm> gens{sigma, tau};
        CayleyGraph graph = build_cayley(gens, full_order + 1);
        GeneratedKind kind = generated_kind(k, graph.order());
        if (kind == GeneratedKind::other || graph.order() == 1) continue;
        PairInfo info;
        info.sigma = sigma;
        info.tau = tau;
        info.kind = kind;
        info.group_order = graph.order();
        info.mixing = mixing_bound(graph.s_size(), static_cast<std::uint64_t>(diameter(graph)),
                                   info.group_order);
        max_bound = std::max(max_bound, info.mixing);
        pairs.push_back(std::move(info));
      }
    }
    if (pairs.empty()) continue;
    std::uint64_t walk_len = cfg.walk_length_override.value_or(max_bound);
    rw.walk_length[k] = walk_len;

    std::vector<std::size_t> uncovered(pairs.size());
    std::iota(uncovered.begin(), uncovered.end(), std::size_t{0});

    auto try_word = [&](std::size_t word_index) {
      const Word& w = rw.words[word_index];
      if (w.empty()) return;
      std::vector<std::size_t> still;
      still.reserve(uncovered.size());
      for (std::size_t pi : uncovered) {
        const PairInfo& pair = pairs[pi];
        Perm value = evaluate(w, {pair.sigma, pair.tau});
        if (hit_target(value, k, pair.kind, cfg.target_rule)) {
          CoverageEntry entry;
          entry.k = k;
          entry.alt = pair.kind == GeneratedKind::alt;
          entry.sigma = to_cycle_string(pair.sigma);
          entry.tau = to_cycle_string(pair.tau);
          entry.word_index = word_index;
          entry.hit_order = order(value);
          rw.coverage.push_back(std::move(entry));
        } else {
          still.push_back(pi);
        }
      }
      uncovered = std::move(still);
    };

    // Words already in the pool may cover pairs of this degree too.
    for (std::size_t wi = 0; wi < rw.words.size() && !uncovered.empty(); ++wi) try_word(wi);

    Rng rng(cfg.seed ^ static_cast<std::uint64_t>(k));
    std::size_t attempts = 0;
    while (!uncovered.empty()) {
      if (attempts++ == cfg.max_attempts) {
        const PairInfo& pair = pairs[uncovered.front()];
        throw coverage_failure(k, to_cycle_string(pair.sigma) + ", " + to_cycle_string(pair.tau));
      }
      for (std::size_t t = 0; t < cfg.pool_budget && !uncovered.empty(); ++t) {
        Word w = sample_lazy_walk_word(rng, walk_len);
        if (w.empty()) continue;
        std::size_t before = uncovered.size();
        rw.words.push_back(w);
        try_word(rw.words.size() - 1);
        if (uncovered.size() == before) rw.words.pop_back();  // useless word: drop
      }
    }
  }
  return rw;
}

LawCertificate random_law(int n, const RandomSearchConfig& cfg, int jobs) {
  if (n < 2) throw error("random_law requires n >= 2");
  RandomWords rw = random_cycle_words(n, cfg);
  std::vector<std::uint64_t> orders;
  for (const CoverageEntry& entry : rw.coverage) orders.push_back(entry.hit_order);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  if (rw.words.empty() || orders.empty()) throw error("random_law found no covering words");
  std::vector<Word> closed = power_closure(rw.words, orders);
  CombineTrace trace = combine(closed);
  VerifyModeSpec mode;
  mode.kind = VerifyModeSpec::Kind::class_reduced;
  LawCertificate cert = certify_sym(std::move(trace), n, Method::random_, mode, cfg.seed, jobs);
  return cert;
}

WordExpr y_word(const WordExpr& x_i, const WordExpr& x_j) {
  if (!x_i || !x_j || x_i->nominal() == 0 || x_j->nominal() == 0)
    throw error("y_word requires non-trivial inputs");
  // Non-triviality of the inputs as group elements (they are laws we built,
  // but the check is cheap at desk scale).
  if (flatten(x_i).empty() || flatten(x_j).empty())
    throw error("y_word requires non-trivial inputs");
  WordExpr c = ExprNode::gen(Generator::make(2, +1), 4);
  WordExpr d = ExprNode::gen(Generator::make(3, +1), 4);
  WordExpr xj1 = ExprNode::comm(x_j, c);
  WordExpr xj2 = ExprNode::comm(x_j, d);
  WordExpr y_prime = substitute_expr(x_i, {xj1, xj2});
  // F4 = <a, bab^-1, b^2ab^-2, b^3ab^-3> inside F2.
  std::array<Word, 4> images{parse_word("a", 2), parse_word("baB", 2), parse_word("bbaBB", 2),
                             parse_word("bbbaBBB", 2)};
  return ExprNode::subst(y_prime, images);
}

namespace {

std::optional<Word> try_flatten(const WordExpr& e, std::size_t cap = kDefaultFlattenCap) {
  if (e->nominal() > cap) return std::nullopt;
  try {
    return flatten(e, cap);
  } catch (const scale_error&) {
    return std::nullopt;
  }
}

LawCertificate recursive_law_impl(int n, const VerifyModeSpec& mode, const RecursiveOptions& opts,
                                  std::map<int, LawCertificate>& memo);

// The x_i of the recursion: memoized laws for Sym(2^i).
const LawCertificate& memoized_power_law(int i, const RecursiveOptions& opts,
                                         std::map<int, LawCertificate>& memo) {
  int n = 1 << i;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  VerifyModeSpec mode = default_sym_mode(n);
  if (mode.kind == VerifyModeSpec::Kind::none)
    throw scale_error("recursive_law needs a verifiable law for Sym(" + std::to_string(n) + ")");
  LawCertificate cert = recursive_law_impl(n, mode, opts, memo);
  if (!cert.verified)
    throw error("recursive_law: the sub-law for Sym(" + std::to_string(n) + ") failed verification");
  return memo.emplace(n, std::move(cert)).first->second;
}

LawCertificate recursive_law_impl(int n, const VerifyModeSpec& mode, const RecursiveOptions& opts,
                                  std::map<int, LawCertificate>& memo) {
  if (n < 2) throw error("recursive_law requires n >= 2");
  if (n == 2) {
    // Base of the induction: the shortest verified law for Sym(2).
    LawCertificate cert;
    cert.law = ExprNode::lit(parse_word("aa", 2));
    cert.target = GroupSpec{GroupSpec::Kind::sym, 2, 0};
    cert.method = Method::recursive;
    cert.mode.kind = VerifyModeSpec::Kind::exhaustive;
    SymVerifyResult vr = verify_sym(cert.law, 2, cert.mode, opts.jobs);
    cert.verified = vr.verified;
    cert.nominal_length = nominal_length(cert.law);
    cert.reduced_length = 2;
    cert.seed = opts.random_cfg.seed;
    return cert;
  }

  std::vector<CombineInput> inputs;

  // v: kills pairs generating Sym(k)/Alt(k) (randomized construction) or,
  // by default at desk scale, the Landau words which already kill every
  // pair directly.
  if (opts.random_v && n <= 7) {
    LawCertificate v = random_law(n, opts.random_cfg, opts.jobs);
    if (!v.verified) throw error("recursive_law: randomized v failed verification");
    std::optional<Word> flat = try_flatten(v.law);
    inputs.push_back(CombineInput{v.law, std::move(flat)});
  } else {
    std::uint64_t g = landau_g(n);
    std::vector<Word> words;
    for (std::uint64_t e = 1; e <= g; ++e) words.push_back(a_power(e));
    CombineTrace v = combine(words);
    inputs.push_back(CombineInput{v.output, v.reduced});
  }

  // v': kills every pair whose first element has small order; the desk-scale
  // bound for "small" is g(n) unless overridden.
  {
    std::uint64_t bound = opts.order_bound.value_or(landau_g(n));
    std::vector<Word> words;
    for (std::uint64_t e = 1; e <= bound; ++e) words.push_back(a_power(e));
    CombineTrace vp = combine(words);
    inputs.push_back(CombineInput{vp.output, vp.reduced});
  }

  // y_{i,j} for 1 <= i,j < log2(n) with 2^(i+j) < 4n.
  int log2n = 0;
  while ((1 << (log2n + 1)) <= n) ++log2n;  // floor(log2 n)
  int limit = (1 << log2n) == n ? log2n : log2n + 1;  // i < log2(n), strict
  for (int i = 1; i < limit; ++i) {
    for (int j = 1; j < limit; ++j) {
      if ((1LL << (i + j)) >= 4LL * n) continue;
      const LawCertificate& xi = memoized_power_law(i, opts, memo);
      const LawCertificate& xj = memoized_power_law(j, opts, memo);
      WordExpr y = y_word(xi.law, xj.law);
      std::optional<Word> flat = try_flatten(y);
      inputs.push_back(CombineInput{std::move(y), std::move(flat)});
    }
  }

  CombineTrace trace = combine_exprs(std::move(inputs));
  return [&] {
    LawCertificate cert;
    cert.law = trace.output;
    cert.target = GroupSpec{GroupSpec::Kind::sym, n, 0};
    cert.method = Method::recursive;
    cert.mode = mode;
    cert.nominal_length = trace.nominal_output_length;
    if (trace.reduced) cert.reduced_length = trace.reduced->length();
    cert.seed = opts.random_cfg.seed;
    if (mode.kind == VerifyModeSpec::Kind::none) {
      cert.verified = false;
      return cert;
    }
    SymVerifyResult vr = verify_sym(cert.law, n, mode, opts.jobs);
    cert.verified = vr.verified;
    if (vr.counterexample) cert.counterexample = perm_counterexample(*vr.counterexample);
    return cert;
  }();
}

}  // namespace

LawCertificate recursive_law(int n, const VerifyModeSpec& mode, const RecursiveOptions& opts) {
  std::map<int, LawCertificate> memo;
  return recursive_law_impl(n, mode, opts, memo);
}

ExponentIneqReport check_exponent_inequality(int m_lo, int m_hi) {
  if (m_lo < 2) m_lo = 2;
  if (m_hi > 10000) throw scale_error("check_exponent_inequality supports m <= 10^4");
  ExponentIneqReport report;
  report.m_lo = m_lo;
  report.m_hi = m_hi;
  for (int m = m_lo; m <= m_hi; ++m) {
    std::uint64_t m4 = static_cast<std::uint64_t>(m) * m;
    m4 = m4 * m4;
    std::uint64_t rhs = m4 - static_cast<std::uint64_t>(m) * m;
    for (int i = 1; i < m; ++i) {
      int j_max = std::min(m - 1, m + 1 - i);
      if (j_max < 1) continue;
      report.triples_checked += static_cast<std::uint64_t>(j_max);
      // i^4 + j^4 is increasing in j, so scan downward and stop at the first
      // satisfied value: everything below it is satisfied too.
      std::uint64_t i4 = static_cast<std::uint64_t>(i) * i;
      i4 = i4 * i4;
      for (int j = j_max; j >= 1; --j) {
        std::uint64_t j4 = static_cast<std::uint64_t>(j) * j;
        j4 = j4 * j4;
        if (i4 + j4 <= rhs) break;
        if (report.violations.size() < 1000)
          report.violations.push_back(ExponentViolation{m, i, j});
        report.max_violating_m = m;
      }
    }
  }
  return report;
}

std::vector<AlphaRow> alpha_table(int n_max, const RandomSearchConfig& cfg, int jobs) {
  if (n_max < 2 || n_max > 8) throw scale_error("alpha_table supports 2 <= n_max <= 8");
  std::vector<AlphaRow> rows;
  auto push = [&](int n, const LawCertificate& cert) {
    AlphaRow row;
    row.n = n;
    row.method = cert.method;
    row.nominal = cert.nominal_length;
    row.reduced = cert.reduced_length;
    row.mode = cert.mode.str();
    row.verified = cert.verified;
    rows.push_back(std::move(row));
  };
  for (int n = 2; n <= n_max; ++n) {
    VerifyModeSpec mode = default_sym_mode(n);
    push(n, landau_law(n, mode, jobs));
    push(n, order_law(landau_g(n), n, mode, jobs));
    if (n <= 7) {
      RandomSearchConfig per_n = cfg;
      push(n, random_law(n, per_n, jobs));
    }
    RecursiveOptions ropts;
    ropts.random_cfg = cfg;
    ropts.jobs = jobs;
    push(n, recursive_law(n, mode, ropts));
  }
  return rows;
}

}  // namespace laws
