// Command-line front end: construct laws, verify certificates, compute
// divisibility profiles, and export Cayley-walk data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "laws/cayley.hpp"
#include "laws/csv.hpp"
#include "laws/divis.hpp"
#include "laws/eval.hpp"
#include "laws/lielaw.hpp"
#include "laws/symlaw.hpp"
#include "laws/verify.hpp"

using namespace laws;

namespace {

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void emit_certificate(const LawCertificate& cert, const std::string& out_path) {
  std::string text = cert.to_json().dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw error("cannot open " + out_path + " for writing");
    out << text;
    std::cout << "certificate: " << out_path << "\n";
  }
}

int certificate_exit(const LawCertificate& cert, bool verification_requested) {
  if (!verification_requested) return 0;
  if (cert.verified) return 0;
  if (cert.counterexample)
    std::cout << "counterexample: " << cert.counterexample->display << "\n";
  return 2;
}

std::vector<Perm> parse_gens(const std::string& text, int degree) {
  std::vector<Perm> gens;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    std::string trimmed;
    for (char c : current)
      if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed.push_back(c);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (!trimmed.empty()) gens.push_back(parse_perm(trimmed, degree));
    current.clear();
  };
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    current.push_back(c);
  }
  flush();
  if (gens.empty()) throw parse_error("no generators given");
  return gens;
}

Fq field_for(std::uint32_t q) {
  for (int p = 2; p <= static_cast<int>(q); ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    std::uint32_t power = 1;
    int s = 0;
    while (power < q) {
      power *= static_cast<std::uint32_t>(p);
      ++s;
    }
    if (power == q) return Fq::make(p, s);
  }
  throw parse_error("q must be a prime power");
}

std::string opt_str(const std::optional<std::uint64_t>& v, int n_max) {
  return v ? std::to_string(*v) : ("> " + std::to_string(n_max));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"short group laws: construction, verification, divisibility"};
  app.require_subcommand(1);

  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker count for verification sweeps");

  // law-sym
  auto* law_sym = app.add_subcommand("law-sym", "construct a law for Sym(n)");
  int sym_n = 4;
  std::string sym_method = "landau";
  std::string sym_verify = "auto";
  std::uint64_t sym_seed = kDefaultSeed;
  std::uint64_t sym_max_order = 0;
  std::uint64_t walk_budget = 0;
  std::string sym_out;
  law_sym->add_option("--n", sym_n, "degree")->required();
  law_sym->add_option("--method", sym_method, "landau|order|random|recursive");
  law_sym->add_option("--verify", sym_verify, "exhaustive|classes|sampled[:seed:trials]|none|auto");
  law_sym->add_option("--seed", sym_seed, "seed for randomized constructions");
  law_sym->add_option("--max-order", sym_max_order, "order bound for --method order");
  law_sym->add_option("--walk-budget", walk_budget, "walk length override for --method random");
  law_sym->add_option("--out", sym_out, "certificate output path");

  // law-gl / law-pgl
  auto* law_gl = app.add_subcommand("law-gl", "construct a law for GL_n(q)");
  auto* law_pgl = app.add_subcommand("law-pgl", "construct a law for PGL_n(q)");
  int gl_n = 2;
  std::uint32_t gl_q = 2;
  std::string gl_verify = "exhaustive";
  std::uint64_t gl_cap = 1'000'000;
  std::string gl_out;
  for (CLI::App* sub : {law_gl, law_pgl}) {
    sub->add_option("--n", gl_n, "matrix size")->required();
    sub->add_option("--q", gl_q, "field size (prime power <= 512)")->required();
    sub->add_option("--verify", gl_verify, "exhaustive|none");
    sub->add_option("--max-order", gl_cap, "group enumeration cap");
    sub->add_option("--out", gl_out, "certificate output path");
  }

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a stored certificate");
  std::string verify_law_path;
  std::string verify_group;
  std::string verify_mode = "exhaustive";
  verify_cmd->add_option("--law", verify_law_path, "certificate JSON path")->required();
  verify_cmd->add_option("--group", verify_group, "target group (sym:N|alt:N|gl:N:Q|pgl:N:Q)");
  verify_cmd->add_option("--mode", verify_mode, "exhaustive|classes|sampled[:seed:trials]");

  // div
  auto* div_cmd = app.add_subcommand("div", "divisibility of a word in F2");
  std::string div_word;
  int div_max_n = 6;
  std::string div_oracle = "law";
  div_cmd->add_option("--word", div_word, "word over a,b (A,B inverses)")->required();
  div_cmd->add_option("--max-n", div_max_n, "largest degree tested");
  div_cmd->add_option("--oracle", div_oracle, "law|subgroup|both");

  // div-profile
  auto* profile_cmd = app.add_subcommand("div-profile", "divisibility profile over short words");
  int profile_len = 6;
  int profile_max_n = 5;
  std::string profile_out;
  profile_cmd->add_option("--max-len", profile_len, "largest word length");
  profile_cmd->add_option("--max-n", profile_max_n, "largest degree tested");
  profile_cmd->add_option("--out", profile_out, "CSV output path");

  // cheby
  auto* cheby_cmd = app.add_subcommand("cheby", "Chebyshev theta/psi values");
  double cheby_x = 1e6;
  std::string cheby_out;
  int cheby_points = 20;
  cheby_cmd->add_option("--x", cheby_x, "upper limit")->required();
  cheby_cmd->add_option("--csv", cheby_out, "CSV path for a sampled table");
  cheby_cmd->add_option("--points", cheby_points, "rows in the CSV table");

  // cayley
  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley graph diameter, gap, walk trace");
  int cayley_degree = 4;
  std::string cayley_gens;
  std::uint64_t cayley_steps = 0;
  std::string cayley_target = "none";
  std::string cayley_out;
  std::uint64_t cayley_cap = 50000;
  cayley_cmd->add_option("--degree", cayley_degree, "permutation degree")->required();
  cayley_cmd->add_option("--gens", cayley_gens, "comma-separated permutations")->required();
  cayley_cmd->add_option("--steps", cayley_steps, "walk steps (default: mixing bound)");
  cayley_cmd->add_option("--target", cayley_target, "target set: none|k:<len> (k-cycles)");
  cayley_cmd->add_option("--csv", cayley_out, "CSV path for the walk trace");
  cayley_cmd->add_option("--max-order", cayley_cap, "graph size cap");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "desk-scale subgroup case split");
  int classify_degree = 4;
  std::string classify_gens;
  std::uint64_t classify_cap = 40320;
  int classify_max_degree = 12;
  classify_cmd->add_option("--degree", classify_degree, "permutation degree")->required();
  classify_cmd->add_option("--gens", classify_gens, "comma-separated permutations")->required();
  classify_cmd->add_option("--max-order", classify_cap, "closure enumeration cap");
  classify_cmd->add_option("--max-degree", classify_max_degree, "degree cap");

  // alpha-table
  auto* alpha_cmd = app.add_subcommand("alpha-table", "measured law lengths per n and method");
  int alpha_n = 6;
  std::uint64_t alpha_seed = kDefaultSeed;
  std::string alpha_out;
  alpha_cmd->add_option("--max-n", alpha_n, "largest degree");
  alpha_cmd->add_option("--seed", alpha_seed, "seed for the randomized rows");
  alpha_cmd->add_option("--out", alpha_out, "CSV output path");

  // exp-ineq
  auto* ineq_cmd = app.add_subcommand("exp-ineq", "enumerate the i^4+j^4 <= m^4-m^2 inequality");
  int ineq_lo = 2;
  int ineq_hi = 2000;
  ineq_cmd->add_option("--m-lo", ineq_lo, "smallest m");
  ineq_cmd->add_option("--m-hi", ineq_hi, "largest m");

  CLI11_PARSE(app, argc, argv);

  try {
    if (law_sym->parsed()) {
      VerifyModeSpec mode = sym_verify == "auto" ? default_sym_mode(sym_n)
                                                 : VerifyModeSpec::parse(sym_verify);
      if (mode.kind == VerifyModeSpec::Kind::sampled)
        std::cout << "verify seed: " << mode.seed << "\n";
      LawCertificate cert;
      if (sym_method == "landau") {
        cert = landau_law(sym_n, mode, jobs);
      } else if (sym_method == "order") {
        std::uint64_t bound = sym_max_order ? sym_max_order : landau_g(sym_n);
        cert = order_law(bound, sym_n, mode, jobs);
      } else if (sym_method == "random") {
        RandomSearchConfig cfg;
        cfg.seed = sym_seed;
        if (walk_budget) cfg.walk_length_override = walk_budget;
        std::cout << "seed: " << cfg.seed << "\n";
        cert = random_law(sym_n, cfg, jobs);
      } else if (sym_method == "recursive") {
        RecursiveOptions opts;
        opts.random_cfg.seed = sym_seed;
        if (walk_budget) opts.random_cfg.walk_length_override = walk_budget;
        opts.jobs = jobs;
        cert = recursive_law(sym_n, mode, opts);
      } else {
        throw parse_error("unknown method: " + sym_method);
      }
      std::cout << "law " << cert.target.str() << " method=" << to_string(cert.method)
                << " mode=" << cert.mode.str() << " nominal=" << cert.nominal_length;
      if (cert.reduced_length) std::cout << " reduced=" << *cert.reduced_length;
      std::cout << " outcome=" << (cert.verified ? "verified" : "not-verified") << "\n";
      emit_certificate(cert, sym_out);
      return certificate_exit(cert, mode.kind != VerifyModeSpec::Kind::none);
    }

    if (law_gl->parsed() || law_pgl->parsed()) {
      Fq F = field_for(gl_q);
      LieLawOptions opts;
      opts.mode = VerifyModeSpec::parse(gl_verify);
      opts.jobs = jobs;
      opts.enumeration_cap = gl_cap;
      LawCertificate cert = law_gl->parsed() ? gl_law(gl_n, F, opts) : pgl_law(gl_n, F, opts);
      LieRankBoundReport bound = lie_rank_bound_report(std::max(1, gl_n - 1), gl_q);
      std::cout << "law " << cert.target.str() << " nominal=" << cert.nominal_length;
      if (cert.reduced_length) std::cout << " reduced=" << *cert.reduced_length;
      std::cout << " outcome=" << (cert.verified ? "verified" : "counterexample") << "\n";
      std::cout << "rank-bound 48*q^(155r): ~1e" << static_cast<long long>(bound.general_log10)
                << "; pgl closed form: " << bound.pgl_bound << "\n";
      emit_certificate(cert, gl_out);
      return certificate_exit(cert, opts.mode.kind != VerifyModeSpec::Kind::none);
    }

    if (verify_cmd->parsed()) {
      std::ifstream in(verify_law_path);
      if (!in) throw error("cannot read " + verify_law_path);
      nlohmann::json j = nlohmann::json::parse(in);
      LawCertificate cert = LawCertificate::from_json(j);
      GroupSpec group = verify_group.empty() ? cert.target : GroupSpec::parse(verify_group);
      VerifyModeSpec mode = VerifyModeSpec::parse(verify_mode);
      if (mode.kind == VerifyModeSpec::Kind::sampled) std::cout << "seed: " << mode.seed << "\n";
      VerificationReport report =
          verify_law(cert.law, group, mode, cert.method == Method::random_, jobs);
      std::cout << "verify " << group.str() << " mode=" << mode.str() << " pairs="
                << report.pairs_checked << " outcome="
                << (report.verified ? "verified" : "counterexample") << "\n";
      if (!report.verified && report.counterexample) {
        std::cout << "counterexample: " << report.counterexample->display << "\n";
        return 2;
      }
      return 0;
    }

    if (div_cmd->parsed()) {
      Word word = parse_word(div_word, 2);
      if (div_oracle == "law" || div_oracle == "both") {
        DivisibilityResult r = d_f2_law_oracle(word, div_max_n);
        std::cout << r.value_str() << "\n";
        if (r.witness)
          std::cout << "witness: degree " << r.witness->degree << ", pair "
                    << to_cycle_string(r.witness->sigma) << ", " << to_cycle_string(r.witness->tau)
                    << ", moved point " << r.witness->moved_point << "\n";
        if (div_oracle == "both") {
          DivisibilityResult s = d_f2_subgroup_oracle(word, std::min(div_max_n, 6));
          std::cout << "subgroup oracle: " << s.value_str() << "\n";
        }
      } else if (div_oracle == "subgroup") {
        DivisibilityResult s = d_f2_subgroup_oracle(word, div_max_n);
        std::cout << s.value_str() << "\n";
      } else {
        throw parse_error("unknown oracle: " + div_oracle);
      }
      return 0;
    }

    if (profile_cmd->parsed()) {
      std::vector<ProfileRow> rows = d_f2_profile(profile_len, profile_max_n);
      CsvWriter csv({"length", "d_exact_length", "d_cumulative", "extremal_word"});
      for (const ProfileRow& row : rows)
        csv.add_row({std::to_string(row.length), opt_str(row.value, profile_max_n),
                     opt_str(row.cumulative, profile_max_n), to_string(row.extremal)});
      if (profile_out.empty())
        std::cout << csv.str();
      else
        csv.write_file(profile_out);
      return 0;
    }

    if (cheby_cmd->parsed()) {
      double theta = chebyshev_theta(cheby_x);
      double psi = chebyshev_psi(cheby_x);
      std::cout << "theta(" << cheby_x << ") = " << theta << "  theta/x = " << theta / cheby_x
                << "\n";
      std::cout << "psi(" << cheby_x << ")   = " << psi << "  psi/x   = " << psi / cheby_x << "\n";
      if (!cheby_out.empty()) {
        CsvWriter csv({"x", "theta", "psi", "theta_over_x", "psi_over_x"});
        for (int i = 1; i <= cheby_points; ++i) {
          double x = cheby_x * static_cast<double>(i) / cheby_points;
          double th = chebyshev_theta(x);
          double ps = chebyshev_psi(x);
          csv.add_row({std::to_string(x), std::to_string(th), std::to_string(ps),
                       std::to_string(th / x), std::to_string(ps / x)});
        }
        csv.write_file(cheby_out);
      }
      return 0;
    }

    if (cayley_cmd->parsed()) {
      std::vector<Perm> gens = parse_gens(cayley_gens, cayley_degree);
      CayleyGraph graph = build_cayley(gens, cayley_cap);
      int diam = diameter(graph);
      std::uint64_t bound = mixing_bound(graph.s_size(), static_cast<std::uint64_t>(diam),
                                         graph.order());
      std::cout << "order=" << graph.order() << " |S|=" << graph.s_size() << " diameter=" << diam
                << " mixing_bound=" << bound << "\n";
      try {
        GapReport gap = check_gap_inequality(graph);
        std::cout << "gap=" << gap.gap << " bound=" << gap.bound
                  << " holds=" << (gap.holds ? "yes" : "no") << "\n";
      } catch (const scale_error& e) {
        std::cout << "gap: skipped (" << e.what() << ")\n";
      }
      std::vector<std::uint32_t> target;
      if (cayley_target.rfind("k:", 0) == 0) {
        int k = std::stoi(cayley_target.substr(2));
        for (std::uint32_t i = 0; i < graph.order(); ++i)
          if (is_k_cycle(graph.elements[i], k)) target.push_back(i);
      } else if (cayley_target != "none") {
        throw parse_error("unknown target: " + cayley_target);
      }
      std::uint64_t steps = cayley_steps ? cayley_steps : bound;
      auto rows = walk_trace(lazy_walk(graph), steps, target);
      std::cout << "walk: steps=" << steps << " tv=" << rows.back().tv_to_uniform
                << " target_mass=" << rows.back().target_mass << "\n";
      if (!cayley_out.empty()) {
        CsvWriter csv({"step", "tv_to_uniform", "target_mass"});
        for (const auto& row : rows)
          csv.add_row({std::to_string(row.step), std::to_string(row.tv_to_uniform),
                       std::to_string(row.target_mass)});
        csv.write_file(cayley_out);
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      std::vector<Perm> gens = parse_gens(classify_gens, classify_degree);
      SubgroupReport report = classify(gens, classify_cap, classify_max_degree);
      std::cout << "label=" << to_string(report.label) << " degree=" << report.degree;
      if (report.order) std::cout << " order=" << *report.order;
      std::cout << " orbits=" << report.orbit_partition.size();
      if (report.blocks) {
        std::cout << " blocks=";
        for (std::size_t i = 0; i < report.blocks->size(); ++i) {
          if (i) std::cout << '|';
          const auto& block = (*report.blocks)[i];
          for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) std::cout << ' ';
            std::cout << block[j];
          }
        }
      }
      std::cout << "\n";
      return 0;
    }

    if (alpha_cmd->parsed()) {
      RandomSearchConfig cfg;
      cfg.seed = alpha_seed;
      std::cout << "seed: " << cfg.seed << "\n";
      std::vector<AlphaRow> rows = alpha_table(alpha_n, cfg, jobs);
      CsvWriter csv({"n", "method", "nominal", "reduced", "verify_mode", "verified"});
      for (const AlphaRow& row : rows)
        csv.add_row({std::to_string(row.n), to_string(row.method), std::to_string(row.nominal),
                     row.reduced ? std::to_string(*row.reduced) : "",
                     row.mode, row.verified ? "true" : "false"});
      if (alpha_out.empty())
        std::cout << csv.str();
      else
        csv.write_file(alpha_out);
      for (const AlphaRow& row : rows)
        if (!row.verified) return 2;
      return 0;
    }

    if (ineq_cmd->parsed()) {
      ExponentIneqReport report = check_exponent_inequality(ineq_lo, ineq_hi);
      std::cout << "m in [" << report.m_lo << ", " << report.m_hi << "]: "
                << report.violations.size() << " violations over " << report.triples_checked
                << " admissible triples\n";
      if (report.max_violating_m)
        std::cout << "largest violating m: " << *report.max_violating_m << "\n";
      else
        std::cout << "no violating m in range (empirical threshold below " << report.m_lo << ")\n";
      for (std::size_t i = 0; i < report.violations.size() && i < 20; ++i)
        std::cout << "violation: m=" << report.violations[i].m << " i=" << report.violations[i].i
                  << " j=" << report.violations[i].j << "\n";
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const scale_error& e) {
    std::cerr << "scale error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
