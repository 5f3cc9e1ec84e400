#include "laws/verify.hpp"

#include "laws/lielaw.hpp"
#include "laws/symlaw.hpp"
#include "laws/verify_detail.hpp"

namespace laws {

namespace {

Counterexample perm_ce(const std::pair<Perm, Perm>& pair) {
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

VerificationReport from_sym(const SymVerifyResult& vr) {
  VerificationReport report;
  report.verified = vr.verified;
  report.pairs_checked = vr.pairs_checked;
  if (vr.counterexample) report.counterexample = perm_ce(*vr.counterexample);
  return report;
}

VerificationReport verify_matrix_law(const WordExpr& law, const GroupSpec& spec,
                                     const VerifyModeSpec& mode, int jobs) {
  if (mode.kind != VerifyModeSpec::Kind::exhaustive)
    throw error("matrix targets support exhaustive verification only");
  int s = 0;
  std::uint32_t q = spec.q;
  int p = 2;
  for (int candidate = 2; candidate <= static_cast<int>(q); ++candidate) {
    bool prime = candidate >= 2;
    for (int d = 2; d * d <= candidate; ++d)
      if (candidate % d == 0) prime = false;
    if (!prime) continue;
    std::uint32_t power = 1;
    int exp = 0;
    while (power < q) {
      power *= static_cast<std::uint32_t>(candidate);
      ++exp;
    }
    if (power == q) {
      p = candidate;
      s = exp;
      break;
    }
  }
  if (s == 0) throw error("field size is not a prime power");
  Fq F = Fq::make(p, s);
  VerificationReport report;
  if (spec.kind == GroupSpec::Kind::gl) {
    std::vector<FqMatrix> elements = enumerate_gl(F, spec.n);
    MatCtx ctx{&F, spec.n};
    auto hit = detail::find_counterexample(ctx, law,
                                           std::span<const FqMatrix>(elements.data(), elements.size()),
                                           std::span<const FqMatrix>(elements.data(), elements.size()), jobs);
    report.verified = !hit.has_value();
    report.pairs_checked = static_cast<std::uint64_t>(elements.size()) * elements.size();
    if (hit) {
      Counterexample ce;
      ce.first = matrix_to_json(F, elements[hit->first]);
      ce.second = matrix_to_json(F, elements[hit->second]);
      ce.display = matrix_display(F, elements[hit->first]) + ", " + matrix_display(F, elements[hit->second]);
      report.counterexample = ce;
      report.pairs_checked = static_cast<std::uint64_t>(hit->first) * elements.size() + hit->second + 1;
    }
  } else {
    std::vector<FqMatrix> elements = enumerate_pgl(F, spec.n);
    ProjCtx ctx{&F, spec.n};
    auto hit = detail::find_counterexample(ctx, law,
                                           std::span<const FqMatrix>(elements.data(), elements.size()),
                                           std::span<const FqMatrix>(elements.data(), elements.size()), jobs);
    report.verified = !hit.has_value();
    report.pairs_checked = static_cast<std::uint64_t>(elements.size()) * elements.size();
    if (hit) {
      Counterexample ce;
      ce.first = matrix_to_json(F, elements[hit->first]);
      ce.second = matrix_to_json(F, elements[hit->second]);
      ce.display = matrix_display(F, elements[hit->first]) + ", " + matrix_display(F, elements[hit->second]);
      report.counterexample = ce;
      report.pairs_checked = static_cast<std::uint64_t>(hit->first) * elements.size() + hit->second + 1;
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_law(const WordExpr& law, const GroupSpec& spec, const VerifyModeSpec& mode,
                              bool generating_pair_claim, int jobs) {
  switch (spec.kind) {
    case GroupSpec::Kind::sym:
      if (generating_pair_claim) return from_sym(verify_generating_pairs(law, spec.n, jobs));
      return from_sym(verify_sym(law, spec.n, mode, jobs));
    case GroupSpec::Kind::alt:
      return from_sym(verify_alt(law, spec.n, mode, jobs));
    case GroupSpec::Kind::gl:
    case GroupSpec::Kind::pgl:
      return verify_matrix_law(law, spec, mode, jobs);
  }
  throw error("unreachable group kind");
}

VerificationReport verify_certificate_claim(const LawCertificate& cert, int jobs) {
  VerifyModeSpec mode = cert.mode;
  if (mode.kind == VerifyModeSpec::Kind::none) mode = default_sym_mode(cert.target.n);
  return verify_law(cert.law, cert.target, mode, cert.method == Method::random_, jobs);
}

}  // namespace laws
