#ifndef LAWS_VERIFY_HPP
#define LAWS_VERIFY_HPP

#include <optional>
#include <string>

#include "laws/certificate.hpp"

namespace laws {

struct VerificationReport {
  bool verified = false;
  std::optional<Counterexample> counterexample;
  std::uint64_t pairs_checked = 0;
};

// Runs the verification a certificate claims: full law check for sym/alt/
// gl/pgl targets, generating-pair check for method == random.
VerificationReport verify_certificate_claim(const LawCertificate& cert, int jobs = 1);

// Verifies an arbitrary law expression against a group spec, with the given
// mode (exhaustive | class_reduced | sampled).
VerificationReport verify_law(const WordExpr& law, const GroupSpec& spec, const VerifyModeSpec& mode,
                              bool generating_pair_claim = false, int jobs = 1);

}  // namespace laws

#endif
