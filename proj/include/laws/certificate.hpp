#ifndef LAWS_CERTIFICATE_HPP
#define LAWS_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "laws/expr.hpp"

namespace laws {

// Verification target: sym:N | alt:N | gl:N:Q | pgl:N:Q.
struct GroupSpec {
  enum class Kind { sym, alt, gl, pgl } kind = Kind::sym;
  int n = 0;
  std::uint32_t q = 0;  // gl/pgl only

  static GroupSpec parse(const std::string& text);
  std::string str() const;
  bool operator==(const GroupSpec&) const = default;
};

enum class Method { landau, random_, recursive, order, lie };
std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct VerifyModeSpec {
  enum class Kind { exhaustive, class_reduced, sampled, none } kind = Kind::exhaustive;
  std::uint64_t seed = 0;      // sampled
  std::uint64_t trials = 0;    // sampled

  std::string str() const;
  static VerifyModeSpec parse(const std::string& text);
};

// A counterexample is the pair of group elements on which the law fails,
// kept in serialized form so certificates stay group-agnostic.
struct Counterexample {
  nlohmann::ordered_json first;
  nlohmann::ordered_json second;
  std::string display;  // human-readable pair
};

// A stored, re-checkable record of a law, its target group, and the
// verification performed.  method == random certifies the generating-pair
// claim (the word kills every pair generating Sym(k) or Alt(k), k <= n)
// rather than a full law for the target; every other method certifies a law
// on the whole target group.
struct LawCertificate {
  WordExpr law;
  GroupSpec target;
  Method method = Method::landau;
  VerifyModeSpec mode;
  bool verified = false;
  std::optional<Counterexample> counterexample;
  std::uint64_t nominal_length = 0;
  std::optional<std::uint64_t> reduced_length;  // absent when flattening was skipped
  std::uint64_t seed = 0;

  nlohmann::ordered_json to_json() const;
  static LawCertificate from_json(const nlohmann::json& j);
};

}  // namespace laws

#endif
