#include "laws/certificate.hpp"

#include <sstream>

namespace laws {

namespace {

long parse_number(const std::string& field, const char* what) {
  try {
    std::size_t used = 0;
    long value = std::stol(field, &used);
    if (used != field.size()) throw parse_error(std::string("invalid ") + what + ": " + field);
    return value;
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error(std::string("invalid ") + what + ": " + field);
  }
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  std::istringstream is(text);
  std::string kind;
  std::getline(is, kind, ':');
  GroupSpec spec;
  if (kind == "sym")
    spec.kind = Kind::sym;
  else if (kind == "alt")
    spec.kind = Kind::alt;
  else if (kind == "gl")
    spec.kind = Kind::gl;
  else if (kind == "pgl")
    spec.kind = Kind::pgl;
  else
    throw parse_error("unknown group kind: " + kind);
  std::string field;
  if (!std::getline(is, field, ':')) throw parse_error("group spec needs a degree");
  spec.n = static_cast<int>(parse_number(field, "degree"));
  if (spec.kind == Kind::gl || spec.kind == Kind::pgl) {
    if (!std::getline(is, field, ':')) throw parse_error("matrix group spec needs a field size");
    spec.q = static_cast<std::uint32_t>(parse_number(field, "field size"));
  } else if (std::getline(is, field, ':')) {
    throw parse_error("unexpected trailing field in group spec");
  }
  if (spec.n < 1) throw parse_error("group degree must be positive");
  return spec;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::sym: os << "sym:" << n; break;
    case Kind::alt: os << "alt:" << n; break;
    case Kind::gl: os << "gl:" << n << ':' << q; break;
    case Kind::pgl: os << "pgl:" << n << ':' << q; break;
  }
  return os.str();
}

std::string to_string(Method m) {
  switch (m) {
    case Method::landau: return "landau";
    case Method::random_: return "random";
    case Method::recursive: return "recursive";
    case Method::order: return "order";
    case Method::lie: return "lie";
  }
  return "landau";
}

Method method_from_string(const std::string& s) {
  if (s == "landau") return Method::landau;
  if (s == "random") return Method::random_;
  if (s == "recursive") return Method::recursive;
  if (s == "order") return Method::order;
  if (s == "lie") return Method::lie;
  throw parse_error("unknown method: " + s);
}

std::string VerifyModeSpec::str() const {
  switch (kind) {
    case Kind::exhaustive: return "exhaustive";
    case Kind::class_reduced: return "class_reduced";
    case Kind::none: return "none";
    case Kind::sampled:
      return "sampled:" + std::to_string(seed) + ":" + std::to_string(trials);
  }
  return "exhaustive";
}

VerifyModeSpec VerifyModeSpec::parse(const std::string& text) {
  VerifyModeSpec mode;
  if (text == "exhaustive") {
    mode.kind = Kind::exhaustive;
  } else if (text == "class_reduced" || text == "classes") {
    mode.kind = Kind::class_reduced;
  } else if (text == "none") {
    mode.kind = Kind::none;
  } else if (text.rfind("sampled", 0) == 0) {
    mode.kind = Kind::sampled;
    std::istringstream is(text);
    std::string field;
    std::getline(is, field, ':');
    if (std::getline(is, field, ':'))
      mode.seed = static_cast<std::uint64_t>(parse_number(field, "seed"));
    if (std::getline(is, field, ':'))
      mode.trials = static_cast<std::uint64_t>(parse_number(field, "trial count"));
    if (mode.trials == 0) mode.trials = 1000;
  } else {
    throw parse_error("unknown verification mode: " + text);
  }
  return mode;
}

nlohmann::ordered_json LawCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["law"] = expr_to_json(law);
  j["group"] = target.str();
  j["method"] = to_string(method);
  j["mode"] = mode.str();
  if (verified) {
    j["outcome"] = "verified";
  } else if (!counterexample) {
    j["outcome"] = "unverified";  // mode none: no verification ran
  } else {
    nlohmann::ordered_json c;
    c["first"] = counterexample->first;
    c["second"] = counterexample->second;
    c["display"] = counterexample->display;
    j["outcome"] = nlohmann::ordered_json{{"counterexample", std::move(c)}};
  }
  j["nominal_length"] = nominal_length;
  if (reduced_length)
    j["reduced_length"] = *reduced_length;
  else
    j["reduced_length"] = nullptr;
  j["seed"] = seed;
  return j;
}

LawCertificate LawCertificate::from_json(const nlohmann::json& j) {
  LawCertificate cert;
  cert.law = expr_from_json(j.at("law"));
  cert.target = GroupSpec::parse(j.at("group").get<std::string>());
  cert.method = method_from_string(j.at("method").get<std::string>());
  cert.mode = VerifyModeSpec::parse(j.at("mode").get<std::string>());
  const auto& outcome = j.at("outcome");
  if (outcome.is_string() && outcome.get<std::string>() == "verified") {
    cert.verified = true;
  } else if (outcome.is_string() && outcome.get<std::string>() == "unverified") {
    cert.verified = false;
  } else {
    cert.verified = false;
    Counterexample ce;
    const auto& c = outcome.at("counterexample");
    ce.first = c.at("first");
    ce.second = c.at("second");
    ce.display = c.at("display").get<std::string>();
    cert.counterexample = std::move(ce);
  }
  cert.nominal_length = j.at("nominal_length").get<std::uint64_t>();
  if (!j.at("reduced_length").is_null())
    cert.reduced_length = j.at("reduced_length").get<std::uint64_t>();
  cert.seed = j.at("seed").get<std::uint64_t>();
  return cert;
}

}  // namespace laws
