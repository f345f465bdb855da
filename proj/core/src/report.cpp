#include "dilator/report.hpp"

#include <cstdint>

#include "dilator/version.hpp"

namespace dilator {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::certificate: return "certificate";
    case CheckStatus::witness: return "witness";
  }
  return "unknown";
}

bool VerificationReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

void VerificationReport::add_pass(std::string name, Json params) {
  checks.push_back({std::move(name), std::move(params), CheckStatus::pass, nullptr});
}

void VerificationReport::add_fail(std::string name, Json params, Json witness) {
  checks.push_back({std::move(name), std::move(params), CheckStatus::fail, std::move(witness)});
}

void VerificationReport::add_certificate(std::string name, Json params, Json data) {
  checks.push_back({std::move(name), std::move(params), CheckStatus::certificate, std::move(data)});
}

void VerificationReport::add_witness(std::string name, Json params, Json witness) {
  checks.push_back({std::move(name), std::move(params), CheckStatus::witness, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Json VerificationReport::to_json() const {
  Json out;
  out["tool_version"] = tool_version.empty() ? std::string(kToolVersion) : tool_version;
  out["input_digest"] = input_digest;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json entry;
    entry["check"] = c.name;
    if (!c.params.is_null()) entry["params"] = c.params;
    entry["status"] = to_string(c.status);
    if (!c.details.is_null()) {
      entry[c.status == CheckStatus::fail || c.status == CheckStatus::witness ? "witness"
                                                                              : "details"] =
          c.details;
    }
    list.push_back(std::move(entry));
  }
  out["checks"] = std::move(list);
  return out;
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char byte : data) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a:") + buf;
}

}  // namespace dilator
