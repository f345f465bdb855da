#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dilator {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, certificate, witness };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  Json params;
  CheckStatus status = CheckStatus::pass;
  Json details;  // failure witness or certificate data; null when absent

  /// A run is clean when everything passed or certified; a produced witness
  /// (e.g. a non-faithfulness element) counts against cleanliness.
  bool ok() const { return status == CheckStatus::pass || status == CheckStatus::certificate; }
};

/// Machine-readable outcome of one verification suite. Reports are
/// deterministic for fixed inputs and bounds: the enumeration order of every
/// suite is fixed, and serialization preserves insertion order.
struct VerificationReport {
  std::string tool_version;
  std::string input_digest;
  std::vector<CheckResult> checks;

  bool all_ok() const;

  void add_pass(std::string name, Json params = nullptr);
  void add_fail(std::string name, Json params, Json witness);
  void add_certificate(std::string name, Json params, Json data = nullptr);
  void add_witness(std::string name, Json params, Json witness);
  void merge(const VerificationReport& other);

  Json to_json() const;
};

/// FNV-1a 64-bit digest, formatted "fnv1a:<16 hex digits>"; used to pin the
/// input a report refers to.
std::string fnv1a_digest(const std::string& data);

}  // namespace dilator
