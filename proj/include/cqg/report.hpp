#pragma once

// Run reports for the command-line tool, input loading and the data corpus.

#include <filesystem>

#include "cqg/hopf.hpp"
#include "cqg/sumu.hpp"

namespace cqg {

struct ReportCheck {
  std::string name;
  bool passed = true;
  Json residual = 0.0;  // number, or an exact scalar as a string
  std::string witness;
};

struct Report {
  std::string command;
  std::string version = CQG_VERSION;
  std::string input_digest;  // FNV-1a 64 of the input bytes, hex
  std::vector<ReportCheck> checks;
  Json details = Json::object();
  double wall_time = 0;  // seconds; kept out of JSON so reports are reproducible

  void add(const CheckResult& r);
  void add(const Residual& r);
  void add(const std::string& name, bool passed, Json residual = 0.0, std::string witness = {});
  bool passed() const;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string to_text(const Report& r);

std::string fnv1a_hex(const std::string& bytes);

/// Raw file contents; throws std::runtime_error if unreadable.
std::string read_file(const std::filesystem::path& p);

CoalgebraData to_backend(const CoalgebraData& d, Backend b);
HopfData to_backend(const HopfData& h, Backend b);

/// A JSON object describes a Hopf algebra when it carries "mult".
bool is_hopf_json(const Json& j);

/// Shipped corpus: file name -> contents.
std::vector<std::pair<std::string, Json>> corpus();

Json to_json(const sumu::VerifyResult& r);

}  // namespace cqg

namespace cqg {

/// Relative residual of a against b. Exact pairs pass only when equal; mixed or
/// float pairs are compared in FloatC against tol.
CheckResult compare(const std::string& name, const Matrix& a, const Matrix& b, double tol);

}  // namespace cqg
