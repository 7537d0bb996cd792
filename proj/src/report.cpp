#include "cqg/report.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "cqg/builders.hpp"

namespace cqg {

void Report::add(const CheckResult& r) { add(r.name, r.passed, r.residual, r.witness); }

void Report::add(const Residual& r) { add(r.name, r.passed, r.residual); }

void Report::add(const std::string& name, bool passed, Json residual, std::string witness) {
  checks.push_back({name, passed, std::move(residual), std::move(witness)});
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(j);
  }
  return Json{{"command", r.command}, {"version", r.version}, {"input_digest", r.input_digest},
              {"passed", r.passed()}, {"checks", checks},          {"details", r.details}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("residual"),
                        c.value("witness", std::string())});
  r.details = j.value("details", Json::object());
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "cqg " << r.version << " " << r.command;
  if (!r.input_digest.empty()) os << "  input " << r.input_digest;
  os << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
    os << "  residual " << (c.residual.is_string() ? c.residual.get<std::string>() : c.residual.dump());
    if (!c.witness.empty()) os << "  witness " << c.witness;
    os << "\n";
  }
  if (!r.details.empty()) os << "  details " << r.details.dump() << "\n";
  os << (r.passed() ? "PASS" : "FAIL") << "  (" << r.wall_time << " s)\n";
  return os.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CoalgebraData to_backend(const CoalgebraData& d, Backend b) {
  CoalgebraData out = d;
  out.backend = b;
  for (auto& row : out.delta)
    for (auto& t : row) t.c = t.c.to_backend(b);
  for (auto& e : out.eps) e = e.to_backend(b);
  if (out.circ) out.circ = out.circ->to_backend(b);
  return out;
}

HopfData to_backend(const HopfData& h, Backend b) {
  HopfData out = h;
  out.coalgebra = to_backend(h.coalgebra, b);
  for (auto& row : out.mult)
    for (auto& cell : row)
      for (auto& t : cell) t.c = t.c.to_backend(b);
  out.unit = h.unit.to_backend(b);
  out.antipode = h.antipode.to_backend(b);
  return out;
}

bool is_hopf_json(const Json& j) { return j.is_object() && j.contains("mult"); }

std::vector<std::pair<std::string, Json>> corpus() {
  std::vector<std::pair<std::string, Json>> out;
  for (const auto& g : shipped_groups()) {
    std::string tag = g.name;
    out.emplace_back("group_" + tag + ".json", to_json(group_algebra(g)));
    out.emplace_back("fun_" + tag + ".json", to_json(function_algebra(g)));
  }
  out.emplace_back("sweedler_H4.json", to_json(sweedler_h4()));
  for (std::size_t n = 1; n <= 4; ++n)
    out.emplace_back("matrix_" + std::to_string(n) + ".json", to_json(matrix_coalgebra(n).data()));
  return out;
}

Json to_json(const sumu::VerifyResult& r) {
  Json j{{"identity", r.identity}, {"degree", r.degree}, {"passed", r.passed}, {"checked", r.checked}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace cqg

namespace cqg {

CheckResult compare(const std::string& name, const Matrix& a, const Matrix& b, double tol) {
  CheckResult r{name, true, 0, ""};
  if (a.is_exact() && b.is_exact() && a.backend() == b.backend()) {
    if (!(a == b)) {
      r.passed = false;
      r.residual = std::max(rel_residual(a, b), 1e-300);
    }
  } else {
    r.residual = rel_residual(a.to_backend(Backend::FloatC), b.to_backend(Backend::FloatC));
    r.passed = r.residual <= tol;
  }
  if (!r.passed) r.witness = "residual above tolerance";
  return r;
}

}  // namespace cqg
