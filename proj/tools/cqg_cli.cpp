#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "cqg/commands.hpp"

using namespace cqg;

namespace {

struct Input {
  std::string digest;
  Json j;
};

Input load(const std::string& file) {
  Input in;
  std::string bytes;
  try {
    bytes = read_file(file);
    in.j = Json::parse(bytes);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  in.digest = fnv1a_hex(bytes);
  return in;
}

int export_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, j] : corpus()) {
    std::ofstream out(std::filesystem::path(dir) / name);
    out << j.dump(1) << "\n";
    if (!out) throw InputError("cannot write " + name);
    std::cout << name << "\n";
  }
  return 0;
}

int emit(const Report& r, bool json) {
  if (json) std::cout << to_json(r).dump(2) << "\n";
  else std::cout << to_text(r);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact quantum group toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CQG_VERSION));
  std::string file, backend = "exact";
  double tol = 1e-8;
  bool json = false;
  unsigned seed = 1;
  app.add_option("--tolerance", tol, "residual tolerance for float comparisons")->check(CLI::PositiveNumber);
  app.add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_flag("--json", json, "JSON report on stdout");
  app.add_option("--seed", seed, "seed for randomized steps");

  const std::vector<std::pair<std::string, std::string>> file_cmds{
      {"check", "validate coalgebra, involution and Hopf axioms"},
      {"decompose", "simple components and their circ-stability"},
      {"compact", "integral, Gram spectrum and compactness verdict"},
      {"antipode", "positive antipode, Nakayama, beta, batteries, Radford"}};
  for (const auto& [name, help] : file_cmds)
    app.add_subcommand(name, help)->add_option("file", file, "structure-constant JSON file")->required();

  auto* su = app.add_subcommand("sumu", "exact SU_mu(2) identity sweep");
  std::string sign = "+", identity = "all";
  int degree = 6;
  bool rewriting = false;
  su->add_option("--sign", sign, "sign of mu")->check(CLI::IsMember({"+", "-"}));
  su->add_option("--degree", degree, "maximal degree")->check(CLI::PositiveNumber);
  su->add_option("--identity", identity, "identity name or all");
  su->add_flag("--rewriting", rewriting, "also run the confluence and termination sweeps");

  auto* ex = app.add_subcommand("export", "write the shipped corpus as JSON files");
  std::string out_dir = "data";
  ex->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Tolerance t = tolerance();
  t.residual = tol;
  set_tolerance(t);
  const Backend b = backend == "float" ? Backend::FloatC : Backend::GaussQ;

  try {
    if (*ex) return export_corpus(out_dir);
    auto start = std::chrono::steady_clock::now();
    Report r;
    if (*su) {
      r = run_sumu(sign == "+" ? 1 : -1, degree, identity, rewriting, seed);
    } else {
      Input in = load(file);
      if (app.got_subcommand("check")) r = run_check(in.j, b);
      else if (app.got_subcommand("decompose")) r = run_decompose(in.j, b, seed);
      else if (app.got_subcommand("compact")) r = run_compact(in.j, b);
      else r = run_antipode(in.j, b, tol);
      r.input_digest = in.digest;
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(r, json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const AxiomError& e) {
    Report r;
    r.command = "axioms";
    r.add(e.result());
    emit(r, json);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
