#include "cqg/commands.hpp"

#include <algorithm>

namespace cqg {

namespace {

CoalgebraData coalgebra_data(const Json& j, Backend b) {
  try {
    CoalgebraData d = is_hopf_json(j) ? hopf_from_json(j).coalgebra : coalgebra_from_json(j);
    return to_backend(d, b);
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
}

HopfData hopf_data(const Json& j, Backend b) {
  if (!is_hopf_json(j)) throw InputError("input is not a Hopf algebra (no \"mult\")");
  try {
    return to_backend(hopf_from_json(j), b);
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
}

Report make_report(std::string command) {
  Report r;
  r.command = std::move(command);
  return r;
}

}  // namespace

Report run_check(const Json& j, Backend b) {
  Report r = make_report("check");
  if (is_hopf_json(j)) {
    for (const auto& c : check_hopf(hopf_data(j, b))) r.add(c);
  } else {
    for (const auto& c : check_coalgebra(coalgebra_data(j, b))) r.add(c);
  }
  return r;
}

Report run_decompose(const Json& j, Backend b, unsigned seed) {
  Report r = make_report("decompose");
  Coalgebra c(coalgebra_data(j, b));
  auto comps = decompose_simple(c, seed);
  std::size_t total = 0;
  Json list = Json::array();
  for (const auto& comp : comps) {
    total += comp.n * comp.n;
    const std::string tag = "component " + std::to_string(comp.index);
    bool sub = c.is_subcoalgebra(comp.basis);
    r.add(tag + " is a subcoalgebra", sub);
    bool stable = true;
    if (c.has_circ()) {
      stable = rank(comp.basis.hcat(c.circ().apply(comp.basis))) == comp.basis.cols();
      r.add(tag + " is circ-stable", stable);
    }
    list.push_back({{"index", comp.index}, {"n", comp.n}, {"dim", comp.n * comp.n}, {"circ_stable", stable}});
  }
  bool adds = total == c.dim();
  r.add("dimensions add up", adds, 0.0, adds ? "" : std::to_string(total) + " != " + std::to_string(c.dim()));
  r.details["components"] = list;
  return r;
}

Report run_compact(const Json& j, Backend b) {
  Report r = make_report("compact");
  HopfAlgebra h(hopf_data(j, b));
  auto v = is_compact(h);
  r.add("compact", v.compact, v.min_eigenvalue, v.reason);
  r.details["verdict"] = v.compact ? "compact" : "not_compact";
  if (!v.reason.empty()) r.details["reason"] = v.reason;
  if (!v.eigenvalues.empty()) {
    r.details["gram_eigenvalues"] = v.eigenvalues;
    r.details["min_eigenvalue"] = v.min_eigenvalue;
  }
  if (v.compact) {
    Json phi = Json::array();
    for (std::size_t k = 0; k < h.dim(); ++k) phi.push_back(to_json(h.integral()(0, k)));
    r.details["integral"] = phi;
  }
  return r;
}

Report run_antipode(const Json& j, Backend b, double tol) {
  Report r = make_report("antipode");
  HopfAlgebra h(hopf_data(j, b));
  auto v = is_compact(h);
  r.add("compact", v.compact, v.min_eigenvalue, v.reason);
  if (!v.compact) return r;
  const Matrix id = Matrix::identity(h.dim(), h.backend());
  const Matrix eps = h.coalgebra().eps_row();
  Nakayama nk = nakayama(h);
  r.add(compare("S+ = id", positive_antipode(h), id, tol));
  r.add(compare("N = id", nk.n, id, tol));
  r.add(compare("alpha = eps", nk.alpha, eps, tol));
  r.add(compare("P = id", nakayama_sqrt(h), id, tol));
  r.add(compare("beta = eps", compute_beta(h), eps, tol));
  r.add(compare("S* = S", antipode_adjoint(h), h.antipode(), tol));
  r.add(compare("U = S", unitary_antipode(h), h.antipode(), tol));
  for (const auto& c : antipode_postconditions(h)) r.add(c);
  for (const auto& c : radford_check(h)) r.add(c);
  Json batteries;
  for (auto [name, bat] : {std::pair{"trivial_antipode", trivial_antipode_report(h)}, std::pair{"additional", additional_report(h)}}) {
    Json flags;
    for (const auto& [k, f] : bat.flags) flags[k] = f;
    batteries[name] = {{"flags", flags}, {"consistent", bat.consistent}, {"all_true", bat.all_true()}};
    r.add(std::string(name) + " battery consistent", bat.consistent);
  }
  r.details["batteries"] = batteries;
  return r;
}

Report run_sumu(int sign, int degree, const std::string& identity, bool rewriting, unsigned seed) {
  const auto& names = sumu::identity_names();
  if (identity != "all" && std::find(names.begin(), names.end(), identity) == names.end())
    throw InputError("unknown identity " + identity);
  Report r = make_report("sumu");
  sumu::Engine e(sign);
  std::vector<sumu::VerifyResult> results;
  if (identity == "all") results = sumu::verify_all(e, degree);
  else results.push_back(sumu::verify(e, identity, degree));
  if (rewriting) {
    results.push_back(sumu::check_confluence(e, 8));
    results.push_back(sumu::check_termination(e, 10000, 12, seed));
  }
  Json list = Json::array();
  for (const auto& v : results) {
    r.add(v.identity, v.passed, 0.0, v.witness);
    list.push_back(to_json(v));
  }
  r.details = {{"mu", sign > 0 ? "+s^2" : "-s^2"}, {"degree", degree}, {"results", list},
               {"note", "|mu| < 1 is assumed but not used: every identity is polynomial in s"}};
  return r;
}

}  // namespace cqg
