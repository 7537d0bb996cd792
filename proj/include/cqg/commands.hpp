#pragma once

// The verification suites behind the command-line tool and the Python module.
// Inputs are parsed JSON documents; the report digest is left to the caller.

#include "cqg/report.hpp"

namespace cqg {

/// Malformed input: not a structure file, or missing fields.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Report run_check(const Json& j, Backend b);
Report run_decompose(const Json& j, Backend b, unsigned seed);
Report run_compact(const Json& j, Backend b);
Report run_antipode(const Json& j, Backend b, double tol);
/// identity is a catalog name or "all"; rewriting adds the confluence and
/// termination sweeps.
Report run_sumu(int sign, int degree, const std::string& identity, bool rewriting, unsigned seed);

}  // namespace cqg
