#pragma once

#include <cstdint>
#include <iosfwd>

#include "twc/instance_io.hpp"

namespace twc {

struct VerifyOptions {
  std::uint64_t seed = 1;
  long long budget = 2'000'000;
  int max_n = 12;
};

// Oracle sweeps over one instance; each prints per-check lines and returns
// whether every check passed. Class or size violations raise SolverError.
bool verify_sep_containers(const Instance& inst, const VerifyOptions& opts, std::ostream& out);
bool verify_pmc_containers(const Instance& inst, const VerifyOptions& opts, std::ostream& out);
bool verify_dp(const Instance& inst, const VerifyOptions& opts, std::ostream& out);

}  // namespace twc
