#pragma once

// The abelian3 command-line front end as a library, so tests can drive it
// in-process and capture its output.

#include <iosfwd>
#include <string>
#include <vector>

#include "abelian3/rank3.hpp"

namespace abelian3::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

// Test seams. `params` replaces derived_params inside `verify`.
struct Hooks {
  ParamsFn params = &derived_params;
};

// Bytes of peak memory per sieved integer in `asymptotic`.
inline constexpr u64 kSieveBytesPerEntry = 41;

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Hooks& hooks = {});

// Reads ABELIAN3_ELEMENT_BOUND, falling back to kDefaultElementBound.
// Throws std::invalid_argument for a malformed or zero value.
u64 element_bound_from_env();

}  // namespace abelian3::cli
