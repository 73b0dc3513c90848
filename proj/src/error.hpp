#pragma once

#include <stdexcept>
#include <string>

namespace gtpa {

// Error taxonomy shared by the core, the C API and the CLI.
//   argument  caller passed something structurally wrong (bad level, bad name)
//   parse     malformed config / tangle / word text
//   domain    request is well-formed but outside the model (odd parameters,
//             ambient word overflow, non-positive index ratio)
//   check     a verification suite found a counterexample
//   internal  an invariant of the engine itself failed
enum class errc { argument, parse, domain, check, internal };

struct error : std::runtime_error {
  errc kind;
  error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

}  // namespace gtpa
