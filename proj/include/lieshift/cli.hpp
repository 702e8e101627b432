#pragma once

// Command dispatch for the `lieshift` executable.
//
// Report JSON (with --json):
//   {
//     "command": "index",
//     "input": {"source": "preset:sl2", "digest": "<fnv1a of algebra and options>"},
//     "seed": 2020,
//     "version": "1.0.0",
//     "status": "ok" | "verification-failure" | "input-error",
//     "results": {...},                 certified quantities carry value/method/seed/witness
//     "error": "...",                   only on failure
//     "timing": {"seconds": 0.01}       only with --timing
//   }
// Exit codes: 0 ok, 1 verification failure, 2 input error.

#include <lieshift/invariants.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace lieshift {

inline constexpr const char* kVersion = "1.0.0";

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The sl2 x h3 pipeline: invariants of U(q) under h, the degree-3 invariant
/// H2, the two commutative subalgebras, the maximality probe and the
/// orchestrator, each compared against the expected outcome.
std::vector<ExampleCheck> worked_example_checks(const SamplingOptions& opts = {});

}  // namespace lieshift
