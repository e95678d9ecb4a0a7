#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidshear {

/// Entry point of the braidshear command line tool; `args` excludes the
/// program name. Returns the process exit code: 0 success, 1 for `equal`
/// on different invariants or a failed relation, 2 usage or parse error,
/// 3 degenerate motion after all retries, 4 internal invariant violation.
/// Errors are written to `err` as one JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidshear
