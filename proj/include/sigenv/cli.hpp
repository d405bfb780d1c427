#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigenv {

// Entry point behind the sigenv binary, callable in-process for tests.
// args excludes the program name. Exit codes: 0 success, 1 usage,
// 2 ingest failure, 3 degenerate signal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sigenv
