#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypat {

// Dispatches one subcommand (density, degeneracy, at, balanced-at,
// theorem-main, span-route, color, paint, onetwothree, search) and prints a
// deterministic report; --out adds a JSON sidecar mirroring it. Exit statuses:
// 0 success, 2 usage or input problems, 3 exceeded budgets, 70 internal
// assertion failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypat
