#pragma once

#include <string>
#include <vector>

namespace subfn::verify {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

enum class Suite { fast, full };

/// Run the acceptance checks. `fast` skips the alpha = 0.3 / 0.7 contour
/// sweeps; `full` runs everything.
std::vector<CheckResult> run_acceptance(Suite suite);

/// One line per check: "PASS  name  measured=...  tol=...".
void print_table(std::ostream& os, const std::vector<CheckResult>& results);

/// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace subfn::verify
