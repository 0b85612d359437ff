#pragma once

#include <string>
#include <vector>

namespace qshutter {

struct check_row {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct verify_report {
    std::vector<check_row> rows;
    double seconds = 0.0;
    bool full = false;
    bool all_pass() const;
};

// quick: single-shot damped oracles; full: eps-extrapolated oracles and the
// large random samples
verify_report run_verify(bool full);

std::string format_report(const verify_report& r);

} // namespace qshutter
