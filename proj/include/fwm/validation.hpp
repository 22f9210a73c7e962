#ifndef FWM_VALIDATION_HPP
#define FWM_VALIDATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fwm/params.hpp"

namespace fwm {

struct CriterionResult {
    int id = 0;
    std::string name;
    std::string detail; // claim vs computed value vs tolerance
    bool pass = false;
    double seconds = 0.0;
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    bool all_pass() const;
};

struct SuiteOptions {
    int workers = 0;
    // Overrides for the degradation test; <= 0 keeps the suite defaults.
    double rel_tol = 0.0;
    double abs_tol = 0.0;
    // Restrict to a subset of criterion ids (empty = all).
    std::vector<int> only;
};

/// Runs every acceptance criterion and returns the table. Pass/fail only;
/// never throws on a physics failure.
ValidationReport run_validation_suite(const SuiteOptions& opt = {});

void print_report(const ValidationReport& report, std::ostream& out);

} // namespace fwm

#endif
