#ifndef REVIVAL_CHECKS_HPP
#define REVIVAL_CHECKS_HPP

#include <string>
#include <vector>

namespace revival {

// One verification criterion.  measured is the worst observed quantity
// normalised by its bound (pass iff measured <= tolerance_scale); detail
// records the raw numbers and conventions behind the normalisation.
struct CheckResult {
    std::string name;
    bool pass;
    double measured;
    double bound;
    std::string detail;
};

// Runs criteria 1..11 in order (11 summarises runtime and the conjunction of
// the others).  tolerance_scale multiplies every bound; the default 1.0 is
// the contract, larger values are a test hook for exercising the exit paths.
std::vector<CheckResult> run_verification_suite(double tolerance_scale = 1.0);

}  // namespace revival

#endif
