#include "fwm/state.hpp"

#include <algorithm>
#include <sstream>

namespace fwm {

double population_excursion(const HybridState& s) {
    double worst = 0.0;
    for (std::size_t k = 0; k < s.emitter_count; ++k) {
        const double ree = s.emitters[k].rho_ee;
        worst = std::max({worst, -ree, ree - 1.0});
    }
    return worst;
}

double positivity_defect(const HybridState& s) {
    double worst = 0.0;
    for (std::size_t k = 0; k < s.emitter_count; ++k) {
        const double ree = s.emitters[k].rho_ee;
        const double defect = std::norm(s.emitters[k].rho_ge) - ree * (1.0 - ree);
        worst = std::max(worst, defect);
    }
    return worst;
}

void check_state(const HybridState& s, double tol) {
    const double pop = population_excursion(s);
    if (pop > tol) {
        std::ostringstream msg;
        msg << "rho_ee outside [0,1] by " << pop;
        throw InvariantViolation(msg.str());
    }
    const double defect = positivity_defect(s);
    if (defect > tol) {
        std::ostringstream msg;
        msg << "|rho_ge|^2 exceeds rho_ee(1-rho_ee) by " << defect;
        throw InvariantViolation(msg.str());
    }
}

} // namespace fwm
