#pragma once

#include <stdexcept>

namespace spinv {

/// Fine-structure constant and electron rest energy. Defaults are CODATA 2018;
/// both can be overridden (the small-coupling limit tests scale alpha down).
struct PhysicalConstants {
    double alpha = 7.2973525693e-3;
    double rest_energy_ev = 510998.95;

    void validate() const
    {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::invalid_argument("PhysicalConstants: alpha must be in (0,1)");
        }
        if (!(rest_energy_ev > 0.0)) {
            throw std::invalid_argument("PhysicalConstants: rest energy must be positive");
        }
    }
};

enum class Sign : int { minus = -1, plus = +1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

} // namespace spinv
