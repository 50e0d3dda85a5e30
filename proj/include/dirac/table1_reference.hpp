#pragma once

#include <array>

namespace dirac {

/// Published screened-Coulomb reference values, binding energies E - mc^2
/// in keV. The source table prints no units; keV binding is inferred from the
/// magnitudes (Z = 80 pure-Coulomb 1s binding is about 96 keV) and reproduces
/// every envelope entry to the printed precision with alpha = 1/137.036 and
/// mc^2 = 510.999 keV.
struct Table1Row {
    int Z;
    double bound_1s;   // envelope upper bound, 1s_1/2
    double numeric_1s; // accurate eigenvalue, 1s_1/2
    double bound_2p;   // envelope upper bound, 2p_3/2
    double numeric_2p; // accurate eigenvalue, 2p_3/2
};

inline constexpr std::array<Table1Row, 7> table1_reference{{
    {20, -4.2571, -4.3157, -0.48522, -0.53361},
    {30, -10.2099, -10.2960, -1.3811, -1.4659},
    {40, -18.9615, -19.0732, -2.8232, -2.9448},
    {50, -30.7186, -30.8543, -4.8486, -5.0070},
    {60, -45.7601, -45.9189, -7.4879, -7.6825},
    {70, -64.4734, -64.6545, -10.7692, -10.9997},
    {80, -87.4118, -87.6148, -14.7216, -14.9877},
}};

} // namespace dirac
