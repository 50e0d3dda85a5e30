#pragma once

#include "dirac/channel.hpp"
#include "dirac/envelope.hpp"
#include "dirac/radial_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirac {

/// Envelope bound and accurate eigenvalue for one (Z, channel) pair, mc^2 units.
struct TableCell {
    int Z;
    Channel ch;
    std::optional<double> E_upper;
    std::optional<double> E_numeric;
    std::string error; // empty unless a computation failed
};

struct TableConfig {
    std::vector<int> Z{20, 30, 40, 50, 60, 70, 80};
    std::vector<Channel> channels{Channel(-1, 1, 1), Channel(-1, 3, 1)};
    PhysicalConstants constants;
    SolverOptions solver;
    bool compute_numeric = true;
};

struct TableResult {
    std::vector<TableCell> cells; // Z-major, channel order as configured
    bool ok() const noexcept;
};

/// Cells run concurrently; the result is assembled in configuration order.
TableResult compute_table(TableConfig const& cfg);

enum class Quantity { upper_bound, numeric };

struct CellDeviation {
    int Z;
    Channel ch;
    Quantity quantity;
    double computed_keV;
    double reference_keV;
    double deviation_keV; // computed - reference
};

/// Deviations from the embedded reference table for every cell that has a
/// reference entry (Z in 20..80 step 10, channels 1s_1/2 and 2p_3/2).
std::vector<CellDeviation> diff_against_reference(TableResult const& table, PhysicalConstants const& constants);

std::optional<double> reference_value(int Z, Channel const& ch, Quantity q);

} // namespace dirac
