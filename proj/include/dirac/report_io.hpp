#pragma once

#include "dirac/comparison.hpp"
#include "dirac/envelope.hpp"
#include "dirac/radial_solver.hpp"
#include "dirac/table.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace dirac {

enum class OutputFormat { csv, json, pretty };

OutputFormat parse_format(std::string_view name);
EnergyUnits parse_units(std::string_view name);
std::string_view units_name(EnergyUnits units) noexcept;

/// %.<digits>g in the C locale ('.' decimal point, no grouping).
std::string format_number(double value, int significant_digits = 6);

struct OutputSettings {
    OutputFormat format = OutputFormat::pretty;
    EnergyUnits units = EnergyUnits::kev_binding;
    PhysicalConstants constants;
    int digits = 6;
};

std::string_view quantity_name(Quantity q) noexcept;

nlohmann::json table_to_json(TableResult const& table, std::vector<CellDeviation> const& diff,
                             OutputSettings const& out);
nlohmann::json bound_to_json(EnvelopeBound const& bound, int Z, OutputSettings const& out);
nlohmann::json solution_to_json(RadialSolution const& sol, std::string const& potential, OutputSettings const& out);
nlohmann::json comparison_to_json(ComparisonReport const& rep);

/// Wide table: one row per Z, columns EU_<state>,E_<state> per channel.
void write_table(std::ostream& os, TableResult const& table, std::vector<CellDeviation> const& diff,
                 OutputSettings const& out);

/// Long form: Z,state,quantity,computed_keV,reference_keV,deviation_keV.
void write_diff_csv(std::ostream& os, std::vector<CellDeviation> const& diff);

void write_bound(std::ostream& os, EnvelopeBound const& bound, int Z, OutputSettings const& out);
void write_solution(std::ostream& os, RadialSolution const& sol, std::string const& potential,
                    OutputSettings const& out);
void write_comparison(std::ostream& os, ComparisonReport const& rep, OutputSettings const& out);

} // namespace dirac
