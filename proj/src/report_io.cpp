#include "dirac/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace dirac {

namespace {

double max_abs_deviation(std::vector<CellDeviation> const& diff) {
    double worst = 0.0;
    for (auto const& d : diff) {
        worst = std::max(worst, std::abs(d.deviation_keV));
    }
    return worst;
}

// Missing values are FAILED when the cell recorded an error, blank when they were not requested.
std::string cell_text(std::optional<double> const& value, TableCell const& cell, OutputSettings const& out) {
    if (value) {
        return format_number(convert_energy(*value, out.units, out.constants), out.digits);
    }
    return cell.error.empty() ? "" : "FAILED";
}

} // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "pretty") {
        return OutputFormat::pretty;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "' (csv, json, pretty)");
}

EnergyUnits parse_units(std::string_view name) {
    if (name == "mc2") {
        return EnergyUnits::mc2;
    }
    if (name == "keV" || name == "kev" || name == "keV-binding" || name == "kev-binding") {
        return EnergyUnits::kev_binding;
    }
    throw std::invalid_argument("unknown units '" + std::string(name) + "' (mc2, keV-binding)");
}

std::string_view units_name(EnergyUnits units) noexcept {
    return units == EnergyUnits::mc2 ? "mc2" : "keV-binding";
}

std::string format_number(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

std::string_view quantity_name(Quantity q) noexcept {
    return q == Quantity::upper_bound ? "E_upper" : "E";
}

nlohmann::json table_to_json(TableResult const& table, std::vector<CellDeviation> const& diff,
                             OutputSettings const& out) {
    nlohmann::json cells = nlohmann::json::array();
    for (auto const& c : table.cells) {
        nlohmann::json cell{{"Z", c.Z}, {"state", spectroscopic_label(c.ch)}};
        cell["E_upper"] = c.E_upper ? nlohmann::json(convert_energy(*c.E_upper, out.units, out.constants))
                                    : nlohmann::json(nullptr);
        cell["E"] = c.E_numeric ? nlohmann::json(convert_energy(*c.E_numeric, out.units, out.constants))
                                : nlohmann::json(nullptr);
        if (!c.error.empty()) {
            cell["error"] = c.error;
        }
        cells.push_back(std::move(cell));
    }
    nlohmann::json diff_cells = nlohmann::json::array();
    for (auto const& d : diff) {
        diff_cells.push_back({{"Z", d.Z},
                              {"state", spectroscopic_label(d.ch)},
                              {"quantity", quantity_name(d.quantity)},
                              {"computed_keV", d.computed_keV},
                              {"reference_keV", d.reference_keV},
                              {"deviation_keV", d.deviation_keV}});
    }
    return {{"units", units_name(out.units)},
            {"constants", {{"alpha", out.constants.alpha}, {"mc2_keV", out.constants.electron_rest_energy_keV}}},
            {"cells", std::move(cells)},
            {"diff", {{"cells", std::move(diff_cells)}, {"max_abs_deviation_keV", max_abs_deviation(diff)}}},
            {"ok", table.ok()}};
}

nlohmann::json bound_to_json(EnvelopeBound const& bound, int Z, OutputSettings const& out) {
    return {{"Z", Z},
            {"state", spectroscopic_label(bound.ch)},
            {"units", units_name(out.units)},
            {"E_upper", convert_energy(bound.E_upper, out.units, out.constants)},
            {"u_star", bound.u_star},
            {"t_star", bound.t_star},
            {"at_domain_edge", bound.at_domain_edge},
            {"local_minima", bound.local_minima}};
}

nlohmann::json solution_to_json(RadialSolution const& sol, std::string const& potential, OutputSettings const& out) {
    nlohmann::json j{{"potential", potential},
                     {"tau", sol.ch.tau()},
                     {"j", sol.ch.j()},
                     {"n", sol.ch.n()},
                     {"units", units_name(out.units)},
                     {"E", convert_energy(sol.E, out.units, out.constants)},
                     {"nodes1", sol.nodes1},
                     {"nodes2", sol.nodes2},
                     {"norm", sol.norm},
                     {"grid_points", sol.grid.size()}};
    try {
        j["state"] = spectroscopic_label(sol.ch);
    } catch (std::out_of_range const&) {
        j["state"] = nullptr;
    }
    return j;
}

nlohmann::json comparison_to_json(ComparisonReport const& rep) {
    return {{"state", spectroscopic_label(rep.ch)},
            {"potential_a", rep.potential_a},
            {"potential_b", rep.potential_b},
            {"E_a", rep.E_a},
            {"E_b", rep.E_b},
            {"identity", {{"lhs", rep.lhs}, {"rhs", rep.rhs}, {"residual", rep.identity_residual},
                          {"relative_residual", rep.relative_identity_residual}, {"overlap", rep.overlap}}},
            {"derivative_residual", rep.derivative_residual},
            {"min_potential_gap", rep.min_potential_gap},
            {"nodes", rep.nodes},
            {"verdict", verdict_name(rep.verdict)},
            {"note", rep.note}};
}

void write_table(std::ostream& os, TableResult const& table, std::vector<CellDeviation> const& diff,
                 OutputSettings const& out) {
    if (out.format == OutputFormat::json) {
        os << table_to_json(table, diff, out).dump(2) << '\n';
        return;
    }
    // regroup cells by Z preserving order
    std::vector<int> zs;
    std::vector<Channel> channels;
    for (auto const& c : table.cells) {
        if (std::find(zs.begin(), zs.end(), c.Z) == zs.end()) {
            zs.push_back(c.Z);
        }
        if (std::find(channels.begin(), channels.end(), c.ch) == channels.end()) {
            channels.push_back(c.ch);
        }
    }
    auto find = [&](int Z, Channel const& ch) -> TableCell const* {
        for (auto const& c : table.cells) {
            if (c.Z == Z && c.ch == ch) {
                return &c;
            }
        }
        return nullptr;
    };

    if (out.format == OutputFormat::csv) {
        os << "Z";
        for (auto const& ch : channels) {
            auto const label = spectroscopic_label(ch);
            os << ",EU_" << label << ",E_" << label;
        }
        os << '\n';
        for (int Z : zs) {
            os << Z;
            for (auto const& ch : channels) {
                auto const* c = find(Z, ch);
                os << ',' << (c ? cell_text(c->E_upper, *c, out) : "") << ','
                   << (c ? cell_text(c->E_numeric, *c, out) : "");
            }
            os << '\n';
        }
        return;
    }

    os << "Units: " << units_name(out.units) << "  (alpha = " << format_number(out.constants.alpha, 9)
       << ", mc^2 = " << format_number(out.constants.electron_rest_energy_keV, 9) << " keV)\n";
    os << std::setw(4) << "Z";
    for (auto const& ch : channels) {
        auto const label = spectroscopic_label(ch);
        os << std::setw(14) << ("EU " + label) << std::setw(14) << ("E " + label);
    }
    os << '\n';
    for (int Z : zs) {
        os << std::setw(4) << Z;
        for (auto const& ch : channels) {
            auto const* c = find(Z, ch);
            os << std::setw(14) << (c ? cell_text(c->E_upper, *c, out) : "") << std::setw(14)
               << (c ? cell_text(c->E_numeric, *c, out) : "");
        }
        os << '\n';
    }
    if (!diff.empty()) {
        os << "Max |deviation| from reference table: " << format_number(max_abs_deviation(diff), 4) << " keV over "
           << diff.size() << " cells\n";
    }
    for (auto const& c : table.cells) {
        if (!c.error.empty()) {
            os << "FAILED Z=" << c.Z << ' ' << spectroscopic_label(c.ch) << ": " << c.error << '\n';
        }
    }
}

void write_diff_csv(std::ostream& os, std::vector<CellDeviation> const& diff) {
    os << "Z,state,quantity,computed_keV,reference_keV,deviation_keV\n";
    for (auto const& d : diff) {
        os << d.Z << ',' << spectroscopic_label(d.ch) << ',' << quantity_name(d.quantity) << ','
           << format_number(d.computed_keV, 10) << ',' << format_number(d.reference_keV, 10) << ','
           << format_number(d.deviation_keV, 6) << '\n';
    }
}

void write_bound(std::ostream& os, EnvelopeBound const& bound, int Z, OutputSettings const& out) {
    switch (out.format) {
    case OutputFormat::json:
        os << bound_to_json(bound, Z, out).dump(2) << '\n';
        break;
    case OutputFormat::csv:
        os << "Z,state,E_upper,u_star,t_star\n"
           << Z << ',' << spectroscopic_label(bound.ch) << ','
           << format_number(convert_energy(bound.E_upper, out.units, out.constants), out.digits) << ','
           << format_number(bound.u_star, 12) << ',' << format_number(bound.t_star, 12) << '\n';
        break;
    case OutputFormat::pretty:
        os << "Z = " << Z << ", " << spectroscopic_label(bound.ch) << ": E_upper = "
           << format_number(convert_energy(bound.E_upper, out.units, out.constants), out.digits) << ' '
           << units_name(out.units) << "  (u* = " << format_number(bound.u_star, 10)
           << ", t* = " << format_number(bound.t_star, 10) << ")\n";
        if (bound.at_domain_edge) {
            os << "warning: minimum on the edge of the coupling domain; bound valid but probably not tight\n";
        }
        break;
    }
}

void write_solution(std::ostream& os, RadialSolution const& sol, std::string const& potential,
                    OutputSettings const& out) {
    double const E = convert_energy(sol.E, out.units, out.constants);
    switch (out.format) {
    case OutputFormat::json:
        os << solution_to_json(sol, potential, out).dump(2) << '\n';
        break;
    case OutputFormat::csv:
        os << "potential,tau,two_j,n,E,nodes1,nodes2\n"
           << '"' << potential << '"' << ',' << sol.ch.tau() << ',' << sol.ch.two_j() << ',' << sol.ch.n() << ','
           << format_number(E, out.digits) << ',' << sol.nodes1 << ',' << sol.nodes2 << '\n';
        break;
    case OutputFormat::pretty:
        os << potential << ", tau = " << sol.ch.tau() << ", j = " << sol.ch.two_j() << "/2, n = " << sol.ch.n()
           << ": E = " << format_number(E, out.digits) << ' ' << units_name(out.units) << "  (nodes " << sol.nodes1
           << '/' << sol.nodes2 << ", " << sol.grid.size() << " grid points)\n";
        break;
    }
}

void write_comparison(std::ostream& os, ComparisonReport const& rep, OutputSettings const& out) {
    if (out.format == OutputFormat::json) {
        os << comparison_to_json(rep).dump(2) << '\n';
        return;
    }
    if (out.format == OutputFormat::csv) {
        os << "state,E_a,E_b,lhs,rhs,relative_residual,derivative_residual,verdict\n"
           << spectroscopic_label(rep.ch) << ',' << format_number(convert_energy(rep.E_a, out.units, out.constants), 10)
           << ',' << format_number(convert_energy(rep.E_b, out.units, out.constants), 10) << ','
           << format_number(rep.lhs, 10) << ',' << format_number(rep.rhs, 10) << ','
           << format_number(rep.relative_identity_residual, 3) << ',' << format_number(rep.derivative_residual, 3)
           << ',' << verdict_name(rep.verdict) << '\n';
        return;
    }
    os << spectroscopic_label(rep.ch) << ": " << rep.potential_a << " <= " << rep.potential_b << '\n'
       << "  E_a = " << format_number(convert_energy(rep.E_a, out.units, out.constants), 10)
       << "  E_b = " << format_number(convert_energy(rep.E_b, out.units, out.constants), 10) << ' '
       << units_name(out.units) << '\n'
       << "  integral identity: lhs = " << format_number(rep.lhs, 10) << ", rhs = " << format_number(rep.rhs, 10)
       << ", relative residual = " << format_number(rep.relative_identity_residual, 3) << '\n'
       << "  pointwise identity residual = " << format_number(rep.derivative_residual, 3) << '\n'
       << "  verdict: " << verdict_name(rep.verdict);
    if (!rep.note.empty()) {
        os << " (" << rep.note << ')';
    }
    os << '\n';
}

} // namespace dirac
