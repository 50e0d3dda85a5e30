#include "dirac/table.hpp"

#include "dirac/table1_reference.hpp"

#include <algorithm>
#include <future>

namespace dirac {

bool TableResult::ok() const noexcept {
    return std::all_of(cells.begin(), cells.end(), [](TableCell const& c) { return c.error.empty(); });
}

TableResult compute_table(TableConfig const& cfg) {
    cfg.constants.validate();
    std::vector<std::future<TableCell>> jobs;
    for (int Z : cfg.Z) {
        for (auto const& ch : cfg.channels) {
            jobs.push_back(std::async(std::launch::async, [&cfg, Z, ch] {
                TableCell cell{Z, ch, std::nullopt, std::nullopt, {}};
                try {
                    auto const pot = ScreenedCoulomb::from_charge(Z, cfg.constants);
                    cell.E_upper = minimize_bound(pot, ch).E_upper;
                    if (cfg.compute_numeric) {
                        cell.E_numeric = solve_eigenvalue(pot, ch, cfg.solver).E;
                    }
                } catch (std::exception const& e) {
                    cell.error = e.what();
                }
                return cell;
            }));
        }
    }
    TableResult out;
    out.cells.reserve(jobs.size());
    for (auto& job : jobs) {
        out.cells.push_back(job.get());
    }
    return out;
}

std::optional<double> reference_value(int Z, Channel const& ch, Quantity q) {
    auto const row = std::find_if(table1_reference.begin(), table1_reference.end(),
                                  [Z](Table1Row const& r) { return r.Z == Z; });
    if (row == table1_reference.end() || !ch.nodeless()) {
        return std::nullopt;
    }
    if (ch.two_j() == 1) {
        return q == Quantity::upper_bound ? row->bound_1s : row->numeric_1s;
    }
    if (ch.two_j() == 3) {
        return q == Quantity::upper_bound ? row->bound_2p : row->numeric_2p;
    }
    return std::nullopt;
}

std::vector<CellDeviation> diff_against_reference(TableResult const& table, PhysicalConstants const& constants) {
    std::vector<CellDeviation> out;
    for (auto const& cell : table.cells) {
        auto add = [&](Quantity q, std::optional<double> const& value) {
            auto const ref = reference_value(cell.Z, cell.ch, q);
            if (ref && value) {
                double const keV = to_binding_keV(*value, constants);
                out.push_back({cell.Z, cell.ch, q, keV, *ref, keV - *ref});
            }
        };
        add(Quantity::upper_bound, cell.E_upper);
        add(Quantity::numeric, cell.E_numeric);
    }
    return out;
}

} // namespace dirac
