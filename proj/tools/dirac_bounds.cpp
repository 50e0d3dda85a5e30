// dirac_bounds: envelope upper bounds, accurate eigenvalues and comparison
// checks for the radial Dirac equation with central vector potentials.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error, crossing
// potentials, or a state with nodes where the theorem needs none.

#include "dirac/comparison.hpp"
#include "dirac/envelope.hpp"
#include "dirac/kernels.hpp"
#include "dirac/report_io.hpp"
#include "dirac/table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

constexpr int exit_numerical = 1;
constexpr int exit_hypothesis = 2;

struct CommonOptions {
    std::string units = "keV-binding";
    std::string format = "pretty";
    std::string out_path;
    double alpha = dirac::PhysicalConstants{}.alpha;
    double mc2_keV = dirac::PhysicalConstants{}.electron_rest_energy_keV;
    double tol_e = dirac::SolverOptions{}.energy_tolerance;
    double grid_scale = 1.0;
    int digits = 6;
    std::string simd = "auto";

    void attach(CLI::App& cmd) {
        cmd.add_option("--units", units, "Output units: keV-binding (E - mc^2 in keV) or mc2")
            ->check(CLI::IsMember({"keV-binding", "kev-binding", "keV", "kev", "mc2"}))
            ->capture_default_str();
        cmd.add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "pretty"}))
            ->capture_default_str();
        cmd.add_option("--out", out_path, "Write output to this file instead of stdout");
        cmd.add_option("--alpha", alpha, "Fine-structure constant")->capture_default_str();
        cmd.add_option("--mc2-kev", mc2_keV, "Electron rest energy in keV")->capture_default_str();
        cmd.add_option("--tol-e", tol_e, "Eigenvalue bracket width in mc^2")->capture_default_str();
        cmd.add_option("--grid-scale", grid_scale, "Multiplies the radial grid density")->capture_default_str();
        cmd.add_option("--digits", digits, "Significant digits in csv/pretty output")->capture_default_str();
        cmd.add_option("--simd", simd, "Kernel variant: auto or scalar")
            ->check(CLI::IsMember({"auto", "scalar"}))
            ->capture_default_str();
    }

    dirac::PhysicalConstants constants() const {
        dirac::PhysicalConstants c{alpha, mc2_keV};
        c.validate();
        return c;
    }

    dirac::OutputSettings output() const {
        return {dirac::parse_format(format), dirac::parse_units(units), constants(), digits};
    }

    dirac::SolverOptions solver() const {
        dirac::SolverOptions s;
        s.energy_tolerance = tol_e;
        s.grid_scale = grid_scale;
        return s;
    }

    void apply_simd() const {
        if (simd == "scalar") {
            dirac::kernels::select_isa(dirac::kernels::Isa::scalar);
        }
    }
};

/// stdout or the --out file.
class Sink {
  public:
    explicit Sink(std::string const& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw std::runtime_error("cannot open output file " + path);
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<dirac::Channel> parse_states(std::vector<std::string> const& labels) {
    std::vector<dirac::Channel> out;
    for (auto const& l : labels) {
        out.push_back(dirac::Channel::from_label(l));
    }
    return out;
}

void require_nodeless_cli(dirac::Channel const& ch) {
    if (!ch.nodeless()) {
        throw CLI::ValidationError(
            "--state", dirac::spectroscopic_label(ch) +
                           " has nodes: bounds and comparisons hold only for tau = -1, n = 1 states (1s1/2, 2p3/2, "
                           "3d5/2, ...)");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Envelope bounds and spectral comparison for the radial Dirac equation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML/INI file");

    // table1
    CommonOptions table_opts;
    std::vector<int> table_z{20, 30, 40, 50, 60, 70, 80};
    std::vector<std::string> table_states{"1s1/2", "2p3/2"};
    std::string diff_out;
    bool bounds_only = false;
    auto* table_cmd = app.add_subcommand("table1", "Screened-Coulomb table: envelope bounds and accurate eigenvalues");
    table_opts.attach(*table_cmd);
    table_cmd->add_option("--z", table_z, "Nuclear charges")->capture_default_str();
    table_cmd->add_option("--state", table_states, "Nodeless states, e.g. 1s1/2 2p3/2")->capture_default_str();
    table_cmd->add_option("--diff-out", diff_out, "Write the deviation from the reference table as CSV");
    table_cmd->add_flag("--bounds-only", bounds_only, "Skip the numerical eigenvalues");

    // bound
    CommonOptions bound_opts;
    int bound_z = 0;
    std::string bound_state = "1s1/2";
    auto* bound_cmd = app.add_subcommand("bound", "Envelope upper bound for one screened-Coulomb state");
    bound_opts.attach(*bound_cmd);
    bound_cmd->add_option("--z", bound_z, "Nuclear charge")->required()->check(CLI::PositiveNumber);
    bound_cmd->add_option("--state", bound_state, "Nodeless state label")->capture_default_str();

    // solve
    CommonOptions solve_opts;
    std::string potential = "screened";
    int solve_z = 0;
    double solve_u = 0.0;
    double solve_shift = 0.0;
    double solve_coupling = 0.0;
    std::string solve_state = "1s1/2";
    std::string dump_path;
    auto* solve_cmd = app.add_subcommand("solve", "Accurate bound-state eigenvalue");
    solve_opts.attach(*solve_cmd);
    solve_cmd->add_option("--potential", potential, "coulomb, shifted or screened")
        ->check(CLI::IsMember({"coulomb", "shifted", "screened"}))
        ->capture_default_str();
    solve_cmd->add_option("--z", solve_z, "Nuclear charge (screened)");
    solve_cmd->add_option("--u", solve_u, "Coupling u of -u/r (coulomb)");
    solve_cmd->add_option("--shift", solve_shift, "Shift A in mc^2 (shifted)");
    solve_cmd->add_option("--coupling", solve_coupling, "Coupling B (shifted)");
    solve_cmd->add_option("--state", solve_state, "State label, e.g. 1s1/2, 2s1/2, 2p1/2")->capture_default_str();
    solve_cmd->add_option("--dump-wavefunction", dump_path, "Write r,psi1,psi2 as CSV");

    // compare
    CommonOptions compare_opts;
    int compare_z = 0;
    std::vector<double> compare_t;
    std::string compare_state = "1s1/2";
    bool explore_noded = false;
    auto* compare_cmd =
        app.add_subcommand("compare", "Screened Coulomb against its tangent shifted-Coulomb potential at r = t");
    compare_opts.attach(*compare_cmd);
    compare_cmd->add_option("--z", compare_z, "Nuclear charge")->required()->check(CLI::PositiveNumber);
    compare_cmd->add_option("--t", compare_t, "Contact radii in units of hbar/(mc); default: the optimal tangent");
    compare_cmd->add_option("--state", compare_state, "State label")->capture_default_str();
    compare_cmd->add_flag("--explore-noded", explore_noded,
                          "Allow noded states; the verdict is then a diagnostic, not a theorem check");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : exit_hypothesis;
    }

    try {
        if (*table_cmd) {
            table_opts.apply_simd();
            auto const out = table_opts.output();
            dirac::TableConfig cfg;
            cfg.Z = table_z;
            cfg.channels = parse_states(table_states);
            for (auto const& ch : cfg.channels) {
                require_nodeless_cli(ch);
            }
            cfg.constants = out.constants;
            cfg.solver = table_opts.solver();
            cfg.compute_numeric = !bounds_only;
            auto const table = dirac::compute_table(cfg);
            auto const diff = dirac::diff_against_reference(table, out.constants);
            Sink sink(table_opts.out_path);
            dirac::write_table(sink.stream(), table, diff, out);
            if (!diff_out.empty()) {
                std::ofstream f(diff_out);
                if (!f) {
                    throw std::runtime_error("cannot open " + diff_out);
                }
                dirac::write_diff_csv(f, diff);
            }
            return table.ok() ? 0 : exit_numerical;
        }
        if (*bound_cmd) {
            bound_opts.apply_simd();
            auto const out = bound_opts.output();
            auto const ch = dirac::Channel::from_label(bound_state);
            require_nodeless_cli(ch);
            auto const pot = dirac::ScreenedCoulomb::from_charge(bound_z, out.constants);
            auto const bound = dirac::minimize_bound(pot, ch);
            Sink sink(bound_opts.out_path);
            dirac::write_bound(sink.stream(), bound, bound_z, out);
            return 0;
        }
        if (*solve_cmd) {
            solve_opts.apply_simd();
            auto const out = solve_opts.output();
            auto const ch = dirac::Channel::from_label(solve_state);
            dirac::PotentialModel pot = dirac::PureCoulomb{solve_u};
            if (potential == "shifted") {
                pot = dirac::ShiftedCoulomb{solve_shift, solve_coupling};
            } else if (potential == "screened") {
                pot = dirac::ScreenedCoulomb::from_charge(solve_z, out.constants);
            }
            auto const sol = dirac::solve_eigenvalue(pot, ch, solve_opts.solver());
            Sink sink(solve_opts.out_path);
            dirac::write_solution(sink.stream(), sol, dirac::describe(pot), out);
            if (!dump_path.empty()) {
                std::ofstream f(dump_path);
                if (!f) {
                    throw std::runtime_error("cannot open " + dump_path);
                }
                dirac::write_wavefunction_csv(f, sol);
            }
            return 0;
        }
        if (*compare_cmd) {
            compare_opts.apply_simd();
            auto const out = compare_opts.output();
            auto const ch = dirac::Channel::from_label(compare_state);
            if (!explore_noded) {
                require_nodeless_cli(ch);
            }
            auto const pot = dirac::ScreenedCoulomb::from_charge(compare_z, out.constants);
            if (compare_t.empty()) {
                auto const lowest = ch.nodeless() ? ch : dirac::Channel(-1, ch.two_j(), 1);
                compare_t.push_back(dirac::minimize_bound(pot, lowest).t_star);
            }
            dirac::ComparisonOptions opts;
            opts.solver = compare_opts.solver();
            opts.allow_noded = explore_noded;
            Sink sink(compare_opts.out_path);
            bool all_pass = true;
            bool any_fail = false;
            nlohmann::json reports = nlohmann::json::array();
            for (double t : compare_t) {
                auto const tangent = dirac::tangent_at(pot, t);
                auto const rep = dirac::assert_ordering(pot, tangent, ch, opts);
                all_pass = all_pass && rep.verdict == dirac::Verdict::pass;
                any_fail = any_fail || rep.verdict == dirac::Verdict::fail;
                if (out.format == dirac::OutputFormat::json) {
                    auto j = dirac::comparison_to_json(rep);
                    j["t"] = t;
                    reports.push_back(std::move(j));
                } else {
                    dirac::write_comparison(sink.stream(), rep, out);
                }
            }
            if (out.format == dirac::OutputFormat::json) {
                sink.stream() << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
            }
            if (any_fail) {
                return exit_numerical;
            }
            return all_pass ? 0 : exit_hypothesis;
        }
    } catch (CLI::ValidationError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (dirac::HypothesisViolation const& e) {
        std::cerr << "hypothesis violated: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (dirac::NoBoundState const& e) {
        std::cerr << "no bound state: " << e.what() << '\n';
        return exit_numerical;
    } catch (dirac::ConvergenceFailure const& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_hypothesis;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numerical;
    }
    return 0;
}
