#include "qlen/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlen/entangle.hpp"
#include "qlen/errors.hpp"
#include "qlen/grid_oracle.hpp"
#include "qlen/manybody.hpp"
#include "qlen/moments.hpp"
#include "qlen/quadrature.hpp"
#include "qlen/ruler.hpp"
#include "qlen/series.hpp"

namespace qlen::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double pi = std::numbers::pi;

constexpr double hbar_si = 1.054571817e-34;    // J s
constexpr double planck_si = 6.62607015e-34;   // J s
constexpr double electron_mass_si = 9.1093837015e-31; // kg

// Scaling class of a column when converting natural units to SI.
enum class Dim {
    none,       // dimensionless or text
    count,      // integers, never scaled
    length,     // * a0^1
    length2,    // * a0^2
    length3,
    length4,
    inv_length, // / a0
    energy_hbar, // hbar-based natural energy unit
    energy_h,    // h-based natural energy unit
};

struct ColumnSpec {
    std::string name;
    Dim dim = Dim::none;
};

struct Output {
    std::string command;
    json parameters = json::object();
    std::vector<ColumnSpec> columns;
    std::vector<std::vector<json>> rows;
    std::vector<std::string> notes;
};

struct Options {
    std::string format = "csv";
    std::string units = "natural";
    std::string out_path;
    double a0_meters = 1e-10;
};

double dim_scale(Dim dim, const Options& opt) {
    if (opt.units != "si")
        return 1.0;
    switch (dim) {
        case Dim::none:
        case Dim::count: return 1.0;
        case Dim::length: return si_length_scale(opt.a0_meters, 1);
        case Dim::length2: return si_length_scale(opt.a0_meters, 2);
        case Dim::length3: return si_length_scale(opt.a0_meters, 3);
        case Dim::length4: return si_length_scale(opt.a0_meters, 4);
        case Dim::inv_length: return si_length_scale(opt.a0_meters, -1);
        case Dim::energy_hbar: return si_energy_scale_hbar(opt.a0_meters);
        case Dim::energy_h: return si_energy_scale_h(opt.a0_meters);
    }
    return 1.0;
}

json scale_cell(const json& cell, double factor) {
    if (factor == 1.0)
        return cell;
    if (cell.is_number_float())
        return cell.get<double>() * factor;
    if (cell.is_array()) {
        json scaled = json::array();
        for (const auto& v : cell)
            scaled.push_back(scale_cell(v, factor));
        return scaled;
    }
    return cell;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"')
            quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string csv_cell(const json& cell) {
    if (cell.is_null())
        return "N.D.";
    if (cell.is_boolean())
        return cell.get<bool>() ? "true" : "false";
    if (cell.is_number_float())
        return format_double(cell.get<double>());
    if (cell.is_number_integer())
        return std::to_string(cell.get<long long>());
    if (cell.is_array()) {
        std::string joined;
        for (const auto& v : cell) {
            if (!joined.empty())
                joined += ' ';
            joined += csv_cell(v);
        }
        return csv_quote(joined);
    }
    return csv_quote(cell.get<std::string>());
}

void emit(const Output& result, const Options& opt, std::ostream& out) {
    std::ostringstream body;
    if (opt.format == "json") {
        json envelope;
        envelope["command"] = result.command;
        envelope["format_version"] = 1;
        envelope["units"] = opt.units;
        envelope["parameters"] = result.parameters;
        json rows = json::array();
        for (const auto& row : result.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < result.columns.size(); ++i)
                obj[result.columns[i].name] =
                    scale_cell(row[i], dim_scale(result.columns[i].dim, opt));
            rows.push_back(std::move(obj));
        }
        envelope["rows"] = std::move(rows);
        envelope["notes"] = result.notes;
        body << envelope.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < result.columns.size(); ++i) {
            if (i)
                body << ',';
            body << csv_quote(result.columns[i].name);
        }
        body << '\n';
        for (const auto& row : result.rows) {
            for (std::size_t i = 0; i < result.columns.size(); ++i) {
                if (i)
                    body << ',';
                body << csv_cell(scale_cell(row[i], dim_scale(result.columns[i].dim, opt)));
            }
            body << '\n';
        }
    }

    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file)
            throw error(errc::invalid_input, "cannot open output file: " + opt.out_path);
        file << body.str();
        if (!file)
            throw error(errc::invalid_input, "failed writing output file: " + opt.out_path);
    } else {
        out << body.str();
    }
}

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--units", opt.units, "Unit system for the emitted values")
        ->check(CLI::IsMember({"natural", "si"}))
        ->capture_default_str();
    cmd->add_option("--a0-meters", opt.a0_meters, "Lattice constant in meters for SI output")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", opt.out_path, "Write output to a file instead of stdout");
}

Statistics parse_statistics(const std::string& name) {
    return name == "boson" ? Statistics::boson : Statistics::fermion;
}

json common_parameters(const Options& opt) {
    json p = json::object();
    p["format"] = opt.format;
    p["units"] = opt.units;
    if (opt.units == "si")
        p["a0_meters"] = opt.a0_meters;
    return p;
}

// ---------------------------------------------------------------- length --

struct LengthArgs {
    std::string system = "box";
    double width = 1.0;
    int level = 1;
    int level_to = 0; // 0: single level
    double x_lo = 0.0;
    double x_hi = 1.0;
};

Output run_length(const LengthArgs& a, const Options& opt) {
    Output result;
    result.command = "length";
    result.parameters = common_parameters(opt);
    result.parameters["system"] = a.system;
    result.columns = {{"system", Dim::none},     {"n", Dim::count},
                      {"width", Dim::length},    {"l2", Dim::length},
                      {"l4", Dim::length},       {"l2_deficit", Dim::none},
                      {"l4_deficit", Dim::none}, {"m1", Dim::length},
                      {"m2", Dim::length2},      {"m3", Dim::length3},
                      {"m4", Dim::length4}};

    auto push_report = [&](const json& system, const json& level, double width,
                           const LengthReport& report) {
        const auto& ms = report.moments;
        const double l4 = report.l4.value();
        result.rows.push_back({system, level, width, report.l2, l4,
                               width > 0.0 ? json(1.0 - report.l2 / width) : json(),
                               width > 0.0 ? json(1.0 - l4 / width) : json(), ms.m1, ms.m2,
                               ms.m3.value(), ms.m4.value()});
    };

    if (a.system == "rod") {
        result.parameters["x_lo"] = a.x_lo;
        result.parameters["x_hi"] = a.x_hi;
        const auto rod = Density1D::uniform_rod(a.x_lo, a.x_hi);
        push_report("rod", json(), a.x_hi - a.x_lo, length_l4(rod));
    } else {
        result.parameters["width"] = a.width;
        result.parameters["n"] = a.level;
        const int last = a.level_to > 0 ? a.level_to : a.level;
        if (a.level_to > 0)
            result.parameters["n_to"] = a.level_to;
        for (int n = a.level; n <= last; ++n)
            push_report("box", n, a.width, length_l4(Density1D::box_eigenstate(a.width, n)));
    }
    result.notes.push_back("l4 takes the fourth root of the moment combination; "
                           "a cube root would not carry length units");
    return result;
}

// --------------------------------------------------------------- density --

struct DensityArgs {
    std::string profile = "fermion";
    int particles = 2;
    double width = 1.0;
    int wells = 2;
    double well_width = 1.0;
    double spacing = 0.0; // 0: ground-state well length
    int grid = 4096;
};

Output run_density(const DensityArgs& a, const Options& opt) {
    Output result;
    result.command = "density";
    result.parameters = common_parameters(opt);
    result.parameters["profile"] = a.profile;
    result.parameters["grid"] = a.grid;
    result.columns = {{"x", Dim::length},
                      {"rho", Dim::inv_length},
                      {"x_over_width", Dim::none},
                      {"rho_times_width", Dim::none}};

    DensityProfile profile;
    if (a.profile == "segmented") {
        const double spacing =
            a.spacing > 0.0 ? a.spacing : a.well_width * std::sqrt(1.0 - 6.0 / (pi * pi));
        result.parameters["wells"] = a.wells;
        result.parameters["well_width"] = a.well_width;
        result.parameters["spacing"] = spacing;
        profile = entangled_segment_density(a.wells, a.well_width, spacing, a.grid);
    } else {
        result.parameters["particles"] = a.particles;
        result.parameters["width"] = a.width;
        const auto box = BoxSystem::fixed_width(a.width);
        const auto plan = a.profile == "boson" ? FillingPlan::boson_ground(a.particles)
                                               : FillingPlan::fermion_ground(a.particles);
        profile = electron_density(box, plan, a.grid);
    }

    const double span = profile.x_hi - profile.x_lo;
    for (std::size_t i = 0; i < profile.x.size(); ++i)
        result.rows.push_back({profile.x[i], profile.rho[i],
                               (profile.x[i] - profile.x_lo) / span, profile.rho[i] * span});
    return result;
}

// ------------------------------------------------------------------ fill --

struct FillArgs {
    std::int64_t max_electrons = 100;
    double lattice = 1.0;
    double width = 0.0; // 0: grow with unit cells
};

Output run_fill(const FillArgs& a, const Options& opt) {
    Output result;
    result.command = "fill";
    result.parameters = common_parameters(opt);
    result.parameters["max_electrons"] = a.max_electrons;
    const bool fixed = a.width > 0.0;
    if (fixed)
        result.parameters["width"] = a.width;
    else
        result.parameters["lattice"] = a.lattice;
    result.columns = {{"electrons", Dim::count},
                      {"width", Dim::length},
                      {"length", Dim::length},
                      {"length_over_width", Dim::none},
                      {"asymptote", Dim::none}};

    for (std::int64_t n = 2; n <= a.max_electrons; n += 2) {
        const double width = fixed ? a.width : 0.5 * a.lattice * n;
        const double length = fermion_length(BoxSystem::fixed_width(width), n);
        result.rows.push_back({n, width, length, length / width,
                               std::sqrt(1.0 - 2.0 / static_cast<double>(n))});
    }
    return result;
}

// ----------------------------------------------------------------- ruler --

struct RulerArgs {
    std::int64_t electrons = 0;
    double lattice = 1.0;
    std::string statistics = "fermion";
    std::int64_t segments = 0;
    bool sweep = false;
    bool optimal = false;
};

Output run_ruler(const RulerArgs& a, const Options& opt) {
    Output result;
    result.command = "ruler";
    result.parameters = common_parameters(opt);
    result.parameters["electrons"] = a.electrons;
    result.parameters["lattice"] = a.lattice;
    result.parameters["statistics"] = a.statistics;
    const Statistics stats = parse_statistics(a.statistics);

    if (a.optimal) {
        result.parameters["mode"] = "optimal";
        result.columns = {{"electrons", Dim::count},
                          {"r_closed_form", Dim::count},
                          {"r_sweep", Dim::count},
                          {"delta_l", Dim::length}};
        const OptimalRuling ruling = optimal_ruling(a.electrons);
        result.rows.push_back(
            {a.electrons, ruling.r_closed_form, ruling.r_sweep, ruling.delta_l * a.lattice});
        return result;
    }

    result.parameters["mode"] = a.sweep ? "sweep" : "segments";
    result.columns = {{"segments", Dim::count},      {"per_segment", Dim::length},
                      {"total", Dim::length},        {"monolithic", Dim::length},
                      {"overestimate", Dim::length}, {"energy_uncut", Dim::energy_h},
                      {"energy_cut", Dim::energy_h}, {"energy_ratio", Dim::none},
                      {"residual", Dim::none}};

    auto push_row = [&](std::int64_t r) {
        const RulerSpec spec{a.lattice, a.electrons, r, stats};
        const SegmentedLengthResult seg = segment_length(spec);
        const CuttingEnergy energy = cutting_energy(spec);
        const json residual = stats == Statistics::fermion
                                  ? json(precision_condition_residual(a.electrons, r))
                                  : json();
        result.rows.push_back({r, seg.per_segment, seg.total, seg.monolithic, seg.overestimate,
                               energy.energy_uncut, energy.energy_cut, energy.ratio, residual});
    };

    if (a.sweep) {
        for (std::int64_t r : admissible_segments(a.electrons, stats))
            push_row(r);
    } else {
        result.parameters["segments"] = a.segments > 0 ? a.segments : 1;
        push_row(a.segments > 0 ? a.segments : 1);
    }
    return result;
}

// ----------------------------------------------------------- parse-check --

struct ParseCheckArgs {
    int wells = 2;
    double well_width = 1.0;
    double tol = 1e-10;
    int max_iterations = 100;
};

Output run_parse_check(const ParseCheckArgs& a, const Options& opt) {
    Output result;
    result.command = "parse-check";
    result.parameters = common_parameters(opt);
    result.parameters["wells"] = a.wells;
    result.parameters["well_width"] = a.well_width;
    result.parameters["tol"] = a.tol;
    result.parameters["max_iterations"] = a.max_iterations;
    result.columns = {{"wells", Dim::count},          {"well_width", Dim::length},
                      {"l1", Dim::length},            {"total_length", Dim::length},
                      {"mixture_l2", Dim::length},    {"closed_form_l1", Dim::length},
                      {"alternate_l1", Dim::length},  {"discrepancy", Dim::none},
                      {"iterations", Dim::count},     {"residual", Dim::length}};

    const SelfConsistencyReport report =
        self_consistent_segment_length(a.well_width, a.wells, a.tol, a.max_iterations);

    const auto mixture =
        Density1D::well_mixture(a.well_width, report.l1_solved, a.wells);
    const double mixture_l2 = length_l2(mixture).l2;

    result.rows.push_back({report.wells, report.well_width, report.l1_solved,
                           report.wells * report.l1_solved, mixture_l2, report.l1_closed_form,
                           report.l1_alternate, report.coefficient_discrepancy,
                           report.iterations, report.residual});
    if (report.coefficient_discrepancy)
        result.notes.push_back(
            "alternate coefficient sqrt(1/3 - 1/(2 pi^2)) disagrees with the quadrature "
            "fixed point; the self-consistent segment length is sqrt(1 - 6/pi^2) * width");
    return result;
}

// -------------------------------------------------------------- entangle --

struct EntangleArgs {
    int object_cells = 5;
    double object_lattice = 1.0;
    int ruler_cells = 2;
    double ruler_lattice = 1.0;
    std::string policy = "pairwise";
};

Output run_entangle(const EntangleArgs& a, const Options& opt) {
    Output result;
    result.command = "entangle";
    result.parameters = common_parameters(opt);
    result.parameters["object_cells"] = a.object_cells;
    result.parameters["object_lattice"] = a.object_lattice;
    result.parameters["ruler_cells"] = a.ruler_cells;
    result.parameters["ruler_lattice"] = a.ruler_lattice;
    result.parameters["policy"] = a.policy;
    result.columns = {{"stage", Dim::none},
                      {"object_electrons", Dim::count},
                      {"ruler_electrons", Dim::count},
                      {"classical_ratio", Dim::none},
                      {"quantum_ratio", Dim::none},
                      {"object_length", Dim::length},
                      {"ruler_length", Dim::length},
                      {"transfers", Dim::count},
                      {"photon_energies", Dim::energy_hbar}};

    const TransferPolicy policy = a.policy == "none" ? TransferPolicy::none
                                  : a.policy == "single" ? TransferPolicy::single_electron
                                                         : TransferPolicy::pairwise;
    MeasurementScenario scenario{{a.object_lattice, 2 * a.object_cells},
                                 {a.ruler_lattice, 2 * a.ruler_cells},
                                 policy};

    auto push_stage = [&](const std::string& stage, const ScenarioReport& report) {
        int object_electrons = 0, ruler_electrons = 0;
        for (const auto& lo : report.object_occupation)
            object_electrons += lo.occupancy;
        for (const auto& lo : report.ruler_occupation)
            ruler_electrons += lo.occupancy;
        json photons = json::array();
        for (double e : report.photon_energies)
            photons.push_back(e);
        result.rows.push_back({stage, object_electrons, ruler_electrons, report.classical_ratio,
                               report.quantum_ratio ? json(*report.quantum_ratio) : json(),
                               report.object_length,
                               report.ruler_length ? json(*report.ruler_length) : json(),
                               report.transfers, photons});
    };

    MeasurementScenario initial = scenario;
    initial.policy = TransferPolicy::none;
    push_stage("initial", relax(initial));
    push_stage("relaxed", relax(scenario));
    return result;
}

// ---------------------------------------------------------------- oracle --

struct OracleArgs {
    std::string op;
    std::int64_t m = 5;
    std::vector<int> levels{1, 2};
    double width = 1.0;
    std::string statistics = "fermion";
    int grid = 256;
    int order = 2;
    int level = 1;
    double tol = 1e-10;
    std::int64_t electrons = 10000;
};

Output run_oracle(const OracleArgs& a, const Options& opt) {
    Output result;
    result.command = "oracle";
    result.parameters = common_parameters(opt);
    result.parameters["op"] = a.op;

    if (a.op == "zeta") {
        result.parameters["m"] = a.m;
        result.columns = {{"m", Dim::count},
                          {"partial_sum", Dim::none},
                          {"limit", Dim::none},
                          {"tail", Dim::none},
                          {"tail_lower", Dim::none},
                          {"tail_upper", Dim::none}};
        const double s = oracle::partial_zeta2(a.m);
        const double limit = pi * pi / 6.0;
        result.rows.push_back({a.m, s, limit, limit - s, 1.0 / static_cast<double>(a.m + 1),
                               1.0 / static_cast<double>(a.m)});
    } else if (a.op == "spread") {
        result.parameters["levels"] = a.levels;
        result.parameters["width"] = a.width;
        result.parameters["statistics"] = a.statistics;
        result.parameters["grid"] = a.grid;
        result.columns = {{"levels", Dim::none},      {"grid", Dim::count},
                          {"spread", Dim::length2},   {"closed_form", Dim::length2},
                          {"difference", Dim::length2}, {"norm", Dim::none}};
        const Statistics stats = parse_statistics(a.statistics);
        const oracle::GridWavefunction psi(a.levels, a.width, stats, a.grid);
        const double spread = psi.spread_x1();
        double mean_m2 = 0.0;
        for (int n : a.levels)
            mean_m2 += box_x2_matrix_element(a.width, n);
        mean_m2 /= static_cast<double>(a.levels.size());
        const double closed = mean_m2 - 0.25 * a.width * a.width;
        std::string level_list;
        for (int n : a.levels) {
            if (!level_list.empty())
                level_list += ' ';
            level_list += std::to_string(n);
        }
        result.rows.push_back(
            {level_list, a.grid, spread, closed, std::abs(spread - closed), psi.norm()});
    } else if (a.op == "box-moment") {
        result.parameters["order"] = a.order;
        result.parameters["level"] = a.level;
        result.parameters["width"] = a.width;
        result.parameters["tol"] = a.tol;
        const Dim moment_dim = a.order == 1   ? Dim::length
                               : a.order == 2 ? Dim::length2
                               : a.order == 3 ? Dim::length3
                                              : Dim::length4;
        result.columns = {{"order", Dim::count},
                          {"level", Dim::count},
                          {"width", Dim::length},
                          {"quadrature", moment_dim},
                          {"closed_form", moment_dim}};
        const auto box = Density1D::box_eigenstate(a.width, a.level);
        const oracle::QuadratureSpec spec(a.tol, 20000);
        const double value = oracle::integrate(
            [&](double x) { return std::pow(x, a.order) * box.value(x); }, 0.0, a.width, spec);
        const MomentSet closed = moments(box, a.order <= 2 ? 2 : 4);
        const double closed_value = a.order == 1   ? closed.m1
                                    : a.order == 2 ? closed.m2
                                    : a.order == 3 ? closed.m3.value()
                                                   : closed.m4.value();
        result.rows.push_back({a.order, a.level, a.width, value, closed_value});
    } else if (a.op == "sign-change") {
        result.parameters["electrons"] = a.electrons;
        result.columns = {{"electrons", Dim::count}, {"r", Dim::count}, {"residual", Dim::none}};
        const auto admissible = admissible_segments(a.electrons, Statistics::fermion);
        const std::int64_t r = oracle::find_sign_change(
            [&](std::int64_t s) { return precision_condition_residual(a.electrons, s); },
            admissible);
        result.rows.push_back({a.electrons, r, precision_condition_residual(a.electrons, r)});
    } else {
        throw CLI::ValidationError("--op",
                                   "unknown oracle op (zeta, spread, box-moment, sign-change)");
    }
    return result;
}

} // namespace

double si_length_scale(double a0_meters, int power) {
    return std::pow(a0_meters, power);
}

double si_energy_scale_hbar(double a0_meters) {
    return hbar_si * hbar_si / (electron_mass_si * a0_meters * a0_meters);
}

double si_energy_scale_h(double a0_meters) {
    return planck_si * planck_si / (electron_mass_si * a0_meters * a0_meters);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum length toolkit"};
    app.require_subcommand(1);

    Options opt;
    LengthArgs length_args;
    DensityArgs density_args;
    FillArgs fill_args;
    RulerArgs ruler_args;
    ParseCheckArgs parse_args;
    EntangleArgs entangle_args;
    OracleArgs oracle_args;

    CLI::App* length_cmd = app.add_subcommand("length", "Second- and fourth-moment lengths");
    length_cmd->add_option("--system", length_args.system, "Density kind")
        ->check(CLI::IsMember({"box", "rod"}))
        ->capture_default_str();
    length_cmd->add_option("--width", length_args.width, "Box width")->capture_default_str();
    length_cmd->add_option("--n", length_args.level, "Eigenstate index")->capture_default_str();
    length_cmd->add_option("--n-to", length_args.level_to, "Sweep eigenstates up to this index");
    length_cmd->add_option("--x-lo", length_args.x_lo, "Rod lower edge")->capture_default_str();
    length_cmd->add_option("--x-hi", length_args.x_hi, "Rod upper edge")->capture_default_str();
    add_common_options(length_cmd, opt);

    CLI::App* density_cmd = app.add_subcommand("density", "Sampled probability densities");
    density_cmd->add_option("--profile", density_args.profile, "Profile kind")
        ->check(CLI::IsMember({"fermion", "boson", "segmented"}))
        ->capture_default_str();
    density_cmd->add_option("--particles", density_args.particles, "Particle count")
        ->capture_default_str();
    density_cmd->add_option("--width", density_args.width, "Box width")->capture_default_str();
    density_cmd->add_option("--wells", density_args.wells, "Well count (segmented)")
        ->capture_default_str();
    density_cmd->add_option("--well-width", density_args.well_width, "Well width (segmented)")
        ->capture_default_str();
    density_cmd->add_option("--spacing", density_args.spacing,
                            "Well pitch (segmented); defaults to the ground-state well length");
    density_cmd->add_option("--grid", density_args.grid, "Grid points")->capture_default_str();
    add_common_options(density_cmd, opt);

    CLI::App* fill_cmd = app.add_subcommand("fill", "Paired-filling length versus electron count");
    fill_cmd->add_option("--max-electrons", fill_args.max_electrons, "Largest electron count")
        ->capture_default_str();
    fill_cmd->add_option("--lattice", fill_args.lattice, "Unit-cell length (box grows)")
        ->capture_default_str();
    fill_cmd->add_option("--width", fill_args.width, "Fixed box width instead of unit cells");
    add_common_options(fill_cmd, opt);

    CLI::App* ruler_cmd = app.add_subcommand("ruler", "Segmented-ruler lengths and energetics");
    ruler_cmd->add_option("--electrons,--n", ruler_args.electrons, "Electron count")->required();
    ruler_cmd->add_option("--lattice", ruler_args.lattice, "Unit-cell length")
        ->capture_default_str();
    ruler_cmd->add_option("--statistics", ruler_args.statistics, "Particle statistics")
        ->check(CLI::IsMember({"fermion", "boson"}))
        ->capture_default_str();
    ruler_cmd->add_option("--segments", ruler_args.segments, "Segment count");
    ruler_cmd->add_flag("--sweep", ruler_args.sweep, "All admissible segment counts");
    ruler_cmd->add_flag("--optimal", ruler_args.optimal, "Best ruling for measurement accuracy");
    add_common_options(ruler_cmd, opt);

    CLI::App* parse_cmd =
        app.add_subcommand("parse-check", "Self-consistency of stacked segment lengths");
    parse_cmd->add_option("--wells", parse_args.wells, "Well count")->capture_default_str();
    parse_cmd->add_option("--well-width", parse_args.well_width, "Well width")
        ->capture_default_str();
    parse_cmd->add_option("--tol", parse_args.tol, "Fixed-point tolerance")
        ->capture_default_str();
    parse_cmd->add_option("--max-iterations", parse_args.max_iterations, "Iteration budget")
        ->capture_default_str();
    add_common_options(parse_cmd, opt);

    CLI::App* entangle_cmd =
        app.add_subcommand("entangle", "Object-ruler electron transfer scenarios");
    entangle_cmd->add_option("--object-cells", entangle_args.object_cells, "Object unit cells")
        ->capture_default_str();
    entangle_cmd
        ->add_option("--object-lattice", entangle_args.object_lattice, "Object lattice length")
        ->capture_default_str();
    entangle_cmd->add_option("--ruler-cells", entangle_args.ruler_cells, "Ruler unit cells")
        ->capture_default_str();
    entangle_cmd->add_option("--ruler-lattice", entangle_args.ruler_lattice, "Ruler lattice length")
        ->capture_default_str();
    entangle_cmd->add_option("--policy", entangle_args.policy, "Transfer policy")
        ->check(CLI::IsMember({"none", "pairwise", "single"}))
        ->capture_default_str();
    add_common_options(entangle_cmd, opt);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force verifier directly");
    oracle_cmd->add_option("--op", oracle_args.op, "zeta | spread | box-moment | sign-change")
        ->required();
    oracle_cmd->add_option("--m", oracle_args.m, "Series cutoff (zeta)")->capture_default_str();
    oracle_cmd->add_option("--levels", oracle_args.levels, "Occupied levels (spread)")
        ->delimiter(',');
    oracle_cmd->add_option("--width", oracle_args.width, "Box width")->capture_default_str();
    oracle_cmd->add_option("--statistics", oracle_args.statistics, "Particle statistics")
        ->check(CLI::IsMember({"fermion", "boson"}))
        ->capture_default_str();
    oracle_cmd->add_option("--grid", oracle_args.grid, "Grid points per axis (spread)")
        ->capture_default_str();
    oracle_cmd->add_option("--order", oracle_args.order, "Moment order (box-moment)")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    oracle_cmd->add_option("--level", oracle_args.level, "Eigenstate index (box-moment)")
        ->capture_default_str();
    oracle_cmd->add_option("--tol", oracle_args.tol, "Quadrature tolerance (box-moment)")
        ->capture_default_str();
    oracle_cmd->add_option("--electrons", oracle_args.electrons, "Electron count (sign-change)")
        ->capture_default_str();
    add_common_options(oracle_cmd, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        Output result;
        if (length_cmd->parsed())
            result = run_length(length_args, opt);
        else if (density_cmd->parsed())
            result = run_density(density_args, opt);
        else if (fill_cmd->parsed())
            result = run_fill(fill_args, opt);
        else if (ruler_cmd->parsed())
            result = run_ruler(ruler_args, opt);
        else if (parse_cmd->parsed())
            result = run_parse_check(parse_args, opt);
        else if (entangle_cmd->parsed())
            result = run_entangle(entangle_args, opt);
        else
            result = run_oracle(oracle_args, opt);
        emit(result, opt, out);
    } catch (const qlen::error& e) {
        json diagnostic;
        diagnostic["error"] = e.code_str();
        diagnostic["message"] = e.what();
        err << diagnostic.dump() << '\n';
        return 1;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace qlen::cli
