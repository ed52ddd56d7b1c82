// wedgese: spontaneous-emission rates for a dipole inside a perfectly
// conducting wedge of opening angle pi/q.
//
// Subcommands:
//   rate     one position -> normalized rates (CSV row or single value)
//   scan     1D sweep: radial, angular, bisector, or a single point
//   surface  2D (x, phi) sweep
//   figure   canned parameter sets for the standard plots (2, 3, 6)
//   verify   self-check suite (identities, limits, mode-sum comparison)
//
// Exit codes: 0 success, 1 usage error, 2 numerical non-convergence or
// failed verification, 3 I/O error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wedgese/oracle.hpp"
#include "wedgese/rates.hpp"
#include "wedgese/scan.hpp"
#include "wedgese/verify.hpp"

namespace {

struct AngleFlags {
    double phi = 0.0;       // radians
    double phi_frac = 0.0;  // fraction of the opening angle
    bool has_phi = false;
    bool has_frac = false;

    // Resolve to radians for wedge parameter q; exactly one source required.
    double resolve(int q) const {
        if (has_phi == has_frac)
            throw CLI::ValidationError("angle", "give exactly one of --phi or --phi-frac");
        if (has_frac) {
            if (phi_frac < 0.0 || phi_frac > 1.0)
                throw CLI::ValidationError("--phi-frac", "must lie in [0, 1]");
            return phi_frac * wedgese::WedgeGeometry(q).alpha();
        }
        return phi;
    }
};

wedgese::DipoleWeights parse_weights(const std::string& text) {
    double w[3];
    char trailing;
    const int got = std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &w[0], &w[1], &w[2], &trailing);
    if (got != 3)
        throw CLI::ValidationError("--weights", "expected three comma-separated numbers, e.g. 0.5,0,0.5");
    return wedgese::DipoleWeights(w[0], w[1], w[2]);
}

void add_format_flag(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "Output format (only csv is supported)")
        ->check(CLI::IsMember({"csv"}))
        ->capture_default_str();
}

void emit_rows(const std::vector<wedgese::scan::ScanRow>& rows, const std::string& out) {
    if (out.empty())
        std::cout << wedgese::scan::csv_string(rows);
    else
        wedgese::scan::write_csv(rows, out);
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string trimmed(const std::string& s) {
    const auto l = s.find_first_not_of(" \t\r");
    if (l == std::string::npos) return {};
    const auto r = s.find_last_not_of(" \t\r");
    return s.substr(l, r - l + 1);
}

// Flat key=value config support.  The file supplies defaults only: each
// entry becomes a "--key value" pair appended to the command line unless
// the flag was given explicitly, so flags always override the file.
std::vector<std::string> apply_config_defaults(std::vector<std::string> tokens) {
    std::string path;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "--config" && i + 1 < tokens.size())
            path = tokens[i + 1];
        else if (tokens[i].rfind("--config=", 0) == 0)
            path = tokens[i].substr(9);
    }
    if (path.empty()) return tokens;

    std::ifstream file(path);
    if (!file) throw CLI::ValidationError("--config", "cannot read '" + path + "'");

    const auto given = [&tokens](const std::string& flag) {
        for (const std::string& t : tokens)
            if (t == flag || t.rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError(
                "--config", path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        if (key.empty())
            throw CLI::ValidationError(
                "--config", path + ":" + std::to_string(lineno) + ": empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        // the two angle spellings are exclusive: either one on the command
        // line silences both config keys
        if ((key == "phi" || key == "phi-frac") && (given("--phi") || given("--phi-frac")))
            continue;
        tokens.push_back(flag);
        tokens.push_back(value);
    }
    return tokens;
}

int run_verify_command(const std::string& level, int nodes) {
    const auto report = wedgese::verify::run_verify(
        level == "full" ? wedgese::verify::Level::Full : wedgese::verify::Level::Fast, nodes);
    for (const auto& check : report.checks) {
        std::printf("%-4s %-28s max-residual %.3e  (bound %.1e)%s%s\n",
                    check.pass ? "PASS" : "FAIL", check.name.c_str(), check.residual,
                    check.bound, check.note.empty() ? "" : "  ", check.note.c_str());
    }
    if (!report.all_pass()) {
        std::printf("verification FAILED\n");
        return 2;
    }
    std::printf("all checks passed\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spontaneous emission of a dipole inside a perfectly conducting wedge"};
    app.require_subcommand(1);
    std::string config_path;  // consumed by apply_config_defaults before the parse

    // ---- rate ----
    auto* rate = app.add_subcommand("rate", "Normalized rates at one position");
    rate->add_option("--config", config_path, "Read defaults from a flat key=value file");
    int rate_q = 1;
    double rate_x = 0.0;
    AngleFlags rate_angle;
    std::string rate_pol, rate_weights = "0.3333333333333333,0.3333333333333333,0.3333333333333334";
    std::string rate_out, rate_format = "csv";
    rate->add_option("--q", rate_q, "Wedge parameter: opening angle is pi/q")->check(CLI::PositiveNumber);
    rate->add_option("--x", rate_x, "Dimensionless distance from the edge, k*rho")->required();
    auto* rp = rate->add_option("--phi", rate_angle.phi, "Angle from a plate, radians");
    auto* rf = rate->add_option("--phi-frac", rate_angle.phi_frac, "Angle as a fraction of pi/q");
    rp->excludes(rf);
    rf->excludes(rp);
    rate->add_option("--pol", rate_pol, "Print only this column (rho|phi|z|total)")
        ->check(CLI::IsMember({"rho", "phi", "z", "total"}));
    rate->add_option("--weights", rate_weights, "Dipole fractions w_rho,w_phi,w_z (sum 1)")
        ->capture_default_str();
    rate->add_option("--out", rate_out, "Write the CSV row here instead of stdout");
    add_format_flag(rate, rate_format);

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "1D sweep of the rates");
    scan->add_option("--config", config_path, "Read defaults from a flat key=value file");
    int scan_q = 1, scan_threads = 1, scan_xc = 500, scan_pc = 500;
    double scan_x = 0.0, scan_xmin = 0.0, scan_xmax = 0.0;
    double scan_pmin = 0.0, scan_pmax = 0.0;
    AngleFlags scan_angle;
    std::string scan_mode = "radial", scan_unit = "rad";
    std::string scan_weights = "0.3333333333333333,0.3333333333333333,0.3333333333333334";
    std::string scan_out, scan_format = "csv";
    scan->add_option("--q", scan_q, "Wedge parameter")->check(CLI::PositiveNumber);
    scan->add_option("--mode", scan_mode, "radial | angular | bisector | point")
        ->check(CLI::IsMember({"radial", "angular", "bisector", "point"}))
        ->capture_default_str();
    scan->add_option("--x", scan_x, "Fixed x (angular and point modes)");
    scan->add_option("--x-min", scan_xmin, "Sweep start (radial/bisector)")->capture_default_str();
    scan->add_option("--x-max", scan_xmax, "Sweep end (radial/bisector)");
    scan->add_option("--x-count", scan_xc, "Sweep points")->check(CLI::PositiveNumber)->capture_default_str();
    auto* sp = scan->add_option("--phi", scan_angle.phi, "Fixed angle, radians (radial/point)");
    auto* sf = scan->add_option("--phi-frac", scan_angle.phi_frac, "Fixed angle as fraction of pi/q");
    sp->excludes(sf);
    sf->excludes(sp);
    scan->add_option("--phi-min", scan_pmin, "Angular sweep start");
    scan->add_option("--phi-max", scan_pmax, "Angular sweep end (default: the opening angle)");
    scan->add_option("--phi-count", scan_pc, "Angular sweep points")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_option("--phi-unit", scan_unit, "Unit of --phi-min/--phi-max: rad | frac")
        ->check(CLI::IsMember({"rad", "frac"}))
        ->capture_default_str();
    scan->add_option("--weights", scan_weights, "Dipole fractions w_rho,w_phi,w_z")->capture_default_str();
    scan->add_option("--out", scan_out, "Output CSV path (default: stdout)");
    scan->add_option("--threads", scan_threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_format_flag(scan, scan_format);

    // ---- surface ----
    auto* surf = app.add_subcommand("surface", "2D (x, phi) sweep");
    surf->add_option("--config", config_path, "Read defaults from a flat key=value file");
    int surf_q = 1, surf_threads = 1, surf_xc = 200, surf_pc = 100;
    double surf_xmin = 0.0, surf_xmax = 0.0, surf_pmin = 0.0, surf_pmax = 0.0;
    std::string surf_unit = "rad";
    std::string surf_weights = "0.3333333333333333,0.3333333333333333,0.3333333333333334";
    std::string surf_out, surf_format = "csv";
    surf->add_option("--q", surf_q, "Wedge parameter")->check(CLI::PositiveNumber);
    surf->add_option("--x-min", surf_xmin, "x sweep start")->capture_default_str();
    surf->add_option("--x-max", surf_xmax, "x sweep end")->required();
    surf->add_option("--x-count", surf_xc, "x sweep points")->check(CLI::PositiveNumber)->capture_default_str();
    surf->add_option("--phi-min", surf_pmin, "phi sweep start")->capture_default_str();
    surf->add_option("--phi-max", surf_pmax, "phi sweep end (default: the opening angle)");
    surf->add_option("--phi-count", surf_pc, "phi sweep points")->check(CLI::PositiveNumber)->capture_default_str();
    surf->add_option("--phi-unit", surf_unit, "Unit of --phi-min/--phi-max: rad | frac")
        ->check(CLI::IsMember({"rad", "frac"}))
        ->capture_default_str();
    surf->add_option("--weights", surf_weights, "Dipole fractions w_rho,w_phi,w_z")->capture_default_str();
    surf->add_option("--out", surf_out, "Output CSV path (default: stdout)");
    surf->add_option("--threads", surf_threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_format_flag(surf, surf_format);

    // ---- figure ----
    auto* fig = app.add_subcommand("figure", "Write the canned figure data sets");
    fig->add_option("--config", config_path, "Read defaults from a flat key=value file");
    int fig_id = 0, fig_q = 0, fig_threads = 1;
    std::string fig_out;
    fig->add_option("id", fig_id, "Figure id: 2, 3, or 6")->required();
    fig->add_option("--q", fig_q, "Wedge parameter for figure 6 (default: all of 30, 60, 90)");
    fig->add_option("--out", fig_out, "Output path (single-file runs only)");
    fig->add_option("--threads", fig_threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "Run the self-check suite");
    ver->add_option("--config", config_path, "Read defaults from a flat key=value file");
    std::string ver_level = "fast";
    int ver_nodes = 400;
    ver->add_option("--level", ver_level, "fast | full (full adds the mode-sum grid)")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    ver->add_option("--nodes", ver_nodes, "Mode-sum quadrature nodes")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        std::vector<std::string> tokens(argv + 1, argv + argc);
        tokens = apply_config_defaults(std::move(tokens));
        std::reverse(tokens.begin(), tokens.end());  // parse() pops from the back
        app.parse(tokens);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // help/version exit clean, anything else is usage
    }

    try {
        if (app.got_subcommand(rate)) {
            rate_angle.has_phi = rp->count() > 0;
            rate_angle.has_frac = rf->count() > 0;
            const wedgese::WedgeGeometry geom(rate_q);
            const wedgese::AtomPosition pos(rate_x, rate_angle.resolve(rate_q));
            const auto r = wedgese::normalized_rates(geom, pos, parse_weights(rate_weights));
            const std::vector<wedgese::scan::ScanRow> rows{
                {pos.x, pos.phi, r.norm_rho, r.norm_phi, r.norm_z, r.norm_total}};
            if (!rate_out.empty()) wedgese::scan::write_csv(rows, rate_out);
            if (rate_pol.empty()) {
                if (rate_out.empty()) std::cout << wedgese::scan::csv_string(rows);
            } else {
                const double v = rate_pol == "rho"   ? r.norm_rho
                                 : rate_pol == "phi" ? r.norm_phi
                                 : rate_pol == "z"   ? r.norm_z
                                                     : r.norm_total;
                std::cout << format_value(v) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(scan)) {
            scan_angle.has_phi = sp->count() > 0;
            scan_angle.has_frac = sf->count() > 0;
            wedgese::scan::ScanSpec spec;
            spec.q = scan_q;
            spec.weights = parse_weights(scan_weights);
            spec.output_path = scan_out;
            const double alpha = wedgese::WedgeGeometry(scan_q).alpha();
            const double unit = (scan_unit == "frac") ? alpha : 1.0;
            if (scan_mode == "radial" || scan_mode == "bisector") {
                if (scan->count("--x-max") == 0)
                    throw CLI::ValidationError("--x-max", "required for radial/bisector scans");
                spec.x_range = {scan_xmin, scan_xmax, scan_xc};
                if (scan_mode == "radial") {
                    spec.mode = wedgese::scan::ScanMode::Radial;
                    spec.phi_range = {scan_angle.resolve(scan_q), 0.0, 1};
                } else {
                    spec.mode = wedgese::scan::ScanMode::Bisector;
                }
            } else if (scan_mode == "angular") {
                if (scan->count("--x") == 0)
                    throw CLI::ValidationError("--x", "required for angular scans");
                spec.mode = wedgese::scan::ScanMode::Angular;
                spec.x_range = {scan_x, 0.0, 1};
                const double pmax = scan->count("--phi-max") ? scan_pmax * unit : alpha;
                spec.phi_range = {scan_pmin * unit, pmax, scan_pc};
            } else {  // point
                if (scan->count("--x") == 0)
                    throw CLI::ValidationError("--x", "required for point evaluation");
                spec.mode = wedgese::scan::ScanMode::Point;
                spec.x_range = {scan_x, 0.0, 1};
                spec.phi_range = {scan_angle.resolve(scan_q), 0.0, 1};
            }
            emit_rows(wedgese::scan::run_scan(spec, scan_threads), scan_out);
            return 0;
        }

        if (app.got_subcommand(surf)) {
            wedgese::scan::ScanSpec spec;
            spec.q = surf_q;
            spec.mode = wedgese::scan::ScanMode::Surface;
            spec.weights = parse_weights(surf_weights);
            spec.output_path = surf_out;
            const double alpha = wedgese::WedgeGeometry(surf_q).alpha();
            const double unit = (surf_unit == "frac") ? alpha : 1.0;
            const double pmax = surf->count("--phi-max") ? surf_pmax * unit : alpha;
            spec.x_range = {surf_xmin, surf_xmax, surf_xc};
            spec.phi_range = {surf_pmin * unit, pmax, surf_pc};
            emit_rows(wedgese::scan::run_scan(spec, surf_threads), surf_out);
            return 0;
        }

        if (app.got_subcommand(fig)) {
            std::vector<int> qs;
            if (fig_id == 6 && fig_q == 0)
                qs = {30, 60, 90};
            else
                qs = {fig_q};
            if (!fig_out.empty() && qs.size() > 1)
                throw CLI::ValidationError("--out", "figure 6 writes three files; pass --q to pick one");
            for (const int q : qs) {
                auto spec = wedgese::scan::figure_preset(fig_id, q);
                if (!fig_out.empty()) spec.output_path = fig_out;
                wedgese::scan::write_csv(wedgese::scan::run_scan(spec, fig_threads),
                                         spec.output_path);
                std::printf("wrote %s\n", spec.output_path.c_str());
            }
            return 0;
        }

        if (app.got_subcommand(ver)) return run_verify_command(ver_level, ver_nodes);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const wedgese::scan::io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const wedgese::oracle::non_convergence_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 2;
    } catch (const wedgese::oracle::truncation_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
