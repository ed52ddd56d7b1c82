#include "wedgese/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

namespace wedgese::scan {

namespace {

void require_range(const char* name, const Range& r, bool swept) {
    if (!std::isfinite(r.min) || !std::isfinite(r.max))
        throw std::invalid_argument(std::string(name) + ": bounds must be finite");
    if (r.count < 1)
        throw std::invalid_argument(std::string(name) + ": count must be >= 1");
    if (swept && r.min > r.max)
        throw std::invalid_argument(std::string(name) + ": min must be <= max");
}

double grid_value(const Range& r, int i) {
    if (r.count == 1) return r.min;
    return r.min + (r.max - r.min) * i / (r.count - 1);
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanSpec& spec, int threads) {
    const WedgeGeometry geom(spec.q);
    if (spec.polarizations.empty())
        throw std::invalid_argument("polarizations: select at least one column");

    // Resolve the grid per mode; fixed coordinates collapse to one sample.
    Range xr = spec.x_range;
    Range pr = spec.phi_range;
    switch (spec.mode) {
        case ScanMode::Point:
            xr.count = 1;
            pr.count = 1;
            break;
        case ScanMode::Radial:
            pr.count = 1;
            break;
        case ScanMode::Angular:
            xr.count = 1;
            break;
        case ScanMode::Bisector:
            pr = Range{0.5 * geom.alpha(), 0.5 * geom.alpha(), 1};
            break;
        case ScanMode::Surface:
            break;
    }
    require_range("x_range", xr, xr.count > 1);
    require_range("phi_range", pr, pr.count > 1);

    // Reject out-of-domain grids up front: the evaluation loop may run on
    // worker threads, where a thrown domain error would abort the process.
    const double x_hi = (xr.count == 1) ? xr.min : xr.max;
    if (xr.min < 0.0 || x_hi < 0.0)
        throw std::invalid_argument("x_range: values must be >= 0");
    const double phi_hi = (pr.count == 1) ? pr.min : pr.max;
    if (pr.min < 0.0 || phi_hi > geom.alpha() * (1.0 + 1e-12))
        throw std::invalid_argument("phi_range: values must lie in [0, pi/q]");

    const std::size_t total = static_cast<std::size_t>(xr.count) * pr.count;
    std::vector<ScanRow> rows(total);

    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int ix = static_cast<int>(idx / pr.count);
            const int ip = static_cast<int>(idx % pr.count);
            const double x = grid_value(xr, ix);
            const double phi = grid_value(pr, ip);
            const RateResult r = normalized_rates(geom, AtomPosition(x, phi), spec.weights);
            rows[idx] = ScanRow{x, phi, r.norm_rho, r.norm_phi, r.norm_z, r.norm_total};
        }
    };

    const int nthreads = std::clamp(threads, 1, 256);
    if (nthreads == 1 || total < 2) {
        fill(0, total);
    } else {
        // Block partition by row index: each row lands in its own slot, so
        // the output is byte-identical no matter how the blocks are cut.
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t begin = std::min(total, t * chunk);
            const std::size_t end = std::min(total, begin + chunk);
            if (begin < end) pool.emplace_back(fill, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

ScanSpec figure_preset(int id, int q) {
    ScanSpec spec;
    switch (id) {
        case 2:
        case 3: {
            if (q != 0 && q != 3)
                throw std::invalid_argument("figure presets 2 and 3 are defined for q = 3");
            spec.q = 3;
            spec.mode = ScanMode::Surface;
            spec.x_range = Range{0.0, 12.0, 200};
            spec.phi_range = Range{0.0, WedgeGeometry(3).alpha(), 100};
            if (id == 2) {
                spec.polarizations = {RateColumn::Z};
                spec.weights = DipoleWeights(0.0, 0.0, 1.0);
                spec.output_path = "figure2.csv";
            } else {
                spec.polarizations = {RateColumn::Phi};
                spec.weights = DipoleWeights(0.0, 1.0, 0.0);
                spec.output_path = "figure3.csv";
            }
            return spec;
        }
        case 6: {
            const int qq = (q == 0) ? 60 : q;
            if (qq < 1) throw std::invalid_argument("figure preset 6: q must be >= 1");
            spec.q = qq;
            spec.mode = ScanMode::Bisector;
            spec.x_range = Range{0.0, 4.0 * qq, 500};
            spec.polarizations = {RateColumn::Total};
            spec.weights = DipoleWeights(0.5, 0.0, 0.5);
            spec.output_path = "figure6_q" + std::to_string(qq) + ".csv";
            return spec;
        }
        default:
            throw std::invalid_argument("unknown figure id (choose 2, 3, or 6)");
    }
}

namespace {

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);  // 12 significant digits
    out += buf;
}

}  // namespace

std::string csv_string(const std::vector<ScanRow>& rows) {
    std::string out = "x,phi,rate_rho,rate_phi,rate_z,rate_total\n";
    for (const ScanRow& r : rows) {
        append_number(out, r.x);
        out += ',';
        append_number(out, r.phi);
        out += ',';
        append_number(out, r.rate_rho);
        out += ',';
        append_number(out, r.rate_phi);
        out += ',';
        append_number(out, r.rate_z);
        out += ',';
        append_number(out, r.rate_total);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<ScanRow>& rows, const std::string& path) {
    std::ofstream file(path, std::ios::binary);  // binary: keep LF on every platform
    if (!file) throw io_error("cannot open '" + path + "' for writing");
    const std::string body = csv_string(rows);
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    file.flush();
    if (!file.good()) throw io_error("write to '" + path + "' failed");
}

}  // namespace wedgese::scan
