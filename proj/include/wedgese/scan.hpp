#pragma once

// Grid sweeps of the normalized emission rates and CSV output: the data
// behind single-point queries, radial/angular/bisector line cuts, and
// (x, phi) surface maps, plus canned parameter sets for the standard
// figures (z- and phi-polarization surface maps for the 60-degree wedge,
// and the sharp-wedge jump study).

#include <stdexcept>
#include <string>
#include <vector>

#include "wedgese/rates.hpp"

namespace wedgese::scan {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ScanMode { Point, Radial, Angular, Bisector, Surface };
enum class RateColumn { Rho, Phi, Z, Total };

struct Range {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
};

struct ScanSpec {
    int q = 1;
    ScanMode mode = ScanMode::Point;
    Range x_range;    // radial/bisector/surface: swept; otherwise fixed at min
    Range phi_range;  // angular/surface: swept; bisector ignores it (phi = alpha/2)
    // Which columns the caller is interested in; every ScanRow always
    // carries all four (they share one evaluation), this only steers
    // reporting in the CLI and records the intent of figure presets.
    std::vector<RateColumn> polarizations{RateColumn::Rho, RateColumn::Phi,
                                          RateColumn::Z, RateColumn::Total};
    DipoleWeights weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    std::string output_path;  // empty = caller decides (CLI prints to stdout)
};

struct ScanRow {
    double x;
    double phi;
    double rate_rho;    // Gamma/Gamma_free per polarization
    double rate_phi;
    double rate_z;
    double rate_total;  // weighted by ScanSpec::weights
};

// Evaluate the grid in row-major order (x outer, phi inner).  Work may be
// split across threads; rows are written into their index slot, so the
// result is identical for any thread count.
std::vector<ScanRow> run_scan(const ScanSpec& spec, int threads = 1);

// Canned scans: id 2 -> z-polarization surface map, q = 3; id 3 -> same
// grid for the phi polarization; id 6 -> bisector jump study with dipole
// weights (1/2, 0, 1/2), x up to 4q, for q = 60 by default (the study
// spans q in {30, 60, 90}; pass q to pick one).
ScanSpec figure_preset(int id, int q = 0);

// CSV: UTF-8, LF line endings, header x,phi,rate_rho,rate_phi,rate_z,
// rate_total, 12 significant digits.  Rewriting the same rows is
// byte-identical.  Throws io_error on any write failure.
void write_csv(const std::vector<ScanRow>& rows, const std::string& path);

// Same bytes as write_csv, as a string (for stdout output).
std::string csv_string(const std::vector<ScanRow>& rows);

}  // namespace wedgese::scan
