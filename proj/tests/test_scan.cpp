#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wedgese/scan.hpp"
#include "wedgese/specfun.hpp"
#include "reference_values.hpp"

using namespace wedgese;
using scan::Range;
using scan::RateColumn;
using scan::ScanMode;
using scan::ScanRow;
using scan::ScanSpec;

namespace {

constexpr double kPi = std::numbers::pi;

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// nearest row of a surface scan to a requested (x, phi)
const ScanRow& nearest(const std::vector<ScanRow>& rows, double x, double phi) {
    std::size_t best = 0;
    double best_d = 1e300;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double d = std::fabs(rows[i].x - x) + std::fabs(rows[i].phi - phi);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return rows[best];
}

}  // namespace

TEST_CASE("point scan returns the single requested sample") {
    ScanSpec spec;
    spec.q = 1;
    spec.mode = ScanMode::Point;
    spec.x_range = Range{5.0, 123.0, 77};   // collapsed: only min matters
    spec.phi_range = Range{0.5 * kPi, 0.5 * kPi, 1};
    const std::vector<ScanRow> rows = scan::run_scan(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].x == 5.0);
    CHECK(rows[0].phi == 0.5 * kPi);
    CHECK(std::fabs(rows[0].rate_z - testing::kRateZ_q1_x5) < 1e-14);
}

TEST_CASE("bisector scan fixes phi to alpha/2 and ignores phi_range") {
    ScanSpec spec;
    spec.q = 2;
    spec.mode = ScanMode::Bisector;
    spec.x_range = Range{0.0, 4.0, 5};
    spec.phi_range = Range{99.0, -99.0, 0};  // bogus on purpose: must be ignored
    const std::vector<ScanRow> rows = scan::run_scan(spec);
    REQUIRE(rows.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(rows[i].phi == 0.5 * WedgeGeometry(2).alpha());
        CHECK(rows[i].x == doctest::Approx(i * 1.0).epsilon(1e-15));
    }
}

TEST_CASE("radial and angular scans sweep one coordinate") {
    ScanSpec spec;
    spec.q = 3;
    spec.mode = ScanMode::Radial;
    spec.x_range = Range{1.0, 2.0, 11};
    spec.phi_range = Range{0.3, 0.0, 1};
    std::vector<ScanRow> rows = scan::run_scan(spec);
    REQUIRE(rows.size() == 11);
    for (const ScanRow& r : rows) CHECK(r.phi == 0.3);
    CHECK(rows.front().x == 1.0);
    CHECK(rows.back().x == 2.0);

    spec.mode = ScanMode::Angular;
    spec.x_range = Range{2.0, 0.0, 1};
    spec.phi_range = Range{0.0, WedgeGeometry(3).alpha(), 7};
    rows = scan::run_scan(spec);
    REQUIRE(rows.size() == 7);
    for (const ScanRow& r : rows) CHECK(r.x == 2.0);
    CHECK(rows.front().phi == 0.0);
    CHECK(rows.back().phi == doctest::Approx(WedgeGeometry(3).alpha()).epsilon(1e-15));
}

TEST_CASE("surface scan is row-major with x outermost") {
    ScanSpec spec;
    spec.q = 2;
    spec.mode = ScanMode::Surface;
    spec.x_range = Range{0.0, 2.0, 3};
    spec.phi_range = Range{0.0, WedgeGeometry(2).alpha(), 4};
    const std::vector<ScanRow> rows = scan::run_scan(spec);
    REQUIRE(rows.size() == 12);
    for (int ix = 0; ix < 3; ++ix) {
        for (int ip = 0; ip < 4; ++ip) {
            const ScanRow& r = rows[ix * 4 + ip];
            CHECK(r.x == doctest::Approx(ix * 1.0).epsilon(1e-15));
            CHECK(r.phi == doctest::Approx(ip * WedgeGeometry(2).alpha() / 3).epsilon(1e-15));
        }
    }
}

TEST_CASE("every row carries all four rates and the weighted total") {
    ScanSpec spec;
    spec.q = 4;
    spec.mode = ScanMode::Surface;
    spec.x_range = Range{0.0, 6.0, 9};
    spec.phi_range = Range{0.0, WedgeGeometry(4).alpha(), 9};
    spec.weights = DipoleWeights(0.2, 0.5, 0.3);
    spec.polarizations = {RateColumn::Z};  // reporting intent; columns unaffected
    for (const ScanRow& r : scan::run_scan(spec)) {
        CHECK(r.rate_total ==
              spec.weights.rho * r.rate_rho + spec.weights.phi * r.rate_phi +
                  spec.weights.z * r.rate_z);
    }
}

TEST_CASE("thread count never changes the bytes") {
    ScanSpec spec;
    spec.q = 3;
    spec.mode = ScanMode::Surface;
    spec.x_range = Range{0.0, 8.0, 37};
    spec.phi_range = Range{0.0, WedgeGeometry(3).alpha(), 23};
    const std::string one = scan::csv_string(scan::run_scan(spec, 1));
    const std::string three = scan::csv_string(scan::run_scan(spec, 3));
    const std::string eight = scan::csv_string(scan::run_scan(spec, 8));
    CHECK(one == three);
    CHECK(one == eight);
}

TEST_CASE("csv format: header, 12 significant digits, LF only") {
    const std::vector<ScanRow> rows = {{5.0, 0.5, 1.0, 2.0, 3.0, 4.0}};
    const std::string body = scan::csv_string(rows);
    CHECK(body ==
          "x,phi,rate_rho,rate_phi,rate_z,rate_total\n"
          "5.00000000000e+00,5.00000000000e-01,1.00000000000e+00,"
          "2.00000000000e+00,3.00000000000e+00,4.00000000000e+00\n");
    CHECK(body.find('\r') == std::string::npos);

    // no rows -> header only, still LF-terminated
    CHECK(scan::csv_string({}) == "x,phi,rate_rho,rate_phi,rate_z,rate_total\n");
}

TEST_CASE("write_csv round trip is byte-identical") {
    ScanSpec spec;
    spec.q = 2;
    spec.mode = ScanMode::Radial;
    spec.x_range = Range{0.0, 3.0, 20};
    spec.phi_range = Range{0.4, 0.0, 1};
    const std::vector<ScanRow> rows = scan::run_scan(spec);

    const std::string path = "wedgese_test_roundtrip.csv";
    scan::write_csv(rows, path);
    const std::string first = slurp(path);
    CHECK(first == scan::csv_string(rows));
    scan::write_csv(rows, path);  // rewrite: same bytes again
    CHECK(slurp(path) == first);
    std::remove(path.c_str());
}

TEST_CASE("write_csv reports unwritable destinations") {
    CHECK_THROWS_AS(scan::write_csv({}, "/nonexistent_dir_wedgese/out.csv"), scan::io_error);
}

TEST_CASE("grid validation points at the offending field") {
    ScanSpec spec;
    spec.q = 2;
    spec.mode = ScanMode::Radial;
    spec.x_range = Range{2.0, 1.0, 5};  // min > max on a swept axis
    spec.phi_range = Range{0.1, 0.0, 1};
    try {
        scan::run_scan(spec);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("x_range") != std::string::npos);
    }

    spec.x_range = Range{0.0, 1.0, 0};  // zero samples
    CHECK_THROWS_AS(scan::run_scan(spec), std::invalid_argument);

    spec.x_range = Range{-1.0, 1.0, 5};  // negative distance
    try {
        scan::run_scan(spec);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("x_range") != std::string::npos);
    }

    spec.x_range = Range{0.0, 1.0, 5};
    spec.mode = ScanMode::Angular;
    spec.phi_range = Range{0.0, 2.0, 5};  // outside the q = 2 wedge
    try {
        scan::run_scan(spec);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("phi_range") != std::string::npos);
    }

    spec.phi_range = Range{0.0, WedgeGeometry(2).alpha(), 5};
    spec.polarizations.clear();
    try {
        scan::run_scan(spec);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("polarizations") != std::string::npos);
    }
}

TEST_CASE("figure presets") {
    SUBCASE("surface maps for the 60-degree wedge") {
        const ScanSpec f2 = scan::figure_preset(2);
        CHECK(f2.q == 3);
        CHECK(f2.mode == ScanMode::Surface);
        CHECK(f2.x_range.max == 12.0);
        CHECK(f2.x_range.count == 200);
        CHECK(f2.phi_range.count == 100);
        CHECK(f2.phi_range.max == WedgeGeometry(3).alpha());
        REQUIRE(f2.polarizations.size() == 1);
        CHECK(f2.polarizations[0] == RateColumn::Z);
        CHECK(f2.weights.z == 1.0);
        CHECK(f2.output_path == "figure2.csv");

        const ScanSpec f3 = scan::figure_preset(3);
        CHECK(f3.polarizations[0] == RateColumn::Phi);
        CHECK(f3.weights.phi == 1.0);
        CHECK(f3.output_path == "figure3.csv");
        // same grid as figure 2
        CHECK(f3.x_range.count == f2.x_range.count);
        CHECK(f3.phi_range.count == f2.phi_range.count);
    }

    SUBCASE("sharp-wedge jump study") {
        const ScanSpec f6 = scan::figure_preset(6);
        CHECK(f6.q == 60);
        CHECK(f6.mode == ScanMode::Bisector);
        CHECK(f6.x_range.max == 240.0);
        CHECK(f6.x_range.count == 500);
        CHECK(f6.weights.rho == 0.5);
        CHECK(f6.weights.phi == 0.0);
        CHECK(f6.weights.z == 0.5);
        CHECK(f6.output_path == "figure6_q60.csv");

        const ScanSpec f6_30 = scan::figure_preset(6, 30);
        CHECK(f6_30.q == 30);
        CHECK(f6_30.x_range.max == 120.0);
        CHECK(f6_30.output_path == "figure6_q30.csv");
    }

    SUBCASE("bad requests") {
        CHECK_THROWS_AS(scan::figure_preset(1), std::invalid_argument);
        CHECK_THROWS_AS(scan::figure_preset(7), std::invalid_argument);
        CHECK_THROWS_AS(scan::figure_preset(2, 5), std::invalid_argument);
        CHECK_THROWS_AS(scan::figure_preset(6, -2), std::invalid_argument);
    }
}

TEST_CASE("surface maps show the plate/bisector contrast") {
    // near a plate the z dipole is parallel to the conductor (suppressed)
    // while the phi dipole is normal to it (enhanced); compare against the
    // wedge interior at the same radius
    const double a = WedgeGeometry(3).alpha();
    const std::vector<ScanRow> z_map = scan::run_scan(scan::figure_preset(2), 4);
    const ScanRow& z_plate = nearest(z_map, 6.0, a / 20.0);
    const ScanRow& z_mid = nearest(z_map, 6.0, a / 2.0);
    CHECK(z_plate.rate_z < z_mid.rate_z);

    const std::vector<ScanRow> p_map = scan::run_scan(scan::figure_preset(3), 4);
    const ScanRow& p_plate = nearest(p_map, 6.0, a / 20.0);
    const ScanRow& p_mid = nearest(p_map, 6.0, a / 2.0);
    CHECK(p_plate.rate_phi > p_mid.rate_phi);
}

TEST_CASE("sharp-wedge scan stays dark until the first channel opens") {
    // on the bisector of a q = 60 wedge the rate is negligible out to
    // x ~ q and switches on in a sharp jump there
    const std::vector<ScanRow> rows = scan::run_scan(scan::figure_preset(6), 4);
    double before = 0.0, after = 0.0;
    for (const ScanRow& r : rows) {
        if (r.x >= 12.0 && r.x <= 48.0) before = std::max(before, r.rate_total);
        if (r.x >= 60.0 && r.x <= 72.0) after = std::max(after, r.rate_total);
    }
    CHECK(10.0 * before <= after);
}
