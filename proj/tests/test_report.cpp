#include <cstdlib>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tauberlab/report.hpp"

using namespace tauberlab;

TEST_CASE("format_double round-trips arbitrary doubles") {
    std::mt19937_64 rng(0x5eed0501);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::ldexp(mant(rng), expo(rng));
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(std::strtod(format_double(0.0).c_str(), nullptr) == 0.0);
}

TEST_CASE("convergence csv carries the fixed header and exact values") {
    std::vector<ConvergenceRow> rows = {
        {100.0, 94.04531122, 0.9404531122, 25, 1.1512925465},
        {1000.0, 996.6809, 0.9966809, 168, 1.1605028868689038},
    };
    std::stringstream ss;
    write_convergence_csv(rows, ss);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "x,psi,psi_over_x,pi,pi_logx_over_x");
    ss.seekg(0);
    const CsvTable table = read_csv_table(ss);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][0] == rows[0].x);
    CHECK(table.rows[0][1] == rows[0].psi);
    CHECK(table.rows[0][2] == rows[0].psi_over_x);
    CHECK(table.rows[0][3] == 25.0);
    CHECK(table.rows[1][4] == rows[1].pi_logx_over_x);
}

TEST_CASE("crosscheck csv carries the fixed header and a 0/1 pass flag") {
    std::vector<CrosscheckRow> rows(1);
    rows[0].s = {2.0, 0.0};
    rows[0].zeta_side = {0.2849709, 0.0};
    rows[0].laplace_side = {0.2849698, 0.0};
    rows[0].tail_bound = 1.04e-6;
    rows[0].zeta_certificate = 1e-20;
    rows[0].abs_diff = 1.1e-6;
    rows[0].pass = true;
    std::stringstream ss;
    write_crosscheck_csv(rows, ss);
    std::string header;
    std::getline(ss, header);
    CHECK(header ==
          "sigma,t,zeta_side_re,zeta_side_im,laplace_re,laplace_im,tail_bound,abs_diff,pass");
    ss.seekg(0);
    const CsvTable table = read_csv_table(ss);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0][0] == 2.0);
    CHECK(table.rows[0][6] == rows[0].tail_bound);
    CHECK(table.rows[0][8] == 1.0);
}

TEST_CASE("report json uses the csv field names") {
    PntReport report;
    report.x_max = 1e6;
    report.convergence.push_back({100.0, 94.045, 0.94045, 25, 1.15129});
    CrosscheckRow c;
    c.s = {2.0, 0.0};
    c.zeta_side = {0.28497, 0.0};
    c.laplace_side = {0.28497, 0.0};
    c.tail_bound = 1.04e-6;
    c.abs_diff = 1e-6;
    c.pass = true;
    report.crosscheck.push_back(c);
    report.k_a.push_back({2.0, 0.6931471805599453});
    report.line_scans.push_back({0.5, 50.0, 0.01, 17.0, 0.5, 4951});

    std::stringstream ss;
    write_report_json(report, ss);
    const auto doc = nlohmann::json::parse(ss.str());
    CHECK(doc["x_max"] == 1e6);
    CHECK(doc["convergence"][0]["psi_over_x"] == 0.94045);
    CHECK(doc["convergence"][0]["pi"] == 25);
    CHECK(doc["crosscheck"][0]["zeta_side_re"] == 0.28497);
    CHECK(doc["crosscheck"][0]["pass"] == true);
    CHECK(doc["k_a"][0]["k_a"] == 0.6931471805599453);
    CHECK(doc["line_scans"][0]["points"] == 4951);
}

TEST_CASE("error records are machine readable") {
    std::stringstream ss;
    write_error_record("domain_error", "A must be >= 1", ss);
    const auto doc = nlohmann::json::parse(ss.str());
    CHECK(doc["error"]["type"] == "domain_error");
    CHECK(doc["error"]["what"] == "A must be >= 1");
}

TEST_CASE("csv reader rejects malformed tables") {
    std::stringstream missing("x,y\n1.0\n");
    CHECK_THROWS_AS(read_csv_table(missing), std::runtime_error);
    std::stringstream garbage("x\nabc\n");
    CHECK_THROWS_AS(read_csv_table(garbage), std::runtime_error);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_csv_table(empty), std::runtime_error);
}
