#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tauberlab/pnt.hpp"

namespace tauberlab {

// 17 significant digits: round-trips double exactly and diffs stably.
std::string format_double(double x);

// header: x,psi,psi_over_x,pi,pi_logx_over_x
void write_convergence_csv(std::span<const ConvergenceRow> rows, std::ostream& os);

// header: sigma,t,zeta_side_re,zeta_side_im,laplace_re,laplace_im,tail_bound,abs_diff,pass
// pass serialized as 0/1
void write_crosscheck_csv(std::span<const CrosscheckRow> rows, std::ostream& os);

// The whole report as one JSON document; field names match the CSV headers.
void write_report_json(const PntReport& report, std::ostream& os);

// Machine-readable failure record for CLI error paths.
void write_error_record(const std::string& type, const std::string& what, std::ostream& os);

// Generic all-numeric CSV: used to verify that emitted tables re-parse to the
// exact in-memory values.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable read_csv_table(std::istream& is);

}  // namespace tauberlab
