#include "tauberlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tauberlab {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_convergence_csv(std::span<const ConvergenceRow> rows, std::ostream& os) {
    os << "x,psi,psi_over_x,pi,pi_logx_over_x\n";
    for (const ConvergenceRow& r : rows) {
        os << format_double(r.x) << ',' << format_double(r.psi) << ','
           << format_double(r.psi_over_x) << ',' << r.pi << ','
           << format_double(r.pi_logx_over_x) << '\n';
    }
}

void write_crosscheck_csv(std::span<const CrosscheckRow> rows, std::ostream& os) {
    os << "sigma,t,zeta_side_re,zeta_side_im,laplace_re,laplace_im,tail_bound,abs_diff,pass\n";
    for (const CrosscheckRow& r : rows) {
        os << format_double(r.s.sigma) << ',' << format_double(r.s.t) << ','
           << format_double(r.zeta_side.real()) << ',' << format_double(r.zeta_side.imag())
           << ',' << format_double(r.laplace_side.real()) << ','
           << format_double(r.laplace_side.imag()) << ',' << format_double(r.tail_bound)
           << ',' << format_double(r.abs_diff) << ',' << (r.pass ? 1 : 0) << '\n';
    }
}

namespace {

nlohmann::ordered_json convergence_json(const ConvergenceRow& r) {
    return {{"x", r.x},
            {"psi", r.psi},
            {"psi_over_x", r.psi_over_x},
            {"pi", r.pi},
            {"pi_logx_over_x", r.pi_logx_over_x}};
}

nlohmann::ordered_json crosscheck_json(const CrosscheckRow& r) {
    return {{"sigma", r.s.sigma},
            {"t", r.s.t},
            {"zeta_side_re", r.zeta_side.real()},
            {"zeta_side_im", r.zeta_side.imag()},
            {"laplace_re", r.laplace_side.real()},
            {"laplace_im", r.laplace_side.imag()},
            {"tail_bound", r.tail_bound},
            {"abs_diff", r.abs_diff},
            {"pass", r.pass}};
}

}  // namespace

void write_report_json(const PntReport& report, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["x_max"] = report.x_max;
    doc["convergence"] = nlohmann::ordered_json::array();
    for (const ConvergenceRow& r : report.convergence)
        doc["convergence"].push_back(convergence_json(r));
    doc["crosscheck"] = nlohmann::ordered_json::array();
    for (const CrosscheckRow& r : report.crosscheck)
        doc["crosscheck"].push_back(crosscheck_json(r));
    doc["k_a"] = nlohmann::ordered_json::array();
    for (const KaRow& r : report.k_a)
        doc["k_a"].push_back({{"a", r.a}, {"k_a", r.value}});
    doc["line_scans"] = nlohmann::ordered_json::array();
    for (const LineScanSummary& r : report.line_scans)
        doc["line_scans"].push_back({{"t_lo", r.t_lo},
                                     {"t_hi", r.t_hi},
                                     {"step", r.step},
                                     {"argmin_t", r.argmin_t},
                                     {"min_abs", r.min_abs},
                                     {"points", r.points}});
    os << doc.dump(2) << '\n';
}

void write_error_record(const std::string& type, const std::string& what, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["error"] = {{"type", type}, {"what", what}};
    os << doc.dump(2) << '\n';
}

CsvTable read_csv_table(std::istream& is) {
    CsvTable out;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream header(line);
        std::string field;
        while (std::getline(header, field, ',')) out.header.push_back(field);
    }
    if (out.header.empty()) throw std::runtime_error("csv: empty header");

    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        row.reserve(out.header.size());
        const char* p = line.c_str();
        for (std::size_t i = 0; i < out.header.size(); ++i) {
            char* end = nullptr;
            row.push_back(std::strtod(p, &end));
            if (end == p) throw std::runtime_error("csv: non-numeric cell in '" + line + "'");
            if (i + 1 < out.header.size()) {
                if (*end != ',')
                    throw std::runtime_error("csv: wrong column count in '" + line + "'");
                p = end + 1;
            } else if (*end != '\0') {
                throw std::runtime_error("csv: trailing garbage in '" + line + "'");
            }
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace tauberlab
