#include "qportrait/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace qportrait {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must have \"dim\" and \"entries\"");
    const int n = j.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("matrix JSON: dim must be positive");
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix JSON: entries must be dim rows");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix JSON: row length mismatch");
        for (int jj = 0; jj < n; ++jj) {
            const json& e = row.at(static_cast<size_t>(jj));
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("matrix JSON: entry must be [re, im]");
            m(i, jj) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
        }
    }
    return m;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return matrix_from_json(json::parse(in));
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

json number_to_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    // round to 15 significant digits so printed reports are stable
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

json report_to_json(const InequalityReport& r) {
    json j{{"label", r.label},       {"lhs", number_to_json(r.lhs)},
           {"rhs", number_to_json(r.rhs)}, {"gap", number_to_json(r.gap)},
           {"holds", r.holds},       {"tol", number_to_json(r.gap_tol)}};
    if (r.indeterminate) j["indeterminate"] = true;
    return j;
}

json fuzz_report_to_json(const FuzzReport& r) {
    json witness = json::object();
    for (const auto& [name, m] : r.argmin.matrices) witness[name] = matrix_to_json(m);
    for (const auto& [name, v] : r.argmin.vectors) {
        json arr = json::array();
        for (double x : v) arr.push_back(number_to_json(x));
        witness[name] = std::move(arr);
    }
    json hist{{"edges", json::array()}, {"counts", r.histogram.counts},
              {"underflow", r.histogram.underflow}};
    for (double e : r.histogram.edges) hist["edges"].push_back(number_to_json(e));
    return json{{"min_gap", number_to_json(r.min_gap)},
                {"violations", r.violations},
                {"samples", r.samples},
                {"argmin", std::move(witness)},
                {"histogram", std::move(hist)}};
}

void write_histogram_csv(const std::string& path, const GapHistogram& h) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << "bin_low,bin_high,count\n";
    char buf[128];
    if (h.underflow > 0) {
        std::snprintf(buf, sizeof buf, "-inf,0,%ld\n", h.underflow);
        out << buf;
    }
    for (size_t i = 0; i + 1 < h.edges.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%ld\n", h.edges[i], h.edges[i + 1],
                      h.counts[i]);
        out << buf;
    }
}

}  // namespace qportrait
