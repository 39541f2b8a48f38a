#pragma once

#include <json.hpp>

#include "qportrait/search.hpp"

namespace qportrait {

// Matrix wire format: {"dim": N, "entries": [[[re,im],...],...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

// Report numbers carry 15 significant digits; +inf serializes as "inf".
nlohmann::json number_to_json(double v);
nlohmann::json report_to_json(const InequalityReport& r);
nlohmann::json fuzz_report_to_json(const FuzzReport& r);

void write_histogram_csv(const std::string& path, const GapHistogram& h);

}  // namespace qportrait
