#pragma once

#include <string>

#include <json.hpp>

#include "magnus/classify.hpp"
#include "magnus/magnus.hpp"

namespace magnus {

// Schema-stable JSON: fixed field order, "schema": 1 everywhere, no volatile
// fields, so identical inputs give byte-identical output.
nlohmann::ordered_json magnus_report_json(const std::string& expr, const Group& g,
                                          const MagnusReport& r);
std::string magnus_report_text(const std::string& expr, const Group& g,
                               const MagnusReport& r);

nlohmann::ordered_json invariants_json(const std::string& expr, const Group& g);
std::string invariants_text(const std::string& expr, const Group& g);

nlohmann::ordered_json claim_report_json(const ClaimReport& r);
std::string claim_report_text(const ClaimReport& r);

nlohmann::ordered_json search_rows_json(std::uint32_t q,
                                        const std::vector<SearchRow>& rows);
std::string search_rows_text(std::uint32_t q, const std::vector<SearchRow>& rows);

}  // namespace magnus
