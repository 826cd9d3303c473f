#pragma once

#include <string>

#include "psl/lab.hpp"

namespace psl {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& name);

// Canonical renderings; JSON is the machine schema, CSV flattens
// (m, n, r, l, valuation), text is a human table with ">=M" markers.
std::string render_report(const Theorem2Report& rep, ReportFormat fmt);
std::string render_report(const Theorem1Report& rep, ReportFormat fmt);
std::string render_report(const Lemma2Report& rep, ReportFormat fmt);
std::string render_report(const UnitCongResult& res, ReportFormat fmt);

// Parse the canonical JSON back into the report structure (tables and
// summary data; stage form objects are not part of the wire format).
Theorem2Report theorem2_report_from_json(const std::string& text);

} // namespace psl
