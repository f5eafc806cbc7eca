#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/positivity.hpp"
#include "delpezzo/structure.hpp"

namespace delpezzo {

inline constexpr const char* kToolVersion = "0.1.0";

/// One (d, m, n) cell of the classification table.
struct TableRow {
    int degree;
    Int m;
    Int n;
    std::vector<std::string> forms;  // canonical forms, multiplicity notation
    std::vector<Int> orbit_sizes;
    Int family_count;
    StructuralTag tag;
    std::string tag_description;
    std::optional<PositivityVerdict> verdict;  // absent for empty cells
};

struct ReportDocument {
    std::string tool_version;
    std::vector<int> degrees;
    std::vector<TableRow> rows;  // ordered by (d, m, n)
    std::vector<std::string> discrepancy_notes;
};

/// Full table for every degree in `degrees`: m = 1..2d, all feasible n.
/// The cell verdict is the most positive one among the cell's families
/// (families of one cell can differ; the summary statements quote the
/// best case).
ReportDocument build_report(const std::vector<int>& degrees);

/// "6H - 3Ei - 2Ej - ..." with the multiplicities of the canonical form;
/// one index letter per printed term.
std::string render_class(const DivisorClass& c);

/// Slot-faithful rendering "2H - E1 + E3" with numbered basis indices.
std::string render_class_indexed(const DivisorClass& c);
std::string render_rational_class(const RationalDivisorClass& c);

/// Exact fraction "p/q" ("p" when q = 1).
std::string render_rational(const Rat& r);

std::string render_json(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);
std::string render_markdown(const ReportDocument& doc);

/// Inverse of render_json; used by the round-trip checks.
ReportDocument parse_json(const std::string& text);

bool operator==(const TableRow& x, const TableRow& y);
bool operator==(const ReportDocument& x, const ReportDocument& y);

}  // namespace delpezzo
