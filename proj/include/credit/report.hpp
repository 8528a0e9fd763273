#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "credit/rational.hpp"
#include "credit/weights.hpp"

namespace credit {

/// One table cell: exact value plus presentation text. Trailing cells in a
/// row with fewer populated positions than the widest row carry no value.
struct TableCell {
    std::optional<Rational> value;
    std::string text;

    bool populated() const { return value.has_value(); }
};

struct TableRow {
    std::string label;
    std::vector<TableCell> cells;
};

/// Rectangular table with a title, column labels, and labeled rows.
/// column_labels covers the label column too, so each row holds exactly
/// column_labels.size() - 1 cells.
struct ReportTable {
    std::string title;
    std::vector<std::string> column_labels;
    std::vector<TableRow> rows;
};

/// One (x, y) sample of a plotted curve; both coordinates exact.
struct CurvePoint {
    Rational x;
    Rational y;
};

/// Named series with strictly increasing x. `gaps` records the integer x
/// values that were skipped because no feasible point exists there.
struct CurveDataset {
    std::string series_label;
    std::vector<CurvePoint> points;
    std::vector<int> gaps;
};

// -- tables --------------------------------------------------------------------

/// Ranked-weight tables, one row per author count 1..max_k. Row k holds that
/// scheme's k weights; cell text renders every weight in a row over the row's
/// least common denominator, cell values stay reduced.
ReportTable table_type1(int max_k);
ReportTable table_geometric(int max_k);
ReportTable table_harmonic(int max_k);

/// Qualitative comparison of the five schemes: first-to-last ratio in
/// symbolic form, linearity (derived from classify_linearity), positionality,
/// and whether the weights are fixed or parameterized.
ReportTable features_table();

// -- figure datasets -------------------------------------------------------------

/// Feasibility-bound curves: one series per mu, labeled "mu=<fraction>",
/// with points (k, max_alpha(k, mu)) for k in [k_min, k_max]. Author counts
/// where mu exceeds 1/k are skipped and recorded as gaps.
std::vector<CurveDataset> fig1_dataset(int k_min, int k_max,
                                       const std::vector<Rational>& mu_values);

/// Weight-by-position curves for all five schemes at one author count,
/// labeled by scheme name. The Type-2 series uses the given alpha; an
/// infeasible alpha propagates as alpha-out-of-range.
std::vector<CurveDataset> fig2_dataset(int k, const Rational& alpha);

/// Default mu list for fig1_dataset: {0, 1/100, 1/50, 1/20, 1/10}.
std::vector<Rational> default_mu_values();

// -- rendering -------------------------------------------------------------------

/// Header line of column labels, then one line per row; empty cells stay empty.
std::string to_csv(const ReportTable& table);

/// "## <title>" followed by a pipe table.
std::string to_markdown(const ReportTable& table);

/// Long format: header `series,<x_name>,<y_name>`, one line per point,
/// coordinates rendered as reduced fractions.
std::string curves_to_csv(const std::vector<CurveDataset>& datasets,
                          const std::string& x_name, const std::string& y_name);

/// Writes the full artifact set with default parameters into dir:
/// table2..table4 in .csv and .md, table5.md, fig1.csv, fig2.csv.
void write_report_files(const std::filesystem::path& dir);

} // namespace credit
