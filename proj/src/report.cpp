#include "credit/report.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <utility>

#include "credit/error.hpp"

namespace credit {

namespace {

std::string over_common(const Rational& w, const Rational& common) {
    if (common == Rational(1)) return w.to_fraction_string();
    return (w * common).to_fraction_string() + "/" + common.to_fraction_string();
}

ReportTable weight_table(std::string title, int max_k,
                         const std::function<WeightVector(int)>& row_weights) {
    if (max_k < 1) {
        throw Error("invalid-author-count",
                    "table needs max_k >= 1, got " + std::to_string(max_k));
    }
    ReportTable table;
    table.title = std::move(title);
    table.column_labels.reserve(static_cast<size_t>(max_k) + 1);
    table.column_labels.push_back("k");
    for (int j = 1; j <= max_k; ++j) {
        table.column_labels.push_back("w" + std::to_string(j));
    }
    for (int k = 1; k <= max_k; ++k) {
        TableRow row;
        row.label = std::to_string(k);
        const WeightVector v = row_weights(k);
        const Rational common = Rational::common_denominator(v.weights());
        for (const Rational& w : v.weights()) {
            row.cells.push_back({w, over_common(w, common)});
        }
        row.cells.resize(static_cast<size_t>(max_k));
        table.rows.push_back(std::move(row));
    }
    return table;
}

TableCell text_cell(std::string text) { return {std::nullopt, std::move(text)}; }

} // namespace

ReportTable table_type1(int max_k) {
    return weight_table("Arithmetic Type-1 weights", max_k,
                        [](int k) { return type1_weights(k); });
}

ReportTable table_geometric(int max_k) {
    return weight_table("Geometric weights", max_k,
                        [](int k) { return geometric_weights(k); });
}

ReportTable table_harmonic(int max_k) {
    return weight_table("Harmonic weights", max_k,
                        [](int k) { return harmonic_weights(k); });
}

ReportTable features_table() {
    // Linearity is derived from the actual weights at a representative k
    // large enough for second differences to exist.
    const int k = 5;
    const auto linearity = [k](const WeightVector& v) {
        return std::string(classify_linearity(v) == Linearity::Linear ? "Linear"
                                                                      : "Nonlinear");
    };

    ReportTable table;
    table.title = "Weight scheme features";
    table.column_labels = {"Scheme", "w1/wk", "Linearity", "Positionality", "Weights"};

    const auto add_row = [&table](std::string scheme, std::string ratio,
                                  std::string linear, std::string positional,
                                  std::string fixed) {
        TableRow row;
        row.label = std::move(scheme);
        row.cells.push_back(text_cell(std::move(ratio)));
        row.cells.push_back(text_cell(std::move(linear)));
        row.cells.push_back(text_cell(std::move(positional)));
        row.cells.push_back(text_cell(std::move(fixed)));
        table.rows.push_back(std::move(row));
    };

    add_row("Equal", "1", linearity(equal_weights(k)), "position-independent", "fixed");
    add_row("Geometric", "2^(k-1)", linearity(geometric_weights(k)), "positional", "fixed");
    add_row("Harmonic", "k", linearity(harmonic_weights(k)), "positional", "fixed");
    add_row("Type-1", "k", linearity(type1_weights(k)), "positional", "fixed");
    add_row("Type-2", "variable", linearity(type2_weights(k, Rational(1, 20))),
            "positional", "variable");
    return table;
}

std::vector<CurveDataset> fig1_dataset(int k_min, int k_max,
                                       const std::vector<Rational>& mu_values) {
    if (k_min < 2) {
        throw Error("invalid-author-count",
                    "bound curves need k >= 2, got " + std::to_string(k_min));
    }
    if (k_max < k_min) {
        throw Error("invalid-author-count",
                    "empty author-count range " + std::to_string(k_min) + ".." +
                        std::to_string(k_max));
    }
    std::vector<CurveDataset> out;
    out.reserve(mu_values.size());
    for (const Rational& mu : mu_values) {
        CurveDataset series;
        series.series_label = "mu=" + mu.to_fraction_string();
        for (int k = k_min; k <= k_max; ++k) {
            try {
                series.points.push_back({Rational(k), max_alpha(k, mu).max_alpha});
            } catch (const Error& e) {
                if (e.code() != "infeasible-floor") throw;
                series.gaps.push_back(k);
            }
        }
        out.push_back(std::move(series));
    }
    return out;
}

std::vector<CurveDataset> fig2_dataset(int k, const Rational& alpha) {
    const std::array<SchemeSpec, 5> schemes = {
        SchemeSpec::equal(), SchemeSpec::type1(), SchemeSpec::type2(alpha),
        SchemeSpec::geometric(), SchemeSpec::harmonic()};
    std::vector<CurveDataset> out;
    out.reserve(schemes.size());
    for (const SchemeSpec& scheme : schemes) {
        CurveDataset series;
        series.series_label = scheme_name(scheme.kind);
        const WeightVector v = scheme.weights(k);
        for (int j = 1; j <= v.author_count(); ++j) {
            series.points.push_back({Rational(j), v.weight_at(j)});
        }
        out.push_back(std::move(series));
    }
    return out;
}

std::vector<Rational> default_mu_values() {
    return {Rational(0), Rational(1, 100), Rational(1, 50), Rational(1, 20),
            Rational(1, 10)};
}

std::string to_csv(const ReportTable& table) {
    std::string out;
    for (size_t i = 0; i < table.column_labels.size(); ++i) {
        if (i > 0) out += ',';
        out += table.column_labels[i];
    }
    out += '\n';
    for (const TableRow& row : table.rows) {
        out += row.label;
        for (const TableCell& cell : row.cells) {
            out += ',';
            out += cell.text;
        }
        out += '\n';
    }
    return out;
}

std::string to_markdown(const ReportTable& table) {
    std::string out = "## " + table.title + "\n\n";
    out += "|";
    for (const std::string& label : table.column_labels) {
        out += " " + label + " |";
    }
    out += "\n|";
    for (size_t i = 0; i < table.column_labels.size(); ++i) {
        out += " --- |";
    }
    out += '\n';
    for (const TableRow& row : table.rows) {
        out += "| " + row.label + " |";
        for (const TableCell& cell : row.cells) {
            out += " " + cell.text + " |";
        }
        out += '\n';
    }
    return out;
}

std::string curves_to_csv(const std::vector<CurveDataset>& datasets,
                          const std::string& x_name, const std::string& y_name) {
    std::string out = "series," + x_name + "," + y_name + "\n";
    for (const CurveDataset& series : datasets) {
        for (const CurvePoint& point : series.points) {
            out += series.series_label;
            out += ',';
            out += point.x.to_fraction_string();
            out += ',';
            out += point.y.to_fraction_string();
            out += '\n';
        }
    }
    return out;
}

void write_report_files(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto write = [&dir](const std::string& name, const std::string& content) {
        const std::filesystem::path path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw Error("io-error", "cannot open " + path.string() + " for writing");
        }
        out << content;
        if (!out) {
            throw Error("io-error", "failed writing " + path.string());
        }
    };

    const std::array<std::pair<std::string, ReportTable>, 3> weight_tables = {
        std::make_pair(std::string("table2"), table_type1(10)),
        std::make_pair(std::string("table3"), table_geometric(10)),
        std::make_pair(std::string("table4"), table_harmonic(10))};
    for (const auto& [name, table] : weight_tables) {
        write(name + ".csv", to_csv(table));
        write(name + ".md", to_markdown(table));
    }
    write("table5.md", to_markdown(features_table()));
    write("fig1.csv", curves_to_csv(fig1_dataset(2, 10, default_mu_values()),
                                    "k", "max_alpha"));
    write("fig2.csv", curves_to_csv(fig2_dataset(5, Rational(1, 20)),
                                    "position", "weight"));
}

} // namespace credit
