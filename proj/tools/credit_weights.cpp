#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "credit/corpus_io.hpp"
#include "credit/error.hpp"
#include "credit/index.hpp"
#include "credit/report.hpp"
#include "credit/weights.hpp"

namespace {

const std::vector<std::string> kSchemeNames = {"equal", "type1", "type2", "geometric",
                                               "harmonic"};

/// Builds the scheme spec from CLI flags. Prints a usage message and returns
/// exit code 2 when alpha is missing for type2 or supplied for anything else;
/// returns 0 and fills `out` otherwise.
int resolve_scheme(const std::string& name, const std::optional<std::string>& alpha_text,
                   credit::SchemeSpec& out) {
    const auto kind = credit::parse_scheme_name(name);
    if (!kind) {
        std::cerr << "error: unknown scheme '" << name << "'\n";
        return 2;
    }
    if (*kind == credit::SchemeKind::ArithmeticType2) {
        if (!alpha_text) {
            std::cerr << "error: --alpha is required for scheme type2\n";
            return 2;
        }
        out = credit::SchemeSpec::type2(credit::Rational::from_string(*alpha_text));
        return 0;
    }
    if (alpha_text) {
        std::cerr << "error: --alpha only applies to scheme type2\n";
        return 2;
    }
    switch (*kind) {
    case credit::SchemeKind::Equal:
        out = credit::SchemeSpec::equal();
        break;
    case credit::SchemeKind::ArithmeticType1:
        out = credit::SchemeSpec::type1();
        break;
    case credit::SchemeKind::Geometric:
        out = credit::SchemeSpec::geometric();
        break;
    case credit::SchemeKind::Harmonic:
        out = credit::SchemeSpec::harmonic();
        break;
    case credit::SchemeKind::ArithmeticType2:
        break;
    }
    return 0;
}

int run_weights(const std::string& scheme, int k,
                const std::optional<std::string>& alpha_text,
                const std::string& format_name) {
    credit::SchemeSpec spec;
    if (const int status = resolve_scheme(scheme, alpha_text, spec); status != 0) {
        return status;
    }
    const auto format = credit::parse_weight_format_name(format_name);
    if (!format) {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return 2;
    }
    std::cout << credit::write_weights(spec.weights(k), *format);
    return 0;
}

int run_alpha(int k, const std::optional<std::string>& mu_text,
              const std::optional<std::string>& w1_text,
              const std::optional<std::string>& wk_text) {
    const bool bound_mode = mu_text.has_value();
    const bool invert_mode = w1_text.has_value() || wk_text.has_value();
    if (bound_mode == invert_mode) {
        std::cerr << "error: pass either --mu or both --w1 and --wk\n";
        return 2;
    }
    if (bound_mode) {
        const credit::AlphaBound bound = credit::max_alpha(k, credit::Rational::from_string(*mu_text));
        std::cout << bound.max_alpha.to_fraction_string()
                  << (bound.strict ? " (strict)" : " (attainable)") << "\n";
        return 0;
    }
    if (!w1_text || !wk_text) {
        std::cerr << "error: endpoint inversion needs both --w1 and --wk\n";
        return 2;
    }
    const credit::AlphaInversion inv = credit::alpha_from_endpoints(
        k, credit::Rational::from_string(*w1_text), credit::Rational::from_string(*wk_text));
    if (inv.consistent) {
        std::cout << inv.alpha.to_fraction_string() << " (consistent)\n";
        return 0;
    }
    std::cout << inv.alpha.to_fraction_string() << " (inconsistent)\n";
    std::cerr << "error: inconsistent-endpoints: w1 + wk = "
              << inv.endpoint_sum.to_fraction_string() << ", expected "
              << credit::Rational(2, k).to_fraction_string() << " for k = " << k << "\n";
    return 1;
}

int run_table(const std::string& name, bool all, const std::string& output_dir,
              const std::string& format) {
    if (all) {
        if (!name.empty()) {
            std::cerr << "error: pass a table name or --all, not both\n";
            return 2;
        }
        if (output_dir.empty()) {
            std::cerr << "error: --all requires --output-dir\n";
            return 2;
        }
        credit::write_report_files(output_dir);
        return 0;
    }
    if (name.empty()) {
        std::cerr << "error: pass a table name or --all\n";
        return 2;
    }
    if (name == "fig1" || name == "fig2") {
        if (format == "markdown") {
            std::cerr << "error: " << name << " is CSV only\n";
            return 2;
        }
        if (name == "fig1") {
            std::cout << credit::curves_to_csv(
                credit::fig1_dataset(2, 10, credit::default_mu_values()), "k", "max_alpha");
        } else {
            std::cout << credit::curves_to_csv(credit::fig2_dataset(5, credit::Rational(1, 20)),
                                               "position", "weight");
        }
        return 0;
    }
    credit::ReportTable table;
    if (name == "table2") {
        table = credit::table_type1(10);
    } else if (name == "table3") {
        table = credit::table_geometric(10);
    } else if (name == "table4") {
        table = credit::table_harmonic(10);
    } else if (name == "table5") {
        table = credit::features_table();
    } else {
        std::cerr << "error: unknown table '" << name << "'\n";
        return 2;
    }
    const bool markdown = format.empty() ? name == "table5" : format == "markdown";
    std::cout << (markdown ? credit::to_markdown(table) : credit::to_csv(table));
    return 0;
}

int run_index(const std::string& corpus_path, const std::string& scheme,
              const std::optional<std::string>& alpha_text, const std::string& input_format) {
    credit::SchemeSpec spec;
    if (const int status = resolve_scheme(scheme, alpha_text, spec); status != 0) {
        return status;
    }
    credit::CorpusFormat format = credit::CorpusFormat::JsonLines;
    if (input_format.empty()) {
        if (corpus_path.size() >= 4 && corpus_path.substr(corpus_path.size() - 4) == ".csv") {
            format = credit::CorpusFormat::Csv;
        }
    } else if (input_format == "csv") {
        format = credit::CorpusFormat::Csv;
    }
    std::ifstream in(corpus_path, std::ios::binary);
    if (!in) {
        throw credit::Error("io-error", "cannot open " + corpus_path + " for reading");
    }
    const credit::CorpusDocument doc = credit::parse_corpus(in, format, corpus_path);
    const auto profiles = credit::build_profiles(doc.papers, spec);

    std::vector<const credit::AuthorProfile*> order;
    order.reserve(profiles.size());
    for (const auto& [id, profile] : profiles) {
        order.push_back(&profile);
    }
    std::sort(order.begin(), order.end(),
              [](const credit::AuthorProfile* a, const credit::AuthorProfile* b) {
                  if (a->weighted_h != b->weighted_h) return a->weighted_h > b->weighted_h;
                  return a->author_id < b->author_id;
              });
    for (const credit::AuthorProfile* profile : order) {
        std::cout << profile->author_id << ' ' << profile->effective_citations.size() << ' '
                  << profile->weighted_h << '\n';
    }
    return 0;
}

int run_compare(int k, const std::string& alpha_text) {
    const credit::Rational alpha = credit::Rational::from_string(alpha_text);
    std::cout << credit::curves_to_csv(credit::fig2_dataset(k, alpha), "position", "weight");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positional credit weights for multi-author papers: five allocation "
                 "schemes, decrement-bound solving, report tables, and weighted h-indices"};
    app.require_subcommand(1);

    auto* weights_cmd =
        app.add_subcommand("weights", "Print the weight vector for one scheme");
    std::string scheme;
    int weights_k = 0;
    std::optional<std::string> weights_alpha;
    std::string weights_format = "csv-fraction";
    weights_cmd->add_option("--scheme", scheme, "equal|type1|type2|geometric|harmonic")
        ->required()
        ->check(CLI::IsMember(kSchemeNames));
    weights_cmd->add_option("-k,--authors", weights_k, "Author count")->required();
    weights_cmd->add_option("--alpha", weights_alpha,
                            "Type-2 weight decrement, as a fraction or decimal");
    weights_cmd
        ->add_option("--format", weights_format,
                     "csv-fraction|csv-decimal|json (default: $CREDIT_WEIGHTS_FORMAT)")
        ->check(CLI::IsMember({"csv-fraction", "csv-decimal", "json"}));

    auto* alpha_cmd = app.add_subcommand(
        "alpha", "Largest feasible decrement for a floor, or the decrement matching endpoints");
    int alpha_k = 0;
    std::optional<std::string> mu_text;
    std::optional<std::string> w1_text;
    std::optional<std::string> wk_text;
    alpha_cmd->add_option("-k,--authors", alpha_k, "Author count")->required();
    alpha_cmd->add_option("--mu", mu_text, "Floor on the last author's weight");
    alpha_cmd->add_option("--w1", w1_text, "First author's weight");
    alpha_cmd->add_option("--wk", wk_text, "Last author's weight");

    auto* table_cmd = app.add_subcommand("table", "Print a report table or figure dataset");
    std::string table_name;
    bool table_all = false;
    std::string table_dir;
    std::string table_format;
    table_cmd->add_option("name", table_name, "table2|table3|table4|table5|fig1|fig2")
        ->check(CLI::IsMember({"table2", "table3", "table4", "table5", "fig1", "fig2"}));
    table_cmd->add_flag("--all", table_all, "Write the full artifact set to --output-dir");
    table_cmd->add_option("--output-dir", table_dir, "Destination directory for --all");
    table_cmd->add_option("--format", table_format, "csv|markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));

    auto* index_cmd =
        app.add_subcommand("index", "Weighted h-index per author over a citation corpus");
    std::string corpus_path;
    std::string index_scheme;
    std::optional<std::string> index_alpha;
    std::string index_format;
    index_cmd->add_option("corpus", corpus_path, "Corpus file (JSON Lines or CSV)")
        ->required();
    index_cmd->add_option("--scheme", index_scheme, "equal|type1|type2|geometric|harmonic")
        ->required()
        ->check(CLI::IsMember(kSchemeNames));
    index_cmd->add_option("--alpha", index_alpha,
                          "Type-2 weight decrement, as a fraction or decimal");
    index_cmd->add_option("--input-format", index_format,
                          "jsonl|csv (default: csv when the file ends in .csv)")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    auto* compare_cmd = app.add_subcommand(
        "compare", "Weight-by-position series for all five schemes at one author count");
    int compare_k = 0;
    std::string compare_alpha;
    compare_cmd->add_option("-k,--authors", compare_k, "Author count")->required();
    compare_cmd->add_option("--alpha", compare_alpha, "Type-2 weight decrement")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*weights_cmd) {
            if (weights_cmd->count("--format") == 0) {
                if (const char* env = std::getenv("CREDIT_WEIGHTS_FORMAT")) {
                    weights_format = env;
                }
            }
            return run_weights(scheme, weights_k, weights_alpha, weights_format);
        }
        if (*alpha_cmd) return run_alpha(alpha_k, mu_text, w1_text, wk_text);
        if (*table_cmd) return run_table(table_name, table_all, table_dir, table_format);
        if (*index_cmd) return run_index(corpus_path, index_scheme, index_alpha, index_format);
        if (*compare_cmd) return run_compare(compare_k, compare_alpha);
    } catch (const credit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
