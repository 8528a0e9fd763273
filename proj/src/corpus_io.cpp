#include "credit/corpus_io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace credit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void malformed(size_t line, const std::string& reason) {
    throw Error("malformed-record", "line " + std::to_string(line) + ": " + reason);
}

void check_record(const PaperRecord& record, size_t line) {
    if (record.citations < 0) {
        throw Error("negative-citations",
                    "line " + std::to_string(line) + ": citations must be non-negative");
    }
    if (record.authors.empty()) {
        throw Error("empty-author-list",
                    "line " + std::to_string(line) + ": author list is empty");
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& a : record.authors) {
        if (a.empty()) malformed(line, "author id is empty");
        if (!seen.insert(a).second) malformed(line, "author '" + a + "' listed twice");
    }
}

void check_unique_id(std::unordered_set<std::string>& ids, const PaperRecord& record,
                     size_t line) {
    if (!ids.insert(record.paper_id).second) {
        throw Error("duplicate-paper-id", "line " + std::to_string(line) + ": paper id '" +
                                              record.paper_id + "' already seen");
    }
}

PaperRecord record_from_json_line(const std::string& text, size_t line) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(line, std::string("invalid JSON (") + e.what() + ")");
    }
    if (!obj.is_object()) malformed(line, "expected a JSON object");
    if (!obj.contains("id") || !obj["id"].is_string()) {
        malformed(line, "missing string field 'id'");
    }
    if (!obj.contains("citations") || !obj["citations"].is_number_integer()) {
        malformed(line, "missing integer field 'citations'");
    }
    if (!obj.contains("authors") || !obj["authors"].is_array()) {
        malformed(line, "missing array field 'authors'");
    }

    PaperRecord record;
    record.paper_id = obj["id"].get<std::string>();
    record.citations = obj["citations"].get<long long>();
    for (const auto& a : obj["authors"]) {
        if (!a.is_string()) malformed(line, "authors must all be strings");
        record.authors.push_back(a.get<std::string>());
    }
    return record;
}

// RFC-style CSV row splitter: double quotes wrap fields, "" escapes a quote.
std::vector<std::string> split_csv_row(const std::string& row, size_t line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (size_t i = 0; i < row.size(); ++i) {
        const char c = row[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < row.size() && row[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            if (!current.empty()) malformed(line, "quote inside unquoted field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) malformed(line, "unterminated quote");
    fields.push_back(std::move(current));
    return fields;
}

long long parse_citations_field(const std::string& text, size_t line) {
    if (text.empty()) malformed(line, "citations field is empty");
    size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (start == text.size()) malformed(line, "citations field is not a number");
    for (size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            malformed(line, "citations field is not an integer");
        }
    }
    try {
        return std::stoll(text);
    } catch (const std::exception&) {
        malformed(line, "citations value out of range");
    }
}

PaperRecord record_from_csv_row(const std::string& row, size_t line) {
    std::vector<std::string> fields = split_csv_row(row, line);
    if (fields.size() != 3) {
        malformed(line, "expected 3 fields (id,citations,authors), got " +
                            std::to_string(fields.size()));
    }
    PaperRecord record;
    record.paper_id = fields[0];
    record.citations = parse_citations_field(fields[1], line);
    const std::string& cell = fields[2];
    if (!cell.empty()) {
        size_t begin = 0;
        while (true) {
            size_t sep = cell.find(';', begin);
            record.authors.push_back(cell.substr(begin, sep - begin));
            if (sep == std::string::npos) break;
            begin = sep + 1;
        }
    }
    return record;
}

std::string csv_quote(const std::string& field, bool force = false) {
    const bool needs = force || field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

CorpusDocument parse_corpus(std::string_view text, CorpusFormat format,
                            std::string source_path) {
    CorpusDocument doc;
    doc.source_path = std::move(source_path);
    doc.format = format;

    std::unordered_set<std::string> ids;
    size_t line_no = 0;
    size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string line(eol == std::string_view::npos ? text.substr(pos)
                                                       : text.substr(pos, eol - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (format == CorpusFormat::Csv && !header_seen) {
            if (line != "id,citations,authors") {
                malformed(line_no, "expected header 'id,citations,authors'");
            }
            header_seen = true;
            continue;
        }

        PaperRecord record = format == CorpusFormat::JsonLines
                                 ? record_from_json_line(line, line_no)
                                 : record_from_csv_row(line, line_no);
        check_record(record, line_no);
        check_unique_id(ids, record, line_no);
        doc.papers.push_back(std::move(record));
    }
    return doc;
}

CorpusDocument parse_corpus(std::istream& in, CorpusFormat format, std::string source_path) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str(), format, std::move(source_path));
}

std::string write_corpus(const std::vector<PaperRecord>& papers, CorpusFormat format) {
    std::string out;
    if (format == CorpusFormat::JsonLines) {
        for (const PaperRecord& p : papers) {
            ordered_json obj;
            obj["id"] = p.paper_id;
            obj["citations"] = p.citations;
            obj["authors"] = p.authors;
            out += obj.dump();
            out += '\n';
        }
        return out;
    }
    out = "id,citations,authors\n";
    for (const PaperRecord& p : papers) {
        std::string authors;
        for (size_t i = 0; i < p.authors.size(); ++i) {
            if (i > 0) authors += ';';
            authors += p.authors[i];
        }
        out += csv_quote(p.paper_id);
        out += ',';
        out += std::to_string(p.citations);
        out += ',';
        out += csv_quote(authors, /*force=*/true);
        out += '\n';
    }
    return out;
}

std::string write_weights(const WeightVector& v, WeightFormat format) {
    const auto& weights = v.weights();
    const Rational common = Rational::common_denominator(weights);

    auto fraction_text = [&](const Rational& w) {
        const Rational scaled = w * common; // integer-valued by construction
        if (common == Rational(1)) return scaled.to_fraction_string();
        return scaled.to_fraction_string() + "/" + common.to_fraction_string();
    };

    std::string out;
    switch (format) {
        case WeightFormat::CsvFraction:
            out = "position,weight\n";
            for (int j = 1; j <= v.author_count(); ++j) {
                out += std::to_string(j);
                out += ',';
                out += fraction_text(v.weight_at(j));
                out += '\n';
            }
            return out;
        case WeightFormat::CsvDecimal:
            out = "position,weight\n";
            for (int j = 1; j <= v.author_count(); ++j) {
                out += std::to_string(j);
                out += ',';
                out += v.weight_at(j).to_decimal_string(6);
                out += '\n';
            }
            return out;
        case WeightFormat::Json:
            out = "[\n";
            for (int j = 1; j <= v.author_count(); ++j) {
                out += "  {\"position\": " + std::to_string(j) + ", \"fraction\": \"" +
                       fraction_text(v.weight_at(j)) + "\", \"decimal\": " +
                       v.weight_at(j).to_decimal_string(6) + "}";
                out += j < v.author_count() ? ",\n" : "\n";
            }
            out += "]\n";
            return out;
    }
    throw Error("invalid-weight-format", "unknown weight output format");
}

std::optional<WeightFormat> parse_weight_format_name(std::string_view name) {
    if (name == "csv-fraction") return WeightFormat::CsvFraction;
    if (name == "csv-decimal") return WeightFormat::CsvDecimal;
    if (name == "json") return WeightFormat::Json;
    return std::nullopt;
}

} // namespace credit
