#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "credit/index.hpp"
#include "credit/weights.hpp"

namespace credit {

enum class CorpusFormat { JsonLines, Csv };

/// A parsed, validated corpus plus where it came from.
struct CorpusDocument {
    std::vector<PaperRecord> papers;
    std::string source_path;
    CorpusFormat format = CorpusFormat::JsonLines;
};

/// Parse a corpus from text.
///
/// JsonLines: one object per line, keys `id` (string), `citations`
/// (non-negative integer), `authors` (non-empty string array). Blank lines
/// are skipped. Csv: header `id,citations,authors` with the authors cell
/// `;`-joined (quoted). Errors carry 1-based line numbers:
/// malformed-record, negative-citations, empty-author-list, duplicate-paper-id.
CorpusDocument parse_corpus(std::string_view text, CorpusFormat format,
                            std::string source_path = "");
CorpusDocument parse_corpus(std::istream& in, CorpusFormat format,
                            std::string source_path = "");

/// Serialize a corpus in the same formats parse_corpus reads
/// (parse(write(c)) == c).
std::string write_corpus(const std::vector<PaperRecord>& papers, CorpusFormat format);

enum class WeightFormat { CsvFraction, CsvDecimal, Json };

/// Render a weight vector.
///
/// CsvFraction keeps exact values, printed over the vector's common
/// denominator (`position,weight` lines, e.g. "4/10"); CsvDecimal rounds to
/// 6 places half-to-even; Json carries both representations per position.
std::string write_weights(const WeightVector& v, WeightFormat format);

std::optional<WeightFormat> parse_weight_format_name(std::string_view name);

} // namespace credit
