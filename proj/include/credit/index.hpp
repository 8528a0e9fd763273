#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "credit/weights.hpp"

namespace credit {

/// One publication: identifier, citation count, byline in order.
/// Invariants: citations >= 0, authors non-empty with no duplicates.
struct PaperRecord {
    std::string paper_id;
    long long citations = 0;
    std::vector<std::string> authors; // position 1 = first author

    void validate() const;
};

/// Per-author credit: one weight-scaled citation value per paper authored,
/// sorted by value descending (ties broken by paper_id ascending), plus the
/// h-index computed over those values.
struct AuthorProfile {
    struct Entry {
        std::string paper_id;
        Rational value;
    };

    std::string author_id;
    std::vector<Entry> effective_citations;
    int weighted_h = 0;

    std::vector<Rational> values() const;
};

/// citations * w_j for the author's 1-based byline position j.
/// Throws author-not-found if the author is not on the paper.
Rational effective_citations(const PaperRecord& paper, std::string_view author_id,
                             const SchemeSpec& scheme);

/// Largest h such that at least h of the values are >= h. The rational/integer
/// comparison is exact; an empty list gives 0.
int h_index(std::vector<Rational> values);

/// Profiles for every author appearing in the corpus. Output is independent
/// of corpus ordering. Throws duplicate-paper on repeated paper ids.
std::map<std::string, AuthorProfile> build_profiles(const std::vector<PaperRecord>& corpus,
                                                    const SchemeSpec& scheme);

} // namespace credit
