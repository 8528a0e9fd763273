#include "credit/index.hpp"

#include <algorithm>
#include <unordered_set>

namespace credit {

void PaperRecord::validate() const {
    if (citations < 0) {
        throw Error("negative-citations",
                    "paper '" + paper_id + "' has negative citation count");
    }
    if (authors.empty()) {
        throw Error("empty-author-list", "paper '" + paper_id + "' has no authors");
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& a : authors) {
        if (!seen.insert(a).second) {
            throw Error("malformed-record",
                        "paper '" + paper_id + "' lists author '" + a + "' twice");
        }
    }
}

std::vector<Rational> AuthorProfile::values() const {
    std::vector<Rational> out;
    out.reserve(effective_citations.size());
    for (const Entry& e : effective_citations) out.push_back(e.value);
    return out;
}

Rational effective_citations(const PaperRecord& paper, std::string_view author_id,
                             const SchemeSpec& scheme) {
    const auto it = std::find(paper.authors.begin(), paper.authors.end(), author_id);
    if (it == paper.authors.end()) {
        throw Error("author-not-found",
                    "author '" + std::string(author_id) + "' is not on paper '" +
                        paper.paper_id + "'");
    }
    const int position = static_cast<int>(it - paper.authors.begin()) + 1;
    const WeightVector w = scheme.weights(static_cast<int>(paper.authors.size()));
    return Rational(paper.citations) * w.weight_at(position);
}

int h_index(std::vector<Rational> values) {
    std::sort(values.begin(), values.end(),
              [](const Rational& a, const Rational& b) { return b < a; });
    int h = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= Rational(static_cast<long>(i) + 1)) {
            h = static_cast<int>(i) + 1;
        } else {
            break;
        }
    }
    return h;
}

std::map<std::string, AuthorProfile> build_profiles(const std::vector<PaperRecord>& corpus,
                                                    const SchemeSpec& scheme) {
    scheme.validate();
    std::unordered_set<std::string_view> paper_ids;
    for (const PaperRecord& p : corpus) {
        if (!paper_ids.insert(p.paper_id).second) {
            throw Error("duplicate-paper", "paper id '" + p.paper_id + "' appears twice");
        }
        p.validate();
    }

    std::map<std::string, AuthorProfile> profiles;
    for (const PaperRecord& p : corpus) {
        const WeightVector w = scheme.weights(static_cast<int>(p.authors.size()));
        for (size_t i = 0; i < p.authors.size(); ++i) {
            AuthorProfile& profile = profiles[p.authors[i]];
            profile.author_id = p.authors[i];
            profile.effective_citations.push_back(
                {p.paper_id, Rational(p.citations) * w.weight_at(static_cast<int>(i) + 1)});
        }
    }

    for (auto& [id, profile] : profiles) {
        std::sort(profile.effective_citations.begin(), profile.effective_citations.end(),
                  [](const AuthorProfile::Entry& a, const AuthorProfile::Entry& b) {
                      if (a.value != b.value) return b.value < a.value;
                      return a.paper_id < b.paper_id;
                  });
        profile.weighted_h = h_index(profile.values());
    }
    return profiles;
}

} // namespace credit
