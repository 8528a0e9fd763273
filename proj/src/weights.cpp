#include "credit/weights.hpp"

#include <cmath>
#include <utility>

namespace credit {

namespace {

void require_positive_author_count(int k) {
    if (k < 1) {
        throw Error("invalid-author-count",
                    "author count must be at least 1, got " + std::to_string(k));
    }
}

/// |alpha| bound from the positivity condition w_k > 0: 2/(k(k-1)).
Rational positivity_bound(int k) {
    return Rational(2) / (Rational(k) * Rational(k - 1));
}

} // namespace

WeightVector WeightVector::from_weights(std::vector<Rational> weights) {
    if (weights.empty()) {
        throw Error("invalid-author-count", "a weight vector needs at least one entry");
    }
    Rational sum;
    for (const Rational& w : weights) sum += w;
    if (sum != Rational(1)) {
        throw Error("weights-not-normalized",
                    "weights must sum to exactly 1, got " + sum.to_fraction_string());
    }
    return WeightVector(std::move(weights));
}

const Rational& WeightVector::weight_at(int position) const {
    if (position < 1 || position > author_count()) {
        throw Error("position-out-of-range",
                    "position " + std::to_string(position) + " not in 1.." +
                        std::to_string(author_count()));
    }
    return weights_[static_cast<size_t>(position - 1)];
}

void SchemeSpec::validate() const {
    if ((kind == SchemeKind::ArithmeticType2) != alpha.has_value()) {
        throw Error("invalid-scheme-spec",
                    "alpha must be present exactly when the scheme is type2");
    }
}

WeightVector SchemeSpec::weights(int k) const {
    validate();
    switch (kind) {
        case SchemeKind::Equal: return equal_weights(k);
        case SchemeKind::ArithmeticType1: return type1_weights(k);
        case SchemeKind::ArithmeticType2: return type2_weights(k, *alpha, positivity);
        case SchemeKind::Geometric: return geometric_weights(k);
        case SchemeKind::Harmonic: return harmonic_weights(k);
    }
    throw Error("invalid-scheme-spec", "unknown scheme kind");
}

WeightVector equal_weights(int k) {
    require_positive_author_count(k);
    std::vector<Rational> w(static_cast<size_t>(k), Rational(1, k));
    return WeightVector::from_weights(std::move(w));
}

WeightVector type1_weights(int k) {
    require_positive_author_count(k);
    std::vector<Rational> w;
    w.reserve(static_cast<size_t>(k));
    const Rational den = Rational(k) * Rational(k + 1);
    for (int j = 1; j <= k; ++j) {
        w.push_back(Rational(2 * (k - j + 1)) / den);
    }
    return WeightVector::from_weights(std::move(w));
}

WeightVector type2_weights(int k, const Rational& alpha, PositivityPolicy policy) {
    require_positive_author_count(k);
    if (k >= 2 && policy != PositivityPolicy::Unchecked) {
        const Rational bound = positivity_bound(k);
        const Rational mag = alpha.abs();
        const bool ok = policy == PositivityPolicy::StrictPositive ? mag < bound : mag <= bound;
        if (!ok) {
            throw Error("alpha-out-of-range",
                        "alpha = " + alpha.to_fraction_string() +
                            " is outside the feasible range for k = " + std::to_string(k) +
                            " (requires |alpha| " +
                            (policy == PositivityPolicy::StrictPositive ? "< " : "<= ") +
                            bound.to_fraction_string() + ")");
        }
    }
    std::vector<Rational> w;
    w.reserve(static_cast<size_t>(k));
    const Rational base(1, k);
    for (int j = 1; j <= k; ++j) {
        w.push_back(base + Rational(k - 2 * j + 1, 2) * alpha);
    }
    return WeightVector::from_weights(std::move(w));
}

WeightVector geometric_weights(int k) {
    require_positive_author_count(k);
    // 2^k - 1 exceeds long for large k, so build it in exact arithmetic
    Rational den = -Rational(1);
    Rational pow(1);
    std::vector<Rational> powers;
    powers.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        powers.push_back(pow); // 2^i
        pow *= Rational(2);
    }
    den += pow; // 2^k - 1
    std::vector<Rational> w;
    w.reserve(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) {
        w.push_back(powers[static_cast<size_t>(k - j)] / den);
    }
    return WeightVector::from_weights(std::move(w));
}

WeightVector harmonic_weights(int k) {
    require_positive_author_count(k);
    const Rational h = harmonic_number(k);
    std::vector<Rational> w;
    w.reserve(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) {
        w.push_back(Rational(1, j) / h);
    }
    return WeightVector::from_weights(std::move(w));
}

std::pair<Rational, Rational> type2_endpoints(int k, const Rational& alpha) {
    require_positive_author_count(k);
    const Rational half_span = alpha * Rational(k - 1, 2);
    const Rational base(1, k);
    return {base + half_span, base - half_span};
}

Rational type2_ratio(int k, const Rational& alpha) {
    auto [w1, wk] = type2_endpoints(k, alpha);
    if (wk.is_zero()) {
        throw Error("division-by-zero-weight",
                    "last weight is 0 at alpha = " + alpha.to_fraction_string() +
                        ", k = " + std::to_string(k));
    }
    return w1 / wk;
}

AlphaInversion alpha_from_endpoints(int k, const Rational& w1, const Rational& wk) {
    if (k < 2) {
        throw Error("underdetermined",
                    "endpoint inversion needs k >= 2, got " + std::to_string(k));
    }
    AlphaInversion result;
    result.alpha = (w1 - wk) / Rational(k - 1);
    result.endpoint_sum = w1 + wk;
    result.consistent = result.endpoint_sum == Rational(2, k);
    return result;
}

WeightVector weights_from_endpoints(int k, const Rational& w1, const Rational& wk) {
    AlphaInversion inv = alpha_from_endpoints(k, w1, wk);
    if (!inv.consistent) {
        throw Error("inconsistent-endpoints",
                    "w1 + wk = " + inv.endpoint_sum.to_fraction_string() + ", expected " +
                        Rational(2, k).to_fraction_string() + " for k = " + std::to_string(k));
    }
    std::vector<Rational> w;
    w.reserve(static_cast<size_t>(k));
    const Rational den(k - 1);
    for (int j = 1; j <= k; ++j) {
        w.push_back((Rational(k - j) * w1 + Rational(j - 1) * wk) / den);
    }
    return WeightVector::from_weights(std::move(w));
}

AlphaBound max_alpha(int k, const Rational& mu) {
    if (k < 2) {
        throw Error("no-constraint",
                    "alpha is unconstrained for k = " + std::to_string(k) +
                        " (a single author always gets weight 1)");
    }
    if (mu.sign() < 0 || mu > Rational(1, k)) {
        throw Error("infeasible-floor",
                    "floor mu = " + mu.to_fraction_string() + " must lie in [0, 1/" +
                        std::to_string(k) + "]");
    }
    AlphaBound bound;
    bound.k = k;
    bound.mu = mu;
    bound.max_alpha = Rational(2, k - 1) * (Rational(1, k) - mu);
    bound.strict = mu.is_zero();
    return bound;
}

Rational alpha_matching_type1(int k) {
    require_positive_author_count(k);
    return Rational(2) / (Rational(k) * Rational(k + 1));
}

Rational harmonic_number(int k) {
    require_positive_author_count(k);
    Rational h;
    for (int i = 1; i <= k; ++i) h += Rational(1, i);
    return h;
}

HarmonicSum harmonic_sum(int k) {
    HarmonicSum sum;
    sum.exact = harmonic_number(k);
    sum.approx = std::log(static_cast<double>(k)) + kEulerMascheroni + 1.0 / (2.0 * k);
    return sum;
}

std::vector<Rational> delta_vs_equal(const WeightVector& v) {
    const Rational base(1, v.author_count());
    std::vector<Rational> deltas;
    deltas.reserve(v.weights().size());
    for (const Rational& w : v.weights()) deltas.push_back(w - base);
    return deltas;
}

Rational first_last_ratio(const WeightVector& v) {
    const Rational& last = v.weights().back();
    if (last.is_zero()) {
        throw Error("division-by-zero-weight", "last weight is 0, ratio undefined");
    }
    return v.weights().front() / last;
}

Linearity classify_linearity(const WeightVector& v) {
    const auto& w = v.weights();
    for (size_t j = 1; j + 1 < w.size(); ++j) {
        if (w[j + 1] - Rational(2) * w[j] + w[j - 1] != Rational(0)) {
            return Linearity::Nonlinear;
        }
    }
    return Linearity::Linear;
}

std::string scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Equal: return "equal";
        case SchemeKind::ArithmeticType1: return "type1";
        case SchemeKind::ArithmeticType2: return "type2";
        case SchemeKind::Geometric: return "geometric";
        case SchemeKind::Harmonic: return "harmonic";
    }
    return "unknown";
}

std::optional<SchemeKind> parse_scheme_name(std::string_view name) {
    if (name == "equal") return SchemeKind::Equal;
    if (name == "type1") return SchemeKind::ArithmeticType1;
    if (name == "type2") return SchemeKind::ArithmeticType2;
    if (name == "geometric") return SchemeKind::Geometric;
    if (name == "harmonic") return SchemeKind::Harmonic;
    return std::nullopt;
}

} // namespace credit
