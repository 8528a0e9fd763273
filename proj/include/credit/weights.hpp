#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credit/rational.hpp"

namespace credit {

enum class SchemeKind { Equal, ArithmeticType1, ArithmeticType2, Geometric, Harmonic };

/// How strictly a Type-2 alpha is checked against the feasibility bound
/// 2/(k(k-1)): StrictPositive keeps every weight > 0, AllowZero permits the
/// boundary (last weight exactly 0), Unchecked skips the test entirely.
enum class PositivityPolicy { StrictPositive, AllowZero, Unchecked };

enum class Linearity { Linear, Nonlinear };

/// Ordered positional weights for one paper's author list.
/// Invariants: k >= 1, exactly k entries, entries sum to exactly 1.
class WeightVector {
public:
    static WeightVector from_weights(std::vector<Rational> weights);

    int author_count() const { return static_cast<int>(weights_.size()); }

    /// 1-based: position 1 is the first author.
    const Rational& weight_at(int position) const;

    const std::vector<Rational>& weights() const { return weights_; }

private:
    explicit WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {}

    std::vector<Rational> weights_;
};

/// Which scheme to apply, plus the Type-2 decrement parameter when relevant.
/// Invariant: alpha is present if and only if kind == ArithmeticType2.
struct SchemeSpec {
    SchemeKind kind = SchemeKind::Equal;
    std::optional<Rational> alpha;
    PositivityPolicy positivity = PositivityPolicy::StrictPositive;

    static SchemeSpec equal() { return {SchemeKind::Equal, std::nullopt, PositivityPolicy::StrictPositive}; }
    static SchemeSpec type1() { return {SchemeKind::ArithmeticType1, std::nullopt, PositivityPolicy::StrictPositive}; }
    static SchemeSpec type2(Rational alpha, PositivityPolicy policy = PositivityPolicy::StrictPositive) {
        return {SchemeKind::ArithmeticType2, std::move(alpha), policy};
    }
    static SchemeSpec geometric() { return {SchemeKind::Geometric, std::nullopt, PositivityPolicy::StrictPositive}; }
    static SchemeSpec harmonic() { return {SchemeKind::Harmonic, std::nullopt, PositivityPolicy::StrictPositive}; }

    void validate() const;

    /// Weight vector for a k-author paper under this scheme.
    WeightVector weights(int k) const;
};

/// Largest feasible Type-2 alpha for k authors given a floor mu on the last
/// author's weight: max_alpha = (2/(k-1)) * (1/k - mu). With mu = 0 the bound
/// is strict (alpha must stay below it to keep every weight positive); with
/// mu > 0 the bound itself is attainable and the last weight lands exactly on mu.
struct AlphaBound {
    int k = 0;
    Rational mu;
    Rational max_alpha;
    bool strict = false;
};

/// Result of inverting the endpoints (w1, wk) to the decrement parameter.
/// `consistent` is true when w1 + wk == 2/k, i.e. the pair can arise from a
/// sum-to-one arithmetic progression; `alpha` is reported either way.
struct AlphaInversion {
    Rational alpha;
    bool consistent = false;
    Rational endpoint_sum; // w1 + wk, handy for diagnostics
};

// -- scheme generators --------------------------------------------------------

/// All k authors get 1/k.
WeightVector equal_weights(int k);

/// Fixed linear scheme: w_j = 2(k-j+1) / (k(k+1)).
WeightVector type1_weights(int k);

/// Parameterized linear scheme: w_j = 1/k + ((k-2j+1)/2) * alpha.
/// Positive alpha decreases weights along the byline, negative increases them;
/// the policy checks |alpha| against the k-author feasibility bound.
WeightVector type2_weights(int k, const Rational& alpha,
                           PositivityPolicy policy = PositivityPolicy::StrictPositive);

/// Halving scheme: w_j = 2^(k-j) / (2^k - 1).
WeightVector geometric_weights(int k);

/// w_j proportional to 1/j, normalized by the k-th harmonic number.
WeightVector harmonic_weights(int k);

// -- Type-2 analysis ----------------------------------------------------------

/// First and last weights in closed form:
/// w1 = 1/k + alpha(k-1)/2, wk = 1/k - alpha(k-1)/2.
std::pair<Rational, Rational> type2_endpoints(int k, const Rational& alpha);

/// w1/wk from the closed forms; throws division-by-zero-weight when wk == 0.
Rational type2_ratio(int k, const Rational& alpha);

/// alpha = (w1 - wk)/(k - 1), plus a consistency report (w1 + wk == 2/k).
/// Requires k >= 2 (underdetermined otherwise).
AlphaInversion alpha_from_endpoints(int k, const Rational& w1, const Rational& wk);

/// Full vector from the endpoints: w_j = ((k-j) w1 + (j-1) wk)/(k-1).
/// Requires consistent endpoints so the result sums to 1.
WeightVector weights_from_endpoints(int k, const Rational& w1, const Rational& wk);

/// Feasibility bound for alpha given a floor mu on the last weight (k >= 2,
/// 0 <= mu <= 1/k). Errors: no-constraint for k < 2, infeasible-floor otherwise.
AlphaBound max_alpha(int k, const Rational& mu);

/// The alpha at which Type-2 reproduces Type-1 exactly: 2/(k(k+1)).
Rational alpha_matching_type1(int k);

// -- vector analysis ----------------------------------------------------------

/// Exact harmonic number H_k plus the asymptotic approximation
/// ln k + gamma + 1/(2k).
struct HarmonicSum {
    Rational exact;
    double approx = 0.0;
};

inline constexpr double kEulerMascheroni = 0.5772156649015329;

Rational harmonic_number(int k);
HarmonicSum harmonic_sum(int k);

/// Per-position difference against equal weights: entry j = w_j - 1/k.
/// Entries always sum to 0.
std::vector<Rational> delta_vs_equal(const WeightVector& v);

/// w1/wk; throws division-by-zero-weight when the last weight is 0.
Rational first_last_ratio(const WeightVector& v);

/// Linear iff every second difference w_{j+1} - 2 w_j + w_{j-1} is exactly 0
/// (vectors with k <= 2 are trivially linear).
Linearity classify_linearity(const WeightVector& v);

// -- names ---------------------------------------------------------------------

/// Lowercase CLI names: equal, type1, type2, geometric, harmonic.
std::string scheme_name(SchemeKind kind);
std::optional<SchemeKind> parse_scheme_name(std::string_view name);

} // namespace credit
