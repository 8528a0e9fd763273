#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "credit/weights.hpp"

#include "test_util.hpp"

using namespace credit;
using test::error_code_of;

namespace {

std::vector<Rational> vec(std::initializer_list<Rational> xs) { return xs; }

Rational sum_of(const WeightVector& v) {
    Rational s;
    for (const Rational& w : v.weights()) s += w;
    return s;
}

/// Random alpha strictly inside the k-author feasibility band.
Rational random_feasible_alpha(int k, std::mt19937& gen) {
    const Rational bound(2, static_cast<long>(k) * (k - 1));
    std::uniform_int_distribution<long> t(-999, 999);
    return bound * Rational(t(gen), 1000);
}

} // namespace

TEST_CASE("equal weights") {
    CHECK(equal_weights(1).weights() == vec({Rational(1)}));
    CHECK(equal_weights(4).weights() ==
          vec({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}));
    CHECK(error_code_of([] { equal_weights(0); }) == "invalid-author-count");
    CHECK(error_code_of([] { equal_weights(-3); }) == "invalid-author-count");
}

TEST_CASE("type1 weights follow 2(k-j+1)/(k(k+1))") {
    CHECK(type1_weights(1).weights() == vec({Rational(1)}));
    CHECK(type1_weights(4).weights() ==
          vec({Rational(2, 5), Rational(3, 10), Rational(1, 5), Rational(1, 10)}));
    CHECK(type1_weights(5).weights() == vec({Rational(1, 3), Rational(4, 15), Rational(1, 5),
                                             Rational(2, 15), Rational(1, 15)}));
}

TEST_CASE("type2 weights at worked parameter values") {
    CHECK(type2_weights(3, Rational(1, 10)).weights() ==
          vec({Rational(13, 30), Rational(1, 3), Rational(7, 30)}));
    CHECK(type2_weights(3, Rational(1, 20)).weights() ==
          vec({Rational(23, 60), Rational(1, 3), Rational(17, 60)}));
    CHECK(type2_weights(4, Rational(1, 10)).weights() ==
          vec({Rational(2, 5), Rational(3, 10), Rational(1, 5), Rational(1, 10)}));
    CHECK(type2_weights(5, Rational(0)).weights() == equal_weights(5).weights());
}

TEST_CASE("negative alpha reverses the progression") {
    CHECK(type2_weights(3, Rational(-1, 10)).weights() ==
          vec({Rational(7, 30), Rational(1, 3), Rational(13, 30)}));

    const auto forward = type2_weights(6, Rational(1, 40)).weights();
    auto backward = type2_weights(6, Rational(-1, 40)).weights();
    std::reverse(backward.begin(), backward.end());
    CHECK(forward == backward);
}

TEST_CASE("type2 positivity policies") {
    CHECK(error_code_of([] { type2_weights(4, Rational(1, 5)); }) == "alpha-out-of-range");
    // the boundary alpha zeroes the last weight: rejected strictly, allowed otherwise
    CHECK(error_code_of([] { type2_weights(4, Rational(1, 6)); }) == "alpha-out-of-range");
    CHECK(type2_weights(4, Rational(1, 6), PositivityPolicy::AllowZero).weights().back() ==
          Rational(0));
    // unchecked permits negative weights but still sums to one
    const auto v = type2_weights(4, Rational(1, 4), PositivityPolicy::Unchecked);
    CHECK(v.weights().back() == Rational(-1, 8));
    CHECK(sum_of(v) == Rational(1));
    // k = 1 has no constraint to violate
    CHECK(type2_weights(1, Rational(5)).weights() == vec({Rational(1)}));
}

TEST_CASE("geometric weights halve position by position") {
    CHECK(geometric_weights(1).weights() == vec({Rational(1)}));
    CHECK(geometric_weights(4).weights() ==
          vec({Rational(8, 15), Rational(4, 15), Rational(2, 15), Rational(1, 15)}));
    CHECK(geometric_weights(6).weights().back() == Rational(1, 63));

    // far past the 64-bit range for 2^k - 1
    const auto big = geometric_weights(80);
    CHECK(sum_of(big) == Rational(1));
    Rational pow(1);
    for (int i = 0; i < 79; ++i) pow *= Rational(2);
    CHECK(first_last_ratio(big) == pow);
}

TEST_CASE("harmonic weights are 1/j over H_k") {
    CHECK(harmonic_weights(1).weights() == vec({Rational(1)}));
    CHECK(harmonic_weights(3).weights() ==
          vec({Rational(6, 11), Rational(3, 11), Rational(2, 11)}));
    CHECK(harmonic_weights(5).weights() ==
          vec({Rational(60, 137), Rational(30, 137), Rational(20, 137), Rational(15, 137),
               Rational(12, 137)}));
    CHECK(harmonic_number(10) == Rational(7381, 2520));
}

TEST_CASE("harmonic sum approximation ln k + gamma + 1/(2k)") {
    const HarmonicSum s = harmonic_sum(100);
    CHECK(s.exact == harmonic_number(100));
    CHECK(std::fabs(s.approx - s.exact.to_double()) < 1.25e-5);
}

TEST_CASE("harmonic number stays between ln(k+1) and ln k + 1") {
    Rational h(1);
    for (int k = 2; k <= 200; ++k) {
        h += Rational(1, k);
        const long double hd = h.to_long_double();
        CHECK(std::log(static_cast<long double>(k + 1)) < hd);
        CHECK(hd < std::log(static_cast<long double>(k)) + 1.0L);
    }
}

TEST_CASE("type2 endpoints and ratio") {
    const auto [w1, wk] = type2_endpoints(3, Rational(1, 20));
    CHECK(w1 == Rational(23, 60));
    CHECK(wk == Rational(17, 60));
    CHECK(type2_ratio(5, Rational(1, 20)) == Rational(3));
    CHECK(type2_ratio(5, Rational(0)) == Rational(1));
    // alpha = 1 zeroes w2 at k = 2
    CHECK(error_code_of([] { type2_ratio(2, Rational(1)); }) == "division-by-zero-weight");
}

TEST_CASE("alpha recovered from endpoints") {
    const AlphaInversion inv = alpha_from_endpoints(4, Rational(2, 5), Rational(1, 10));
    CHECK(inv.alpha == Rational(1, 10));
    CHECK(inv.consistent);
    CHECK(inv.endpoint_sum == Rational(1, 2));

    CHECK(error_code_of([] { alpha_from_endpoints(1, Rational(1), Rational(1)); }) ==
          "underdetermined");
}

TEST_CASE("two-author endpoint pairs from the worked example") {
    const std::pair<Rational, Rational> cases[] = {
        {Rational(13, 25), Rational(1, 25)}, {Rational(11, 20), Rational(1, 10)},
        {Rational(3, 5), Rational(1, 5)},    {Rational(13, 20), Rational(3, 10)},
        {Rational(7, 10), Rational(2, 5)},
    };
    for (const auto& [w1, alpha] : cases) {
        CAPTURE(w1.to_fraction_string());
        const AlphaInversion inv = alpha_from_endpoints(2, w1, Rational(1) - w1);
        CHECK(inv.alpha == alpha);
        CHECK(inv.consistent);
    }
}

TEST_CASE("inconsistent endpoints are reported, not thrown") {
    const AlphaInversion inv = alpha_from_endpoints(3, Rational(1, 2), Rational(2, 5));
    CHECK_FALSE(inv.consistent);
    CHECK(inv.endpoint_sum == Rational(9, 10));
    CHECK(inv.alpha == Rational(1, 20));
}

TEST_CASE("full vector from endpoints") {
    CHECK(weights_from_endpoints(3, Rational(23, 60), Rational(17, 60)).weights() ==
          vec({Rational(23, 60), Rational(1, 3), Rational(17, 60)}));
    CHECK(weights_from_endpoints(2, Rational(3, 5), Rational(2, 5)).weights() ==
          vec({Rational(3, 5), Rational(2, 5)}));
    CHECK(error_code_of([] { weights_from_endpoints(3, Rational(1, 2), Rational(2, 5)); }) ==
          "inconsistent-endpoints");
}

TEST_CASE("max_alpha bound and strictness") {
    const AlphaBound strict = max_alpha(4, Rational(0));
    CHECK(strict.max_alpha == Rational(1, 6));
    CHECK(strict.strict);

    const AlphaBound floored = max_alpha(4, Rational(1, 20));
    CHECK(floored.max_alpha == Rational(2, 15));
    CHECK_FALSE(floored.strict);
    // the floored bound is attainable: the last weight lands exactly on mu
    CHECK(type2_weights(4, floored.max_alpha).weights().back() == Rational(1, 20));

    CHECK(max_alpha(2, Rational(1, 2)).max_alpha == Rational(0));
    CHECK(error_code_of([] { max_alpha(1, Rational(0)); }) == "no-constraint");
    CHECK(error_code_of([] { max_alpha(3, Rational(1, 2)); }) == "infeasible-floor");
    CHECK(error_code_of([] { max_alpha(3, Rational(-1, 10)); }) == "infeasible-floor");
}

TEST_CASE("type1 is type2 at alpha = 2/(k(k+1))") {
    CHECK(alpha_matching_type1(1) == Rational(1));
    CHECK(alpha_matching_type1(4) == Rational(1, 10));
    CHECK(alpha_matching_type1(10) == Rational(1, 55));
    for (int k = 1; k <= 50; ++k) {
        CAPTURE(k);
        CHECK(type2_weights(k, alpha_matching_type1(k)).weights() ==
              type1_weights(k).weights());
    }
}

TEST_CASE("delta against equal weights") {
    CHECK(delta_vs_equal(type2_weights(5, Rational(1, 20))) ==
          vec({Rational(1, 10), Rational(1, 20), Rational(0), Rational(-1, 20),
               Rational(-1, 10)}));
    CHECK(delta_vs_equal(harmonic_weights(3)) ==
          vec({Rational(7, 33), Rational(-2, 33), Rational(-5, 33)}));

    for (const WeightVector& v : {geometric_weights(7), harmonic_weights(9),
                                  type1_weights(6), equal_weights(4)}) {
        Rational s;
        for (const Rational& d : delta_vs_equal(v)) s += d;
        CHECK(s == Rational(0));
    }
}

TEST_CASE("first to last ratio laws") {
    for (int k = 2; k <= 64; ++k) {
        CAPTURE(k);
        CHECK(first_last_ratio(type1_weights(k)) == Rational(k));
        CHECK(first_last_ratio(harmonic_weights(k)) == Rational(k));
        Rational pow(1);
        for (int i = 0; i < k - 1; ++i) pow *= Rational(2);
        CHECK(first_last_ratio(geometric_weights(k)) == pow);
        CHECK(first_last_ratio(equal_weights(k)) == Rational(1));
    }
    CHECK(error_code_of([] {
              first_last_ratio(type2_weights(3, Rational(1, 3), PositivityPolicy::AllowZero));
          }) == "division-by-zero-weight");
}

TEST_CASE("linearity classification") {
    CHECK(classify_linearity(equal_weights(5)) == Linearity::Linear);
    CHECK(classify_linearity(type1_weights(5)) == Linearity::Linear);
    CHECK(classify_linearity(type2_weights(5, Rational(1, 20))) == Linearity::Linear);
    CHECK(classify_linearity(geometric_weights(5)) == Linearity::Nonlinear);
    CHECK(classify_linearity(harmonic_weights(5)) == Linearity::Nonlinear);
    // too short for curvature
    CHECK(classify_linearity(geometric_weights(2)) == Linearity::Linear);
    CHECK(classify_linearity(harmonic_weights(1)) == Linearity::Linear);
}

TEST_CASE("scheme names round trip") {
    for (SchemeKind kind : {SchemeKind::Equal, SchemeKind::ArithmeticType1,
                            SchemeKind::ArithmeticType2, SchemeKind::Geometric,
                            SchemeKind::Harmonic}) {
        CHECK(parse_scheme_name(scheme_name(kind)) == kind);
    }
    CHECK(scheme_name(SchemeKind::ArithmeticType2) == "type2");
    CHECK_FALSE(parse_scheme_name("Type2").has_value());
    CHECK_FALSE(parse_scheme_name("arith").has_value());
}

TEST_CASE("scheme spec validation and dispatch") {
    CHECK(error_code_of([] {
              SchemeSpec{SchemeKind::ArithmeticType2, std::nullopt,
                         PositivityPolicy::StrictPositive}
                  .validate();
          }) == "invalid-scheme-spec");
    CHECK(error_code_of([] {
              SchemeSpec{SchemeKind::Equal, Rational(1, 10), PositivityPolicy::StrictPositive}
                  .validate();
          }) == "invalid-scheme-spec");

    CHECK(SchemeSpec::equal().weights(3).weights() == equal_weights(3).weights());
    CHECK(SchemeSpec::type1().weights(4).weights() == type1_weights(4).weights());
    CHECK(SchemeSpec::type2(Rational(1, 10)).weights(3).weights() ==
          type2_weights(3, Rational(1, 10)).weights());
    CHECK(SchemeSpec::geometric().weights(5).weights() == geometric_weights(5).weights());
    CHECK(SchemeSpec::harmonic().weights(6).weights() == harmonic_weights(6).weights());
}

TEST_CASE("weight vector invariants") {
    const WeightVector v = WeightVector::from_weights({Rational(2, 3), Rational(1, 3)});
    CHECK(v.author_count() == 2);
    CHECK(v.weight_at(1) == Rational(2, 3));
    CHECK(v.weight_at(2) == Rational(1, 3));
    CHECK(error_code_of([&] { v.weight_at(0); }) == "position-out-of-range");
    CHECK(error_code_of([&] { v.weight_at(3); }) == "position-out-of-range");
    CHECK(error_code_of([] { WeightVector::from_weights({}); }) == "invalid-author-count");
    CHECK(error_code_of([] {
              WeightVector::from_weights({Rational(1, 2), Rational(1, 3)});
          }) == "weights-not-normalized");
}

// === properties over randomized inputs ========================================

TEST_CASE("every scheme sums to exactly one") {
    for (int k = 1; k <= 100; ++k) {
        CAPTURE(k);
        CHECK(sum_of(equal_weights(k)) == Rational(1));
        CHECK(sum_of(type1_weights(k)) == Rational(1));
        CHECK(sum_of(geometric_weights(k)) == Rational(1));
        CHECK(sum_of(harmonic_weights(k)) == Rational(1));
        const Rational alpha = k >= 2 ? Rational(1, static_cast<long>(k) * (k - 1)) : Rational(0);
        CHECK(sum_of(type2_weights(k, alpha)) == Rational(1));
    }
}

TEST_CASE("closed-form endpoints agree with the per-position formula") {
    std::mt19937 gen(20260817);
    std::uniform_int_distribution<int> kd(2, 40);
    for (int i = 0; i < 200; ++i) {
        const int k = kd(gen);
        const Rational alpha = random_feasible_alpha(k, gen);
        CAPTURE(k);
        CAPTURE(alpha.to_fraction_string());
        const auto [w1, wk] = type2_endpoints(k, alpha);
        const WeightVector direct = type2_weights(k, alpha);
        CHECK(direct.weight_at(1) == w1);
        CHECK(direct.weight_at(k) == wk);
        CHECK(weights_from_endpoints(k, w1, wk).weights() == direct.weights());
    }
}

TEST_CASE("alpha inversion round-trips") {
    std::mt19937 gen(987654);
    std::uniform_int_distribution<int> kd(2, 40);
    for (int i = 0; i < 200; ++i) {
        const int k = kd(gen);
        const Rational alpha = random_feasible_alpha(k, gen);
        const auto [w1, wk] = type2_endpoints(k, alpha);
        const AlphaInversion inv = alpha_from_endpoints(k, w1, wk);
        CAPTURE(k);
        CHECK(inv.alpha == alpha);
        CHECK(inv.consistent);
    }
}

TEST_CASE("weights inside the strict bound stay positive") {
    std::mt19937 gen(555);
    std::uniform_int_distribution<int> kd(2, 40);
    for (int i = 0; i < 100; ++i) {
        const int k = kd(gen);
        const Rational alpha = random_feasible_alpha(k, gen);
        for (const Rational& w : type2_weights(k, alpha).weights()) {
            CHECK(w > Rational(0));
        }
    }
}
