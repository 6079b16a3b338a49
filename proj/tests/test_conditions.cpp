#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "wcert/certification.hpp"
#include "wcert/conditions.hpp"
#include "wcert/error.hpp"
#include "wcert/oracle.hpp"

using namespace wcert;
using wcert::test::near;

namespace {

double wang_zhao_formula(std::size_t n) {
    const double c = std::pow(2.0, 1.0 / double(n - 1));
    return (c - 1.0) / (4.0 * c - 3.0);
}

// Both sides of the distance-ratio inequality from the pair tables and the plain norm.
std::pair<double, double> ratio_inequality_sides(const ComplexVector& u, const ComplexVector& v, double p) {
    const RealVector du = test::pair_table_distances(u);
    const RealVector dv = test::pair_table_distances(v);
    RealVector ru(u.size());
    RealVector rv(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        ru[i] = std::abs(u[i] - v[i]) / du[i];
        rv[i] = std::abs(u[i] - v[i]) / dv[i];
    }
    const double b = p == 1.0 ? 1.0 : std::pow(2.0, 1.0 - 1.0 / p);
    const double lhs = test::direct_p_norm(ru, p);
    return {lhs, (1.0 - b * lhs) * test::direct_p_norm(rv, p)};
}

}  // namespace

TEST_CASE("distance-ratio inequality examples") {
    const PNormSpec inf2 = PNormSpec::make(2, kInfinity);
    const ComplexVector u{0.0, 1.0};
    CHECK(prop41_inequality_holds(u, u, inf2));
    const ComplexVector v{0.1, 0.9};
    const auto [lhs, rhs] = ratio_inequality_sides(u, v, kInfinity);
    CHECK(near(lhs, 0.1, 1e-15));
    CHECK(near(rhs, 0.1, 1e-15));  // equality
    CHECK(prop41_inequality_holds(u, v, inf2));
}

TEST_CASE("distance-ratio inequality on random pairs") {
    Rng rng(101);
    int failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const double p = std::vector<double>{1.0, 2.0, kInfinity}[trial % 3];
        const ComplexVector u = test::random_vector(rng, n, 2.0);
        ComplexVector v = u;
        const double spread = std::vector<double>{1e-3, 0.1, 1.0, 3.0}[trial % 4];
        for (Complex& z : v) z += rng.in_disk(spread);
        if (separation(v) == 0.0 || separation(u) == 0.0) continue;
        const bool got = prop41_inequality_holds(u, v, PNormSpec::make(n, p));
        if (!got) ++failures;
        const auto [lhs, rhs] = ratio_inequality_sides(u, v, p);
        CHECK(lhs >= rhs - 1e-10 * std::max(1.0, std::abs(rhs)));
    }
    CHECK(failures == 0);
}

TEST_CASE("convert_first_to_second") {
    const ConversionResult r = convert_first_to_second(1.0 / 3.0, 2, kInfinity);
    REQUIRE(r.domain_ok);
    CHECK(near(*r.R_out, 0.2, 1e-15));
    for (std::size_t n = 2; n <= 10; ++n) {
        const double R = classical_radius(ClassicalTheorem::dochev, n);
        CHECK(std::abs(*convert_first_to_second(R, n, kInfinity).R_out - wang_zhao_formula(n)) <= 1e-15);
    }
    const double tiny = 1e-9;
    CHECK(near(*convert_first_to_second(tiny, 5, 2.0).R_out / tiny, 1.0, 1e-8));
    CHECK_FALSE(convert_first_to_second(0.0, 3, 2.0).domain_ok);
    CHECK_FALSE(convert_first_to_second(-1.0, 3, 2.0).R_out.has_value());
}

TEST_CASE("convert_second_to_third") {
    const ConversionResult r = convert_second_to_third(0.5, 2, kInfinity);
    REQUIRE(r.domain_ok);
    CHECK(*r.R_out == 0.25);
    CHECK(r.strict_required);
    CHECK_FALSE(convert_second_to_third(0.4, 2, kInfinity).strict_required);
    CHECK_FALSE(convert_second_to_third(0.5 + 1e-9, 2, kInfinity).domain_ok);

    const double a = 4.0;  // n = 5, p = inf
    CHECK(convert_second_to_third(1.0 / 3.0, 5, kInfinity).domain_ok);
    CHECK_FALSE(convert_second_to_third(0.34, 5, kInfinity).domain_ok);
    CHECK(near(*convert_second_to_third(1.0 / 3.0, 5, kInfinity).R_out, 1.0 / 9.0, 1e-15));
    CHECK(near(second_to_third_map(1.0 / 3.0, a), 1.0 / 9.0, 1e-15));
}

TEST_CASE("h inverts g and g increases") {
    for (double a : {1.0, 2.0, 4.0}) {
        const double end = 1.0 / (1.0 + std::sqrt(a));
        double prev = 0.0;
        for (int k = 1; k <= 200; ++k) {
            const double R = end * k / 200.0;
            const double g = second_to_third_map(R, a);
            CHECK(g > prev);
            prev = g;
            CHECK(std::abs(second_to_third_inverse(g, a) - R) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(second_to_third_inverse(0.3, 1.0), Error);
}

TEST_CASE("convert_second_to_third_simple") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const ConversionResult r = convert_second_to_third_simple(1.0 / (2.0 * n + 2.0), n, kInfinity);
        REQUIRE(r.domain_ok);
        CHECK(std::abs(*r.R_out - 1.0 / (3.0 * n + 2.0)) <= 1e-14);
        CHECK(1.0 / (3.0 * n + 2.0) >= 1.0 / (3.0 * n + 3.0));
    }
    CHECK(near(*convert_second_to_third_simple(1.0 / 10.0, 4, kInfinity).R_out, 1.0 / 14.0, 1e-15));
    CHECK(*convert_second_to_third_simple(0.5, 2, kInfinity).R_out == 0.25);
    CHECK(*convert_second_to_third_simple(0.5, 2, kInfinity).R_out == *convert_second_to_third(0.5, 2, kInfinity).R_out);
    CHECK_FALSE(convert_second_to_third_simple(0.51, 2, kInfinity).domain_ok);
}

TEST_CASE("convert_first_to_third") {
    const ConversionResult r = convert_first_to_third(1.0, 2, kInfinity);
    REQUIRE(r.domain_ok);
    CHECK(near(*r.R_out, 2.0 / 9.0, 1e-15));
    CHECK(r.strict_required);
    const double tiny = 1e-9;
    CHECK(near(*convert_first_to_third(tiny, 6, 2.0).R_out / tiny, 1.0, 1e-7));
}

TEST_CASE("first-to-third equals the composition through the second type") {
    for (std::size_t n = 2; n <= 12; ++n) {
        for (double p : {1.0, 1.5, 2.0, 3.0, 10.0, kInfinity}) {
            const PNormSpec spec = PNormSpec::make(n, p);
            const double denom = 1.0 - spec.b + std::sqrt(spec.a);
            const double end = denom > 0.0 ? 1.0 / denom : 5.0;
            for (int k = 1; k <= 50; ++k) {
                const double R = end * k / 50.0;
                const ConversionResult direct = convert_first_to_third(R, n, p);
                REQUIRE(direct.domain_ok);
                const ConversionResult mid = convert_first_to_second(R, n, p);
                const ConversionResult composed = convert_second_to_third(*mid.R_out, n, p);
                REQUIRE(composed.domain_ok);
                CHECK(std::abs(*direct.R_out - *composed.R_out) <= 1e-13);
            }
        }
    }
}

TEST_CASE("convert_first_to_third_simple") {
    // a = 2, b = 2: 1 / (1 + 5).
    CHECK(near(*convert_first_to_third_simple(1.0, 3, kInfinity).R_out, 1.0 / 6.0, 1e-15));
    CHECK_FALSE(convert_first_to_third_simple(1.0, 4, kInfinity).domain_ok);
    for (std::size_t n : {3, 5, 9}) {
        const PNormSpec spec = PNormSpec::make(n, 2.0);
        const double end = 1.0 / (spec.a - spec.b + 1.0);
        double prev = 0.0;
        for (int k = 1; k <= 100; ++k) {
            const double out = *convert_first_to_third_simple(end * k / 100.0, n, 2.0).R_out;
            CHECK(out > prev);
            prev = out;
        }
    }
}

TEST_CASE("converters reject a bad n or p") {
    CHECK_THROWS_AS(convert_first_to_second(0.1, 1, 2.0), Error);
    CHECK_THROWS_AS(convert_second_to_third(0.1, 3, 0.5), Error);
}

TEST_CASE("classical_radius") {
    CHECK(near(classical_radius(ClassicalTheorem::dochev, 2), 1.0 / 3.0, 1e-15));
    CHECK(near(classical_radius(ClassicalTheorem::wang_zhao, 2), 0.2, 1e-15));
    CHECK(near(classical_radius(ClassicalTheorem::pct, 4), 0.05, 1e-15));
    for (std::size_t n = 2; n <= 10; ++n)
        CHECK(near(classical_radius(ClassicalTheorem::wang_zhao, n), wang_zhao_formula(n), 1e-15));
}

TEST_CASE("check_condition") {
    const Polynomial f({1.0, -6.0, 11.0, -6.0});
    const ComplexVector roots{1.0, 2.0, 3.0};
    const PNormSpec spec = PNormSpec::make(3, 2.0);
    CHECK(check_condition({ConditionKind::third, NormForm::componentwise}, f, roots, spec, 0.0));
    CHECK(check_condition({ConditionKind::first, NormForm::aggregate}, f, roots, spec, 0.0, std::span<const Complex>(roots)));

    const Polynomial sq({1.0, 0.0, 0.0});
    const ComplexVector x{-1.0, 1.0};
    const ComplexVector xi{0.0, 0.0};
    const PNormSpec inf2 = PNormSpec::make(2, kInfinity);
    const ConditionType second{ConditionKind::second, NormForm::componentwise};
    CHECK(condition_value(second, sq, x, inf2, std::span<const Complex>(xi)) == 0.5);
    CHECK(check_condition(second, sq, x, inf2, 0.5, std::span<const Complex>(xi)));
    CHECK_FALSE(check_condition(second, sq, x, inf2, 0.49, std::span<const Complex>(xi)));
    CHECK(condition_value({ConditionKind::third, NormForm::componentwise}, sq, x, inf2) == 0.25);
    CHECK(condition_value({ConditionKind::third, NormForm::aggregate}, sq, x, inf2) == 0.25);

    try {
        check_condition(second, sq, x, inf2, 1.0);
        FAIL("expected missing_reference");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::missing_reference);
    }
}

TEST_CASE("pct_condition and the local hypotheses") {
    const Polynomial f({1.0, -6.0, 11.0, -6.0});
    CHECK(pct_condition(f, ComplexVector{1.0, 2.0, 3.0}));
    CHECK_FALSE(pct_condition(f, ComplexVector{1.3, 2.0, 3.0}));
    const ComplexVector xi{1.0, 2.0, 3.0};
    CHECK(testing::dochev_hypothesis(ComplexVector{1.1, 2.0, 3.0}, xi));
    CHECK_FALSE(testing::dochev_hypothesis(ComplexVector{1.3, 2.0, 3.0}, xi));
    CHECK(testing::wang_zhao_hypothesis(ComplexVector{1.05, 2.0, 3.0}, xi));
}

TEST_CASE("a converted third-type condition implies the source condition") {
    // E <= g(R) must give ||(x - xi)/d(x)||_p <= R for the matched root-vector.
    Rng rng(111);
    int applied = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const double p = std::vector<double>{1.0, 2.0, kInfinity}[trial % 3];
        const PNormSpec spec = PNormSpec::make(n, p);
        const GroundTruthInstance inst = random_instance(n, rng.next(), 0.25, 2.0);
        const ComplexVector x = perturbed_guess(inst, rng.uniform(0.0, 0.1), rng.next());
        const ComplexVector xi = match_root_vector(x, inst.roots);
        REQUIRE(!xi.empty());
        const double second = condition_value({ConditionKind::second, NormForm::componentwise}, inst.polynomial, x,
                                              spec, std::span<const Complex>(xi));
        const double E = compute_E(inst.polynomial, x, spec);
        const double end = 1.0 / (1.0 + std::sqrt(spec.a));
        for (int k = 1; k <= 20; ++k) {
            const double R = end * k / 20.0;
            if (E > *convert_second_to_third(R, n, p).R_out) continue;
            ++applied;
            CHECK(second <= R * (1 + 1e-10));
        }
    }
    CHECK(applied > 1000);
}

TEST_CASE("converter shape properties") {
    using Converter = ConversionResult (*)(double, std::size_t, double);
    const std::vector<Converter> all{convert_first_to_second, convert_second_to_third, convert_second_to_third_simple,
                                     convert_first_to_third, convert_first_to_third_simple};
    for (std::size_t n = 2; n <= 12; ++n) {
        for (double p : {1.0, 2.0, 5.0, kInfinity}) {
            for (Converter conv : all) {
                const ConversionResult tiny = conv(1e-8, n, p);
                REQUIRE(tiny.domain_ok);
                CHECK(std::abs(*tiny.R_out / 1e-8 - 1.0) <= 1e-6);
                for (double R : {1e-3, 0.01, 0.05, 0.1, 0.2}) {
                    const ConversionResult r = conv(R, n, p);
                    if (r.domain_ok) CHECK(*r.R_out < R);
                }
            }
            // The simplified forms never exceed the full ones where both apply.
            for (int k = 1; k <= 100; ++k) {
                const double R = k / 100.0;
                const ConversionResult s23 = convert_second_to_third_simple(R, n, p);
                const ConversionResult f23 = convert_second_to_third(R, n, p);
                if (s23.domain_ok && f23.domain_ok) CHECK(*s23.R_out <= *f23.R_out * (1 + 1e-15));
                const ConversionResult s13 = convert_first_to_third_simple(R, n, p);
                const ConversionResult f13 = convert_first_to_third(R, n, p);
                if (s13.domain_ok && f13.domain_ok) CHECK(*s13.R_out <= *f13.R_out * (1 + 1e-15));
            }
        }
    }
}
