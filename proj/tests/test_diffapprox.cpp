#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diagasym/diffapprox.hpp"
#include "diagasym/errors.hpp"
#include "diagasym/polyroots.hpp"
#include "diagasym/series_engine.hpp"

using namespace diagasym;

namespace {

// Taylor coefficients of P/Q from the linear recurrence q_0 c_n = p_n - sum q_j c_{n-j}
std::vector<Int> rational_function_series(const RationalPoly& p, const RationalPoly& q, int count) {
    REQUIRE(q.coeff(0) != 0);
    std::vector<Rat> c(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        Rat acc = p.coeff(n);
        for (int j = 1; j <= q.degree() && j <= n; ++j) {
            acc -= q.coeff(j) * c[static_cast<std::size_t>(n - j)];
        }
        c[static_cast<std::size_t>(n)] = acc / q.coeff(0);
    }
    // integerize: the tests construct Q with q_0 = +-1 so this is exact
    std::vector<Int> out;
    for (const Rat& v : c) {
        REQUIRE(v.get_den() == 1);
        out.push_back(v.get_num());
    }
    return out;
}

std::vector<Int> central_binomials(int count) {
    std::vector<Int> v;
    for (int n = 0; n < count; ++n) v.push_back(binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n)));
    return v;
}

}  // namespace

TEST_CASE("fit recovers 1/(1-2x) exactly") {
    std::vector<Int> terms;
    Int p2(1);
    for (int n = 0; n < 12; ++n) {
        terms.push_back(p2);
        p2 *= 2;
    }
    DifferentialApproximant da = fit_approximant(terms, 1, {0, 1}, 0);
    // normalized so the constant coefficient of Q_1 is 1: Q_1 = 1 - 2x
    CHECK(da.q_polys[1] == RationalPoly({Rat(1), Rat(-2)}));
    CHECK(da.inhom.is_zero());

    auto sing = singularities(da, 256);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].location.re == BigFloat::from(Rat(1, 2), 256));
    CHECK(sing[0].location.im.is_zero());

    // simple pole: exponent -1
    BigFloat expnt = exponent_at(da, BigFloat::from(Rat(1, 2), 256));
    CHECK(agreement_bits(expnt, BigFloat::from(-1L, 256)) >= 27);  // within 1e-8
}

TEST_CASE("central binomial series: Q_1 proportional to 1-4x, exponent -1/2") {
    std::vector<Int> terms = central_binomials(20);
    DifferentialApproximant da = fit_approximant(terms, 1, {0, 1}, 0);
    CHECK(da.q_polys[1] == RationalPoly({Rat(1), Rat(-4)}));

    auto sing = singularities(da, 256);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].location.re == BigFloat::from(Rat(1, 4), 256));

    BigFloat expnt = exponent_at(da, BigFloat::from(Rat(1, 4), 256));
    CHECK(agreement_bits(expnt, BigFloat::from(Rat(-1, 2), 256)) >= 27);
}

TEST_CASE("exact pole recovery for random small rational functions") {
    // poles planted at reciprocals of integers keep Q integral and make the
    // expected locations exact by construction (the independent oracle)
    std::mt19937_64 rng(2024);
    int instances = 0;
    while (instances < 20) {
        const int qdeg = 1 + static_cast<int>(rng() % 4);
        // Q = prod (1 - m_i x) with distinct nonzero integers m_i
        std::vector<Rat> roots;  // pole locations 1/m_i
        RationalPoly q = RationalPoly::constant(Rat(1));
        bool ok = true;
        for (int i = 0; i < qdeg; ++i) {
            long m = static_cast<long>(rng() % 12) + 1;
            if (rng() % 2) m = -m;
            Rat r = frac(1, m);
            for (const Rat& prev : roots) {
                if (prev == r) ok = false;
            }
            if (!ok) break;
            roots.push_back(r);
            q = q * RationalPoly({Rat(1), Rat(-m)});
        }
        if (!ok) continue;
        const int pdeg = static_cast<int>(rng() % static_cast<unsigned long>(qdeg + 1));
        std::vector<Rat> pc(static_cast<std::size_t>(pdeg) + 1);
        for (auto& c : pc) c = Rat(static_cast<long>(rng() % 19) - 9);
        RationalPoly p(std::move(pc));
        if (p.is_zero()) continue;
        // numerator must not cancel a planted pole
        for (const Rat& r : roots) {
            if (p.eval(r) == 0) ok = false;
        }
        if (!ok) continue;
        ++instances;

        std::vector<Int> series = rational_function_series(p, q, 40);
        // shape of the exact identity Q F' + Q' F = P'
        std::vector<int> degrees = {std::max(q.degree() - 1, 0), q.degree()};
        int inhom_degree = std::max(p.degree() - 1, 0);
        DifferentialApproximant da = fit_approximant(series, 1, degrees, inhom_degree);

        auto sing = singularities(da, 256);
        BigFloat tol = pow(BigFloat::from(10L, 256), -20L);
        for (const Rat& r : roots) {
            bool found = false;
            BigFloat target = BigFloat::from(r, 256);
            for (const auto& s : sing) {
                if (abs(s.location.re - target) <= tol && abs(s.location.im) <= tol) found = true;
            }
            CHECK_MESSAGE(found, "pole ", rat_string(r), " not recovered");
        }
    }
}

TEST_CASE("constructed double root is reported with multiplicity 2") {
    // control: Q_K planted as (1-2x)^2
    DifferentialApproximant da;
    da.order = 1;
    da.q_polys = {RationalPoly({Rat(-4)}), RationalPoly({Rat(1), Rat(-4), Rat(4)})};
    da.inhom = RationalPoly{};
    da.terms_used = 0;
    auto sing = singularities(da, 256);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].multiplicity == 2);
    CHECK(sing[0].location.re == BigFloat::from(Rat(1, 2), 256));

    // the indicial equation at a double root is degenerate
    CHECK_THROWS_AS(exponent_at(da, BigFloat::from(Rat(1, 2), 256)), DegenerateIndicialError);
}

TEST_CASE("cubical d=3 fit: log-type exponent at the dominant singularity") {
    // the coefficient behavior const * 8^n / n makes the generating function
    // logarithmic at 1/8, so the indicial exponent there is near 0; the
    // subdominant point at 1/9 carries an exponent near -1/2
    std::vector<Int> terms = diagasym::cubical_series(3, 80);
    DifferentialApproximant da = fit_approximant(terms, 2, {25, 25, 25}, 0);
    bool checked_eighth = false, checked_ninth = false;
    for (const auto& s : singularities(da, 256)) {
        if (!s.location.im.is_zero()) continue;
        double re = s.location.re.to_double();
        if (std::abs(re - 0.125) < 1e-8) {
            BigFloat e = exponent_at(da, s.location.re);
            CHECK(abs(e) < pow(BigFloat::from(10L, 256), -8L));
            checked_eighth = true;
        }
        if (std::abs(re - 1.0 / 9.0) < 1e-4) {
            BigFloat e = exponent_at(da, s.location.re);
            CHECK(abs(e - BigFloat::from(Rat(-1, 2), 256)) < BigFloat::from(Rat(1, 1000), 256));
            checked_ninth = true;
        }
    }
    CHECK(checked_eighth);
    CHECK(checked_ninth);
}

TEST_CASE("insufficient terms raise a domain error naming the requirement") {
    std::vector<Int> terms(5, Int(1));
    try {
        fit_approximant(terms, 2, {3, 3, 3}, 2);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        std::string msg = e.what();
        CHECK(msg.find("terms") != std::string::npos);
    }
}

TEST_CASE("pooling clusters family scatter and flags poor support") {
    // three planted approximants with Q_K sharing the roots 1/2 and 1/3;
    // one contributes a stray root as well
    auto make = [](std::vector<Rat> qk_coeffs) {
        DifferentialApproximant da;
        da.order = 1;
        da.q_polys = {RationalPoly({Rat(1)}), RationalPoly(std::move(qk_coeffs))};
        da.terms_used = 0;
        return da;
    };
    // (1-2x)(1-3x) = 1 -5x +6x^2
    std::vector<DifferentialApproximant> family;
    family.push_back(make({Rat(1), Rat(-5), Rat(6)}));
    family.push_back(make({Rat(1), Rat(-5), Rat(6)}));
    // (1-2x)(1-3x)(1-10x)
    family.push_back(make((RationalPoly({Rat(1), Rat(-5), Rat(6)}) * RationalPoly({Rat(1), Rat(-10)})).coeffs()));

    BigFloat radius = BigFloat::from(Rat(1, 1000), 256);
    auto clusters = pool_estimates(family, radius, 256);
    REQUIRE(clusters.size() == 3);
    // ordered by distance from origin: 1/10, 1/3, 1/2
    CHECK(abs(clusters[0].location.re - BigFloat::from(Rat(1, 10), 256)) < BigFloat::from(Rat(1, 1000000), 256));
    CHECK(clusters[0].n_supporting == 1);
    CHECK(clusters[0].spurious);  // only 1 of 3 approximants
    CHECK(clusters[1].n_supporting == 3);
    CHECK_FALSE(clusters[1].spurious);
    CHECK(clusters[2].n_supporting == 3);

    CHECK_THROWS_AS(pool_estimates({family[0]}, radius, 256), DomainError);
}

TEST_CASE("subdominance signature") {
    auto estimate = [](Rat loc, Rat unc, bool spurious = false) {
        SingularityEstimate e;
        e.location = BigComplex(BigFloat::from(loc, 256), BigFloat(256));
        e.uncertainty = BigFloat::from(unc, 256);
        e.n_supporting = 5;
        e.spurious = spurious;
        return e;
    };
    // closer singularity resolved WORSE: signature present
    {
        auto rep = subdominance_report({estimate(Rat(1, 9), Rat(1, 1000)), estimate(Rat(1, 8), Rat(1, 1000000))});
        CHECK(rep.signature);
    }
    // normal ordering: absent
    {
        auto rep = subdominance_report({estimate(Rat(1, 9), Rat(1, 1000000)), estimate(Rat(1, 8), Rat(1, 1000))});
        CHECK_FALSE(rep.signature);
    }
    // spurious estimates are ignored
    {
        auto rep = subdominance_report({estimate(Rat(1, 20), Rat(1, 10), true),
                                        estimate(Rat(1, 9), Rat(1, 1000000)), estimate(Rat(1, 8), Rat(1, 1000))});
        CHECK_FALSE(rep.signature);
        CHECK(rep.ordered.size() == 2);
    }
    CHECK_THROWS_AS(subdominance_report({estimate(Rat(1, 8), Rat(1))}), DomainError);
}

TEST_CASE("polyroots: exact linear factors, quadratics and scaling") {
    // (x - 3)(x + 5/2)
    RationalPoly p = RationalPoly({Rat(-3), Rat(1)}) * RationalPoly({Rat(5, 2), Rat(1)});
    auto roots = all_roots(p, 256);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value.re == BigFloat::from(Rat(-5, 2), 256));
    CHECK(roots[1].value.re == BigFloat::from(3L, 256));

    // x^2 + 1: conjugate pair
    auto ipair = all_roots(RationalPoly({Rat(1), Rat(0), Rat(1)}), 256);
    REQUIRE(ipair.size() == 2);
    BigFloat one = BigFloat::from(1L, 256);
    CHECK(agreement_bits(abs(ipair[0].value.im), one) >= 200);
    CHECK(agreement_bits(abs(ipair[1].value.im), one) >= 200);

    // zero roots are exact
    auto z = all_roots(RationalPoly({Rat(0), Rat(0), Rat(0), Rat(1)}), 128);
    REQUIRE(z.size() == 1);
    CHECK(z[0].multiplicity == 3);
    CHECK(z[0].value.re.is_zero());

    CHECK_THROWS_AS(all_roots(RationalPoly::constant(Rat(7)), 128), DomainError);
}

TEST_CASE("polyroots: high-degree polynomial with known roots") {
    // prod_{k=1}^{12} (x - k/7): every root recovered to ~target precision
    RationalPoly p = RationalPoly::constant(Rat(1));
    for (int k = 1; k <= 12; ++k) p = p * RationalPoly({frac(-k, 7), Rat(1)});
    auto roots = all_roots(p, 256);
    REQUIRE(roots.size() == 12);
    BigFloat tol = pow(BigFloat::from(10L, 256), -50L);
    for (int k = 1; k <= 12; ++k) {
        CHECK(abs(roots[static_cast<std::size_t>(k - 1)].value.re - BigFloat::from(Rat(k, 7), 256)) <= tol);
        CHECK(abs(roots[static_cast<std::size_t>(k - 1)].value.im) <= tol);
    }
}
