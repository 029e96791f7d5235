#include <doctest.h>

#include <cmath>

#include "eden/principal.hpp"

using namespace eden;

TEST_CASE("poly parse/format round-trip") {
    LaurentPoly f = parse_poly("f = -1,3,-1 @ -1");
    CHECK(f.lo() == -1);
    CHECK(f.hi() == 1);
    CHECK(f.coeff(0) == 3);
    CHECK(f.coeff(-1) == -1);
    CHECK(f.coeff(5) == 0);
    CHECK(parse_poly(format_poly(f)).coeffs == f.coeffs);
    CHECK(parse_poly("f=2,-1@0").coeffs == std::vector<long>{2, -1});
    CHECK_THROWS_AS(parse_poly("f = @ 0"), InvalidInputError);
    CHECK_THROWS_AS(parse_poly("f = 0,0 @ 1"), InvalidInputError);
    // canonical trimming of zero fringe coefficients
    LaurentPoly g = make_poly({0, 1, 2, 0}, -2);
    CHECK(g.lo() == -1);
    CHECK(g.coeffs == std::vector<long>{1, 2});
}

TEST_CASE("mod1 distance") {
    CHECK(mod1_dist(0.0) == 0.0);
    CHECK(mod1_dist(1.0) == doctest::Approx(0.0));
    CHECK(mod1_dist(0.3) == doctest::Approx(0.3));
    CHECK(mod1_dist(0.8) == doctest::Approx(0.2));
    CHECK(mod1_dist(-0.1) == doctest::Approx(0.1));
    CHECK(mod1_dist(17.25) == doctest::Approx(0.25));
}

TEST_CASE("invertibility certificates") {
    CHECK(is_l1_invertible(parse_poly("f = 3 @ 0")).invertible);
    CHECK(is_l1_invertible(parse_poly("f = -1,3,-1 @ -1")).invertible);
    CHECK(is_l1_invertible(parse_poly("f = 2,-1 @ 0")).invertible);
    // roots strictly off the circle on both sides
    CHECK(is_l1_invertible(parse_poly("f = -1,-1,1 @ 0")).invertible);

    auto r1 = is_l1_invertible(parse_poly("f = -1,1 @ 0"));  // t - 1, root z = 1
    CHECK_FALSE(r1.invertible);
    CHECK(std::abs(r1.witness - std::complex<double>(1.0, 0.0)) < 1e-6);

    auto r2 = is_l1_invertible(parse_poly("f = 1,1 @ 0"));   // t + 1, root z = -1
    CHECK_FALSE(r2.invertible);
    CHECK(std::abs(r2.witness - std::complex<double>(-1.0, 0.0)) < 1e-6);

    auto r3 = is_l1_invertible(parse_poly("f = 1,-1,1 @ 0"));  // roots e^{+-i pi/3}
    CHECK_FALSE(r3.invertible);
    CHECK(std::abs(std::abs(r3.witness) - 1.0) < 1e-6);
}

TEST_CASE("l1 inverse closed forms") {
    SUBCASE("f = 3") {
        SummableHomoclinic w = l1_inverse(parse_poly("f = 3 @ 0"), 1e-10);
        CHECK(w.at(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        CHECK(w.at(1) == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(w.residual <= 1e-8);
    }
    SUBCASE("f = 2 - t: one-sided geometric inverse") {
        SummableHomoclinic w = l1_inverse(parse_poly("f = 2,-1 @ 0"), 1e-10);
        for (long n = 0; n <= 10; ++n)
            CHECK(w.at(n) == doctest::Approx(std::pow(2.0, -(n + 1))).epsilon(1e-8));
        for (long n = 1; n <= 5; ++n) CHECK(std::abs(w.at(-n)) < 1e-8);
        CHECK(w.l1() == doctest::Approx(1.0).epsilon(1e-7));
    }
    SUBCASE("f = 3 - t - t^-1: two-sided geometric inverse") {
        SummableHomoclinic w = l1_inverse(parse_poly("f = -1,3,-1 @ -1"), 1e-10);
        double rho = (3.0 - std::sqrt(5.0)) / 2.0, s5 = std::sqrt(5.0);
        for (long n = -6; n <= 6; ++n)
            CHECK(w.at(n) == doctest::Approx(std::pow(rho, std::abs(n)) / s5).epsilon(1e-8));
        CHECK(w.residual <= 1e-8);
        CHECK(w.tail_bound <= 1e-8);
        CHECK(w.decay_rate < 1.0);
        CHECK(w.decay_rate > 0.0);
    }
    SUBCASE("non-invertible input is rejected") {
        CHECK_THROWS_AS(l1_inverse(parse_poly("f = -1,1 @ 0"), 1e-9), InvalidInputError);
    }
}

TEST_CASE("convolution identity holds numerically") {
    for (const char* s : {"f = 3 @ 0", "f = -1,3,-1 @ -1", "f = 2,-1 @ 0", "f = -1,-1,1 @ 0"}) {
        LaurentPoly f = parse_poly(s);
        SummableHomoclinic w = l1_inverse(f, 1e-10);
        CAPTURE(s);
        for (long n = -8; n <= 8; ++n) {
            double conv = 0.0;
            for (long k = f.lo(); k <= f.hi(); ++k)
                conv += static_cast<double>(f.coeff(k)) * w.at(n - k);
            CHECK(std::abs(conv - (n == 0 ? 1.0 : 0.0)) < 1e-7);
        }
    }
}

TEST_CASE("fundamental homoclinic point") {
    LaurentPoly f = parse_poly("f = -1,3,-1 @ -1");
    SummableHomoclinic w = l1_inverse(f, 1e-9);
    PrincipalPoint x = fundamental_homoclinic(f, 1e-9);
    CHECK(std::abs(x.summability() - w.l1()) < 1e-6);
    CHECK(x.residual <= 1e-9);
    // values are the inverse reduced mod 1
    for (long n = -4; n <= 4; ++n)
        CHECK(mod1_dist(x.at(n) - w.at(n)) < 1e-9);
}

TEST_CASE("gluing meets eps on separated windows") {
    LaurentPoly f = parse_poly("f = -1,3,-1 @ -1");
    double eps = 1.0 / 64.0;
    PrincipalPoint base = fundamental_homoclinic(f, 1e-10);
    long sep = required_separation(f, eps);
    CHECK(sep >= 1);
    long D = sep + 5;

    GlueTarget t1, t2;
    t1.window = Window::interval(-2, 2);
    for (long n = -2; n <= 2; ++n) t1.values.push_back(base.at(n));
    t2.window = Window::interval(D - 2, D + 2);
    // second target: a shifted, doubled copy of the homoclinic point
    for (long n = D - 2; n <= D + 2; ++n)
        t2.values.push_back(std::fmod(2.0 * base.at(n - D) + 1.0, 1.0));

    PrincipalPoint glued = glue_specification(f, {t1, t2}, eps);
    for (long n = -2; n <= 2; ++n) CHECK(mod1_dist(glued.at(n) - t1.values[n + 2]) <= eps);
    for (long n = D - 2; n <= D + 2; ++n)
        CHECK(mod1_dist(glued.at(n) - t2.values[n - (D - 2)]) <= eps);
    // glued point is still summably homoclinic
    CHECK(glued.summability() < 1e9);
    CHECK(glued.residual < 1e-6);
}

TEST_CASE("required separation grows as eps shrinks") {
    LaurentPoly f = parse_poly("f = -1,3,-1 @ -1");
    CHECK(required_separation(f, 1.0 / 4) <= required_separation(f, 1.0 / 64));
    CHECK(required_separation(f, 1.0 / 64) <= required_separation(f, 1.0 / 4096));
}
