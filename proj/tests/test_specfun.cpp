#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specmult/specfun.hpp"

using namespace specmult;

namespace {

// Reference values from a 50-digit evaluation of the defining formulas.
struct HermiteRef {
    int k;
    double x, value;
};
constexpr HermiteRef kHermiteRefs[] = {
    {0, 0.0, 0.751125544464942482858703},
    {10, 1.5, -0.3416352705101297709074002},
    {3, 0.5, -0.4783823052027587434358205},
    {7, -2.25, 0.4198031729331272891409205},
    {25, 3.0, 0.29344700435648359148359},
    {60, 1.0, -0.002544373913592813063009375},
    {60, 9.5, 0.03910396476817958726114378},
    {40, 6.0, 0.2572432477590448566270384},
    {15, 0.1, -0.1787162153497400880002659},
    {33, -4.75, 0.2785610735866574171678629},
    {52, 7.0, -0.2789599920772504431743761},
};

struct LaguerreRef {
    int k;
    double alpha, x, value;
};
constexpr LaguerreRef kLaguerreRefs[] = {
    {0, 0.5, 1.0, 0.9111613440226650696674105},
    {2, 1.5, 0.7, 0.6252510189319805847875108},
    {1, 0.5, 2.0, -0.8299997059054108254668171},
    {5, 0.1, 0.5, 0.1065954253352923122244788},
    {10, 2.5, 3.0, -0.4211488071135800839538095},
    {25, 0.5, 1.3, 0.1982710886514666177735453},
    {60, 1.0, 2.0, -0.2463888397190976469412547},
    {40, 0.1, 6.0, -0.3229743555528461935773664},
    {60, 2.5, 9.0, -0.3069733701397578933746946},
    {7, 3.5, 0.25, 0.02026533990291187874357454},
};

struct BesselRef {
    double alpha, z, value;
};
constexpr BesselRef kBesselRefs[] = {
    {0.0, 0.5, 0.6450352704491500681079966},
    {0.0, 100.0, 0.03994437929909668264755871},
    {0.5, 3.0, 0.2297585033975386095065179},
    {1.0, 25.0, 0.07857611331929277202814937},
    {1.0, 35.0, 0.0667044317294914390792681},
    {2.0, 30.0, 0.06835152444232745694851484},
    {3.5, 12.0, 0.06857898916712088812221557},
    {0.1, 700.0, 0.01508118785131170640512638},
    {2.5, 450.0, 0.01868122260072128730674354},
    {0.0, 0.001, 0.9990007495835155593742613},
};

constexpr BesselRef kBesselDiffRefs[] = {
    {0.5, 1.0, 0.2369693808618685220882535},
    {0.5, 29.0, 0.002554542126629941063700712},
    {0.5, 31.0, 0.002311359637508052816201641},
    {2.0, 50.0, 0.002674529934182047023840055},
    {0.1, 6.7e7, 4.364646891909987128225539e-13},
    {2.5, 450.0, 0.0001242641101409628812860513},
    {1.0, 30.0, 0.003564806156320097757613902},
    {3.5, 100.0, 0.001479635029069471652048076},
    {0.0, 0.001, 0.9985012492711613380268899},
    {1.5, 12.0, 0.01679485449842494826513403},
};

} // namespace

TEST_CASE("hermite function values against high-precision references") {
    for (const auto& r : kHermiteRefs) {
        const Vector h = hermite_functions(r.k, r.x);
        CHECK(std::abs(h[r.k] - r.value) <= 1e-12 * std::abs(r.value));
    }
    CHECK(hermite_functions(1, 0.0)[1] == 0.0);
}

TEST_CASE("hermite_10 against the explicit polynomial") {
    // H_10(x) = 1024 x^10 - 23040 x^8 + 161280 x^6 - 403200 x^4 + 302400 x^2 - 30240
    const double x = 1.5;
    const double poly = ((((1024.0 * x * x - 23040.0) * x * x + 161280.0) * x * x - 403200.0) * x * x +
                         302400.0) * x * x - 30240.0;
    const double norm = std::sqrt(std::pow(2.0, 10) * 3628800.0 * std::sqrt(std::numbers::pi));
    const double expected = poly / norm * std::exp(-0.5 * x * x);
    CHECK(std::abs(hermite_functions(10, x)[10] - expected) <= 1e-13);
}

TEST_CASE("hermite parity is exact") {
    for (double x : {0.3, 1.7, 4.2, 9.9}) {
        const Vector hp = hermite_functions(40, x);
        const Vector hm = hermite_functions(40, -x);
        for (int k = 0; k <= 40; ++k) {
            const double expect = (k % 2 == 0) ? hp[k] : -hp[k];
            CHECK(hm[k] == expect);
        }
    }
}

TEST_CASE("hermite recurrence survives large index and argument") {
    const Vector h = hermite_functions(512, 40.0);
    for (int k = 0; k <= 512; ++k) CHECK(std::isfinite(h[k]));
    const Vector h2 = hermite_functions(512, -40.0);
    for (int k = 0; k <= 512; ++k) CHECK(std::isfinite(h2[k]));
    CHECK_THROWS_AS(hermite_functions(-1, 0.0), std::domain_error);
    CHECK_THROWS_AS(hermite_functions(3, std::nan("")), std::domain_error);
}

TEST_CASE("laguerre function values against high-precision references") {
    for (const auto& r : kLaguerreRefs) {
        const LaguerreBasis basis(r.alpha, r.k);
        const Vector phi = basis.eval(r.x);
        CHECK(std::abs(phi[r.k] - r.value) <= 1e-10 * std::abs(r.value));
    }
}

TEST_CASE("laguerre ground state closed form and positivity") {
    // phi_0^{1/2}(x) = 2 pi^{-1/4} x e^{-x^2/2}
    const LaguerreBasis b(0.5, 0);
    const double v = b.eval(1.0)[0];
    CHECK(std::abs(v - 2.0 * std::pow(std::numbers::pi, -0.25) * std::exp(-0.5)) <= 1e-14);
    for (double x : {0.01, 0.4, 2.0, 7.5}) CHECK(b.eval(x)[0] > 0.0);
}

TEST_CASE("laguerre domain guards") {
    CHECK_THROWS_AS(LaguerreBasis(-0.5, 4), std::domain_error);
    CHECK_THROWS_AS(LaguerreBasis(-0.7, 4), std::domain_error);
    LaguerreBasis b(0.5, 4);
    CHECK_THROWS_AS(b.eval(0.0), std::domain_error);
    CHECK_THROWS_AS(b.eval(-1.0), std::domain_error);
}

TEST_CASE("laguerre alpha=1/2 matches odd hermite functions") {
    // phi_k^{1/2}(x) = s_k sqrt(2) h_{2k+1}(x); the sign pattern is measured,
    // with s_k = (-1)^k expected.
    for (int k = 0; k <= 5; ++k) {
        const LaguerreBasis b(0.5, k);
        const double x0 = 0.35;
        const double lhs0 = b.eval(x0)[k];
        const double rhs0 = std::sqrt(2.0) * hermite_functions(2 * k + 1, x0)[2 * k + 1];
        const double sk = lhs0 * rhs0 >= 0.0 ? 1.0 : -1.0;
        CHECK(sk == ((k % 2 == 0) ? 1.0 : -1.0));
        double worst = 0.0;
        for (double x = 0.1; x <= 6.0; x += 0.145) {
            const double lhs = b.eval(x)[k];
            const double rhs = sk * std::sqrt(2.0) * hermite_functions(2 * k + 1, x)[2 * k + 1];
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("scaled bessel values against high-precision references") {
    for (const auto& r : kBesselRefs)
        CHECK(std::abs(bessel_i_scaled(r.alpha, r.z) - r.value) <= 1e-10 * r.value);
    CHECK(bessel_i_scaled(0.0, 0.0) == 1.0);
    CHECK(bessel_i_scaled(1.5, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_i_scaled(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i_scaled(-0.5, 1.0), std::domain_error);
}

TEST_CASE("scaled bessel half-integer closed form") {
    // e^{-z} I_{1/2}(z) = sqrt(2/(pi z)) (1 - e^{-2z}) / 2
    for (double z : {0.25, 2.0, 10.0, 28.0, 33.0, 150.0, 600.0}) {
        const double expected =
            std::sqrt(2.0 / (std::numbers::pi * z)) * 0.5 * (-std::expm1(-2.0 * z));
        CHECK(std::abs(bessel_i_scaled(0.5, z) - expected) <= 1e-12 * expected);
    }
}

TEST_CASE("scaled bessel large-argument expansion head") {
    const double z = 100.0;
    const double head = (1.0 + 1.0 / (8.0 * z) + 9.0 / (128.0 * z * z)) /
                        std::sqrt(2.0 * std::numbers::pi * z);
    CHECK(std::abs(bessel_i_scaled(0.0, z) - head) <= 1e-7);
}

TEST_CASE("bessel branches agree in the crossover overlap window") {
    for (double z = 25.0; z <= 35.0; z += 0.5) {
        for (double alpha : {0.1, 0.5, 1.0, 2.0, 3.5}) {
            const double s = detail::bessel_series_branch(alpha, z);
            const double a = detail::bessel_asymptotic_branch(alpha, z);
            CHECK(std::abs(s - a) <= 1e-10 * s);
        }
    }
}

TEST_CASE("bessel recurrence residual stays small in scaled form") {
    for (double alpha : {1.0, 2.0, 3.5}) {
        for (double z = 0.1; z <= 100.0; z *= 1.7) {
            const double up = bessel_i_scaled(alpha + 1.0, z);
            const double down = bessel_i_scaled(alpha - 1.0, z);
            const double mid = bessel_i_scaled(alpha, z);
            const double resid = std::abs(down - up - (2.0 * alpha / z) * mid) / mid;
            CHECK(resid <= 1e-8);
        }
    }
}

TEST_CASE("scaled bessel difference matches references and plain subtraction") {
    for (const auto& r : kBesselDiffRefs)
        CHECK(std::abs(bessel_i_scaled_diff(r.alpha, r.z) - r.value) <= 1e-12 * r.value);
    for (double z : {0.5, 4.0, 12.0, 28.0}) {
        const double direct = bessel_i_scaled(1.0, z) - bessel_i_scaled(2.0, z);
        CHECK(std::abs(bessel_i_scaled_diff(1.0, z) - direct) <= 1e-12);
    }
}

TEST_CASE("complex log gamma basics") {
    CHECK(std::abs(log_gamma_complex(Cplx(1.0, 0.0))) <= 1e-14);
    CHECK(std::abs(log_gamma_complex(Cplx(5.0, 0.0)) - std::log(24.0)) <= 1e-13);
    // |Gamma(1-i)|^2 = pi / sinh(pi), from |Gamma(1+iy)|^2 = pi y / sinh(pi y)
    const Cplx g = gamma_complex(Cplx(1.0, -1.0));
    CHECK(std::abs(std::norm(g) - std::numbers::pi / std::sinh(std::numbers::pi)) <= 1e-13);
    CHECK(std::abs(gamma_complex(Cplx(0.5, 0.0)) - std::sqrt(std::numbers::pi)) <= 1e-13);
    CHECK_THROWS_AS(log_gamma_complex(Cplx(-1.0, 2.0)), std::domain_error);
    CHECK_THROWS_AS(log_gamma_complex(Cplx(0.0, 1.0)), std::domain_error);
}

TEST_CASE("complex log gamma against reference table") {
    struct Ref {
        Cplx z, lg;
    };
    const Ref refs[] = {
        {{1.0, -1.0}, {-0.6509231993018563388852168, 0.3016403204675331978875317}},
        {{0.5, 1.0}, {-0.6527906442043729152730651, -0.9550077243425691095632251}},
        {{1.0, -3.0}, {-3.244144299589756191573184, -1.053350771068613200323791}},
        {{2.5, 0.75}, {0.1495868988371779042602934, 0.5433878678864816793175817}},
    };
    for (const auto& r : refs) CHECK(std::abs(log_gamma_complex(r.z) - r.lg) <= 1e-13);
}
