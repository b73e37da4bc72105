#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "specmult/corpora.hpp"
#include "specmult/multipliers.hpp"

using namespace specmult;

namespace {
constexpr double kPi = std::numbers::pi;
const Tolerance kTol;

GridFunction sample_eigenfunction(const KernelFamily& f, int k, double lo, double hi, int n) {
    Vector g = uniform_grid(lo, hi, n);
    CVector v(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) v[i] = Cplx(f.eigenfunction(k, g[i]), 0.0);
    return GridFunction(g, v, domain_of(f));
}
} // namespace

TEST_CASE("laplace-type symbols evaluate to their closed forms") {
    for (double lam : {0.5, 3.0, 47.0}) CHECK(std::abs(symbol_m(symbol_one(), lam, kTol) - 1.0) <= 1e-9);
    CHECK(std::abs(symbol_m(symbol_expdecay(), 3.0, kTol) - 0.75) <= 1e-10);
    // m_gamma(2) = 2^i
    const Cplx m = symbol_m(symbol_imaginary(1.0), 2.0, kTol);
    CHECK(std::abs(m - Cplx(std::cos(std::log(2.0)), std::sin(std::log(2.0)))) <= 1e-10);
    // indicator: m(lambda) = 1 - e^{-a lambda}
    CHECK(std::abs(symbol_m(symbol_indicator(1.0), 2.0, kTol) - (1.0 - std::exp(-2.0))) <= 1e-10);
    // m(0) = 0 convention for the Ornstein-Uhlenbeck bottom eigenvalue
    CHECK(symbol_m(symbol_one(), 0.0, kTol) == Cplx(0.0, 0.0));
}

TEST_CASE("symbols stay within their stated sup on a log grid") {
    for (const auto& s :
         {symbol_one(), symbol_expdecay(), symbol_indicator(2.0), symbol_imaginary(0.25),
          symbol_imaginary(1.0), symbol_imaginary(3.0)}) {
        for (double lam = 0.5; lam <= 1000.0; lam *= 1.9) {
            CHECK(std::abs(symbol_m(s, lam, kTol)) <= s.phi_sup * (1.0 + 1e-6));
        }
        // |phi| <= phi_sup spot-checked on a log grid
        for (double t = 1e-6; t < 1e3; t *= 10.0) CHECK(std::abs(s.phi(t)) <= s.phi_sup * (1.0 + 1e-12));
    }
}

TEST_CASE("symbols with a limit at the origin approach it monotonically in envelope") {
    for (const auto& s : {symbol_one(), symbol_expdecay(), symbol_indicator(0.5)}) {
        REQUIRE(s.phi_zero_limit.has_value());
        double prev = std::numeric_limits<double>::max();
        for (int j = 1; j <= 8; ++j) {
            const double d = std::abs(s.phi(std::pow(10.0, -j)) - *s.phi_zero_limit);
            CHECK(d <= prev + 1e-15);
            prev = d;
        }
        CHECK(prev <= 1e-6);
    }
    CHECK(!symbol_imaginary(0.5).phi_zero_limit.has_value());
}

TEST_CASE("symbol parser accepts the documented names only") {
    CHECK(parse_symbol("one").name == "one");
    CHECK(parse_symbol("indicator:2.5").breakpoints == std::vector<Real>{2.5});
    CHECK_THROWS_AS(parse_symbol("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbol("imaginary:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbol("indicator:-1"), std::invalid_argument);
}

TEST_CASE("spectral coefficients of eigenfunctions") {
    const auto H = KernelFamily::hermite();
    GridFunction f = sample_eigenfunction(H, 2, -9.0, 9.0, 721);
    auto sc = spectral_coefficients(H, f, 8, kTol);
    for (int k = 0; k <= 8; ++k)
        CHECK(std::abs(sc.c[k] - (k == 2 ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0))) <= 1e-8);
    CHECK(sc.parseval_defect <= 1e-6);
}

TEST_CASE("spectral coefficients are linear") {
    const auto H = KernelFamily::hermite();
    Vector g = uniform_grid(-9.0, 9.0, 1441);
    CVector v(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        const Vector h = hermite_functions(5, g[i]);
        v[i] = Cplx(h[0] + 2.0 * h[5], 0.0);
    }
    auto sc = spectral_coefficients(H, GridFunction(g, v, Domain::RealLine), 7, kTol);
    const double expected[8] = {1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0};
    for (int k = 0; k <= 7; ++k) CHECK(std::abs(sc.c[k] - expected[k]) <= 1e-8);
}

TEST_CASE("spectral coefficients agree under grid refinement") {
    const auto H = KernelFamily::hermite();
    auto gaussian = [](Real x) { return Cplx(std::exp(-(x - 1.0) * (x - 1.0)), 0.0); };
    GridFunction coarse = sample(gaussian, uniform_grid(-7.0, 9.0, 721), Domain::RealLine);
    GridFunction fine = sample(gaussian, uniform_grid(-7.0, 9.0, 1441), Domain::RealLine);
    auto sc = spectral_coefficients(H, coarse, 24, kTol);
    auto sf = spectral_coefficients(H, fine, 24, kTol);
    for (int k = 0; k <= 24; ++k) CHECK(std::abs(sc.c[k] - sf.c[k]) <= 1e-8);
}

TEST_CASE("spectral application on eigenfunctions multiplies by the symbol value") {
    const auto H = KernelFamily::hermite();
    const auto s = symbol_expdecay();
    GridFunction f = sample_eigenfunction(H, 2, -9.0, 9.0, 721);
    GridFunction out = spectral_apply(H, s, f, {12}, kTol);
    const Cplx m = symbol_m(s, 2.5, kTol);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < f.nodes.size(); ++i)
        worst = std::max(worst, std::abs(out.values[i] - m * f.values[i]));
    CHECK(worst <= 1e-8);

    const auto L = KernelFamily::laguerre(0.5);
    GridFunction fl = sample_eigenfunction(L, 1, 1e-3, 12.0, 721);
    GridFunction outl = spectral_apply(L, s, fl, {12}, kTol);
    const Cplx ml = symbol_m(s, 3.5, kTol);
    worst = 0.0;
    for (Eigen::Index i = 0; i < fl.nodes.size(); ++i)
        worst = std::max(worst, std::abs(outl.values[i] - ml * fl.values[i]));
    CHECK(worst <= 1e-8);
}

TEST_CASE("identity symbol reproduces the function within truncation error") {
    const auto H = KernelFamily::hermite();
    GridFunction f = bump_grid(SmoothBump{0.0, 2.5}, Domain::RealLine, 361);
    GridFunction out = spectral_apply(H, symbol_one(), f, {400}, kTol);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < f.nodes.size(); ++i)
        worst = std::max(worst, std::abs(out.values[i] - f.values[i]));
    CHECK(worst <= 5e-4);
    // narrower bumps carry more high-mode content; the residual stays small
    GridFunction g = bump_grid(default_bumps(H)[0], Domain::RealLine);
    GridFunction outg = spectral_apply(H, symbol_one(), g, {400}, kTol);
    double worstg = 0.0;
    for (Eigen::Index i = 0; i < g.nodes.size(); ++i)
        worstg = std::max(worstg, std::abs(outg.values[i] - g.values[i]));
    CHECK(worstg <= 2e-3);
}

TEST_CASE("kernel with phi == 1 vanishes off the diagonal") {
    for (const auto& fam : {KernelFamily::classical(), KernelFamily::hermite(),
                            KernelFamily::laguerre(0.5), KernelFamily::laguerre(2.0)}) {
        for (double x : {0.4, 1.3}) {
            for (double d : {0.3, 1.7}) {
                CHECK(std::abs(multiplier_kernel(fam, symbol_one(), x, x + d, kTol)) <= 1e-8);
            }
        }
    }
    // the Ornstein-Uhlenbeck spectrum starts at 0 with m(0) = 0, so its
    // phi == 1 kernel telescopes to the negative ground-state projector
    const Cplx kou = multiplier_kernel(KernelFamily::ornstein_uhlenbeck(), symbol_one(), 0.5, 1.5, kTol);
    CHECK(std::abs(kou - Cplx(-1.0 / std::sqrt(kPi), 0.0)) <= 1e-9);
}

TEST_CASE("classical kernel for the resolvent-type symbol has a closed form") {
    // phi(t) = e^{-t} gives T_m = I - (L+1)^{-1}; the resolvent Green's
    // function of -(1/2) d^2/dx^2 + 1 is e^{-sqrt(2)|x-y|} / sqrt(2), so
    // K(x,y) = -e^{-sqrt(2)|x-y|} / sqrt(2).
    const auto C = KernelFamily::classical();
    const auto s = symbol_expdecay();
    for (double u : {0.3, 0.7, 1.9, 4.2}) {
        const Cplx k = multiplier_kernel(C, s, 1.0, 1.0 + u, kTol);
        const double closed = -std::exp(-std::sqrt(2.0) * u) / std::sqrt(2.0);
        CHECK(std::abs(k - closed) <= 1e-9);
        // independent route: raw adaptive pass over [1e-8, 50]
        Integrand g = [&](Real t) {
            return Cplx(-std::exp(-t) * heat_kernel_dt(C, t, 1.0, 1.0 + u), 0.0);
        };
        IntegrandSpec spec;
        spec.initial_panels = 64;
        const Cplx raw = adaptive_integrate(g, 1e-8, 50.0, kTol, spec).value;
        CHECK(std::abs(k - raw) <= 1e-7);
    }
}

TEST_CASE("hermite kernel obeys the size bound on a sample set") {
    const auto H = KernelFamily::hermite();
    const auto s = symbol_imaginary(1.0);
    for (double u : {1e-3, 0.05, 0.4, 1.5}) {
        const double ratio = u * std::abs(multiplier_kernel(H, s, 0.6, 0.6 + u, kTol));
        CHECK(ratio <= 2.0);
    }
    CHECK_THROWS_AS(multiplier_kernel(H, s, 1.0, 1.0, kTol), std::domain_error);
}

TEST_CASE("lambda schedule") {
    for (double eps : {1.0, 0.1, 0.01})
        CHECK(std::abs(lambda_schedule(symbol_one(), eps, kTol) - 1.0) <= 1e-10);

    // imaginary-power compensator against its closed form
    for (double g : {0.5, 1.0}) {
        for (double eps : {1.0, 0.1, 0.01}) {
            const Cplx lam = lambda_schedule(symbol_imaginary(g), eps, kTol);
            const Cplx closed = std::pow(Cplx(2.0 / (eps * eps), 0.0), Cplx(0.0, g)) *
                                gamma_complex(Cplx(0.5, g)) /
                                (std::sqrt(kPi) * gamma_complex(Cplx(1.0, -g)));
            CHECK(std::abs(lam - closed) <= 1e-8);
        }
    }

    // raw-quadrature route for the decaying symbol
    const double eps = 0.1;
    Integrand g = [eps](Real t) { return Cplx(std::exp(-t) * pv_weight(eps, t), 0.0); };
    IntegrandSpec spec;
    spec.initial_panels = 64;
    const Cplx raw = adaptive_integrate(g, 1e-12, 60.0, kTol, spec).value;
    CHECK(std::abs(lambda_schedule(symbol_expdecay(), eps, kTol) - raw) <= 1e-8);
}

TEST_CASE("principal value with phi == 1 returns the function value") {
    const auto H = KernelFamily::hermite();
    GridFunction f = bump_grid(default_bumps(H)[1], Domain::RealLine);
    CubicInterpolant fi(f);
    for (double x : {0.5, 1.1}) {
        PvResult pv = pv_apply(H, symbol_one(), f, x);
        CHECK(pv.converged);
        CHECK(std::abs(pv.value - fi(x)) <= 1e-6);
        CHECK(pv.increments.size() + 1 == pv.truncations.size());
    }
}

TEST_CASE("principal value off the support is a plain kernel integral") {
    const auto H = KernelFamily::hermite();
    GridFunction f = bump_grid(SmoothBump{0.0, 1.0}, Domain::RealLine);
    const double x = 3.5; // support ends at 1.1
    const auto s = symbol_imaginary(0.5);
    PvResult pv = pv_apply(H, s, f, x);
    CHECK(pv.converged); // every annulus is empty, so increments vanish
    CubicInterpolant fi(f);
    Integrand g = [&](Real y) {
        const Cplx fy = fi(y);
        return fy == Cplx(0.0, 0.0) ? fy : multiplier_kernel(H, s, x, y, kTol) * fy;
    };
    IntegrandSpec spec;
    spec.initial_panels = 16;
    const Cplx direct = adaptive_integrate(g, fi.lo(), fi.hi(), Tolerance(1e-9, 1e-8), spec).value;
    CHECK(std::abs(pv.value - direct) <= 1e-7);
}

TEST_CASE("principal value matches the truncated expansion on a cubic bump") {
    const auto H = KernelFamily::hermite();
    Vector g = uniform_grid(-1.05, 1.05, 423);
    CVector v(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        const double u = g[i];
        v[i] = Cplx(std::abs(u) < 1.0 ? std::pow(1.0 - u * u, 3) : 0.0, 0.0);
    }
    GridFunction f(g, v, Domain::RealLine);
    const auto s = symbol_imaginary(0.5);
    auto spec = spectral_apply_detailed(H, s, f, {400}, kTol);
    CubicInterpolant si(spec.out);
    PvResult pv = pv_apply(H, s, f, 0.3);
    CHECK(std::abs(pv.value - si(0.3)) <= 1e-3);
}

TEST_CASE("imaginary power basics") {
    const auto H = KernelFamily::hermite();
    GridFunction f = bump_grid(default_bumps(H)[0], Domain::RealLine);
    GridFunction id = imaginary_power(H, 0.0, f, ApplyMode::Spectral, {400}, kTol);
    for (Eigen::Index i = 0; i < f.nodes.size(); ++i) CHECK(id.values[i] == f.values[i]);
    CHECK_THROWS_AS(imaginary_power(KernelFamily::classical(), 1.0, f, ApplyMode::Spectral, {4}, kTol),
                    std::domain_error);
}

TEST_CASE("unimodular symbols preserve the coefficient sums") {
    const auto H = KernelFamily::hermite();
    GridFunction f = bump_grid(default_bumps(H)[0], Domain::RealLine);
    auto sc = spectral_coefficients(H, f, 200, kTol);
    auto m = symbol_on_spectrum(H, symbol_imaginary(0.8), 200, kTol);
    double s0 = 0.0, s1 = 0.0;
    for (int k = 0; k <= 200; ++k) {
        s0 += std::norm(sc.c[k]);
        s1 += std::norm(m[k]) * std::norm(sc.c[k]);
    }
    CHECK(std::abs(s1 - s0) <= 1e-10);
}

TEST_CASE("imaginary powers compose along the spectrum") {
    const auto H = KernelFamily::hermite();
    auto m1 = symbol_on_spectrum(H, symbol_imaginary(0.6), 400, kTol);
    auto m2 = symbol_on_spectrum(H, symbol_imaginary(0.9), 400, kTol);
    auto m12 = symbol_on_spectrum(H, symbol_imaginary(1.5), 400, kTol);
    double worst = 0.0;
    for (int k = 0; k <= 400; ++k) worst = std::max(worst, std::abs(m1[k] * m2[k] - m12[k]));
    CHECK(worst <= 1e-8);
}

TEST_CASE("operator application is linear in the function") {
    const auto H = KernelFamily::hermite();
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    Vector g = uniform_grid(-3.2, 3.2, 257);
    auto mk = [&](const SmoothBump& b) {
        CVector v(g.size());
        for (Eigen::Index i = 0; i < g.size(); ++i) v[i] = Cplx(b(g[i]), 0.0);
        return GridFunction(g, v, Domain::RealLine);
    };
    GridFunction f1 = mk(SmoothBump{-0.6, 1.1});
    GridFunction f2 = mk(SmoothBump{0.9, 1.4});
    const Cplx a(un(rng), un(rng)), b(un(rng), un(rng));
    GridFunction comb(g, a * f1.values + b * f2.values, Domain::RealLine);

    const auto s = symbol_imaginary(0.5);
    const Tolerance tight(1e-12, 1e-12, 16000);
    GridFunction o1 = spectral_apply(H, s, f1, {160}, tight);
    GridFunction o2 = spectral_apply(H, s, f2, {160}, tight);
    GridFunction oc = spectral_apply(H, s, comb, {160}, tight);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        worst = std::max(worst, std::abs(oc.values[i] - (a * o1.values[i] + b * o2.values[i])));
    CHECK(worst <= 1e-9);

    const double x = 0.25;
    const Cplx p1 = pv_apply(H, s, f1, x, default_pv_schedule(), 1e-6, tight).value;
    const Cplx p2 = pv_apply(H, s, f2, x, default_pv_schedule(), 1e-6, tight).value;
    const Cplx pc = pv_apply(H, s, comb, x, default_pv_schedule(), 1e-6, tight).value;
    CHECK(std::abs(pc - (a * p1 + b * p2)) <= 1e-9);
}

TEST_CASE("shifted ou multiplier splits into damped part plus bounded part") {
    const auto OU = KernelFamily::ornstein_uhlenbeck();
    Vector out_nodes = uniform_grid(-2.0, 2.0, 7);

    // ground state with phi == 1: the direct multiplier acts as m(1/2) = 1
    {
        GridFunction f = sample_eigenfunction(OU, 0, -6.0, 6.0, 321);
        auto dec = ou_decomposition(symbol_one(), f, 16, out_nodes, kTol);
        for (Eigen::Index i = 0; i < out_nodes.size(); ++i) {
            const Cplx fx = Cplx(OU.eigenfunction(0, out_nodes[i]), 0.0);
            CHECK(std::abs(dec.direct[i] - fx) <= 1e-9);
            CHECK(std::abs(dec.t_m_part[i] + dec.a_phi_part[i] - fx) <= 1e-8);
        }
    }

    // eigenfunction H_3: everything scales by m(3.5)
    {
        GridFunction f = sample_eigenfunction(OU, 3, -7.0, 7.0, 481);
        const auto s = symbol_expdecay();
        auto dec = ou_decomposition(s, f, 24, out_nodes, kTol);
        const Cplx m = symbol_m(s, 3.5, kTol);
        for (Eigen::Index i = 0; i < out_nodes.size(); ++i) {
            const Cplx expect = m * OU.eigenfunction(3, out_nodes[i]);
            CHECK(std::abs(dec.direct[i] - expect) <= 1e-7);
            CHECK(std::abs(dec.t_m_part[i] + dec.a_phi_part[i] - expect) <= 1e-7);
        }
    }

    // the bounded part alone acts on H_k by (1/2) LT[phi](k + 1/2)
    {
        GridFunction f = sample_eigenfunction(OU, 2, -7.0, 7.0, 481);
        const auto s = symbol_expdecay();
        auto dec = ou_decomposition(s, f, 16, out_nodes, kTol);
        const Cplx factor = 0.5 / (2.5 + 1.0); // (1/2) integral e^{-(k+1/2)t} e^{-t} dt at k=2
        for (Eigen::Index i = 0; i < out_nodes.size(); ++i) {
            const Cplx expect = factor * OU.eigenfunction(2, out_nodes[i]);
            CHECK(std::abs(dec.a_phi_part[i] - expect) <= 1e-8);
        }
    }
}

TEST_CASE("hermite multiplier through the gaussian-conjugated route") {
    const auto H = KernelFamily::hermite();

    // eigenfunctions: both routes give m(k + 1/2) h_k(x)
    for (int k : {0, 3}) {
        GridFunction f = sample_eigenfunction(H, k, -9.0, 9.0, 641);
        const auto s = symbol_expdecay();
        const double x = 0.8;
        const Cplx via_ou = hermite_via_ou(s, f, x, 24, kTol);
        const Cplx expect = symbol_m(s, k + 0.5, kTol) * H.eigenfunction(k, x);
        CHECK(std::abs(via_ou - expect) <= 1e-7);
    }

    // phi == 1: identity up to shared truncation; the two truncated routes
    // agree to quadrature accuracy
    {
        GridFunction f = bump_grid(default_bumps(H)[0], Domain::RealLine);
        CubicInterpolant fi(f);
        const Cplx v = hermite_via_ou(symbol_one(), f, 0.45, 400, kTol);
        CHECK(std::abs(v - fi(0.45)) <= 5e-4);
        GridFunction out = spectral_apply(H, symbol_one(), f, {400}, kTol);
        CubicInterpolant oi(out);
        CHECK(std::abs(v - oi(0.45)) <= 1e-6);
    }

    // oscillatory symbol on a bump vs the direct hermite expansion
    {
        GridFunction f = bump_grid(default_bumps(H)[0], Domain::RealLine);
        const auto s = symbol_imaginary(1.0);
        auto spec = spectral_apply_detailed(H, s, f, {400}, kTol);
        CubicInterpolant si(spec.out);
        const Cplx via_ou = hermite_via_ou(s, f, 0.7, 400, kTol);
        CHECK(std::abs(via_ou - si(0.7)) <= 1e-6);
    }
}

TEST_CASE("grid function construction guards") {
    Vector good = uniform_grid(0.5, 2.0, 4);
    CVector vals = CVector::Zero(4);
    CHECK_NOTHROW(GridFunction(good, vals, Domain::HalfLine));

    Vector unsorted(3);
    unsorted << 0.0, 2.0, 1.0;
    CHECK_THROWS_AS(GridFunction(unsorted, CVector::Zero(3), Domain::RealLine),
                    std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(good, CVector::Zero(3), Domain::RealLine),
                    std::invalid_argument);
    Vector neg(3);
    neg << -1.0, 0.5, 1.0;
    CHECK_THROWS_AS(GridFunction(neg, CVector::Zero(3), Domain::HalfLine), std::invalid_argument);
    CVector bad = CVector::Zero(4);
    bad[2] = Cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(GridFunction(good, bad, Domain::HalfLine), std::invalid_argument);

    // interpolant vanishes outside the hull and reproduces cubics inside
    Vector g = uniform_grid(-1.0, 1.0, 21);
    CVector v(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i)
        v[i] = Cplx(g[i] * g[i] * g[i] - 0.5 * g[i], 2.0 * g[i] * g[i]);
    CubicInterpolant interp(GridFunction(g, v, Domain::RealLine));
    CHECK(interp(-1.5) == Cplx(0.0, 0.0));
    CHECK(interp(2.0) == Cplx(0.0, 0.0));
    const double x = 0.437;
    CHECK(std::abs(interp(x) - Cplx(x * x * x - 0.5 * x, 2.0 * x * x)) <= 1e-12);
}

TEST_CASE("domain guards on operator entry points") {
    const auto L = KernelFamily::laguerre(0.5);
    GridFunction f = bump_grid(default_bumps(L)[0], Domain::HalfLine);
    CHECK_THROWS_AS(pv_apply(L, symbol_one(), f, -1.0), std::domain_error);
    CHECK_THROWS_AS(pv_apply(L, symbol_one(), f, 1.0, {}), std::invalid_argument);
    GridFunction wrong = bump_grid(default_bumps(KernelFamily::hermite())[0], Domain::RealLine);
    CHECK_THROWS_AS(pv_apply(L, symbol_one(), wrong, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(spectral_coefficients(L, wrong, 4, kTol), std::invalid_argument);
}
