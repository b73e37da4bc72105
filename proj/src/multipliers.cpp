#include "specmult/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace specmult {

namespace {

// Basis evaluator shared by coefficient and synthesis loops.
Vector basis_values(const KernelFamily& family, int K, Real x) {
    switch (family.tag()) {
        case FamilyTag::Hermite: return hermite_functions(K, x);
        case FamilyTag::Laguerre: return LaguerreBasis(family.alpha(), K).eval(x);
        case FamilyTag::OrnsteinUhlenbeck: {
            Vector h(K + 1);
            h[0] = std::pow(std::numbers::pi_v<Real>, -0.25);
            if (K >= 1) h[1] = x * std::sqrt(2.0) * h[0];
            for (int k = 1; k < K; ++k)
                h[k + 1] = x * std::sqrt(2.0 / (k + 1.0)) * h[k] - std::sqrt(k / (k + 1.0)) * h[k - 1];
            return h;
        }
        case FamilyTag::Classical:
            throw std::domain_error("spectral operations need a discrete spectrum");
    }
    return Vector();
}

Real max_frequency(const KernelFamily& family, int K) {
    // local oscillation rate of the top eigenfunction
    return std::sqrt(2.0 * family.eigenvalue(K) + 1.0);
}

} // namespace

Cplx symbol_m(const MultiplierSymbol& s, Real lambda, const Tolerance& tol) {
    if (lambda == 0.0) return Cplx(0.0, 0.0);
    if (!(lambda > 0.0)) throw std::domain_error("symbol_m: requires lambda >= 0");
    Integrand g = [&s, lambda](Real t) { return std::exp(-lambda * t) * s.phi(t); };
    QuadratureResult q = integrate_halfline(g, tol, {}, s.breakpoints);
    return lambda * q.value;
}

SpectralCoefficients spectral_coefficients(const KernelFamily& family, const GridFunction& f,
                                           int K, const Tolerance& tol) {
    if (K < 0) throw std::invalid_argument("spectral_coefficients: K >= 0");
    if (domain_of(family) != f.domain)
        throw std::invalid_argument("spectral_coefficients: domain mismatch");
    CubicInterpolant interp(f);
    Integrand fi = [&interp](Real x) { return interp(x); };

    SpectralCoefficients out;
    out.c.resize(K + 1);

    const Real freq = max_frequency(family, K);
    const Real hull = interp.hi() - interp.lo();
    IntegrandSpec spec;
    spec.breakpoints = {interp.lo(), interp.hi()};
    spec.initial_panels = static_cast<int>(hull * freq / 4.0) + 16;

    for (int k = 0; k <= K; ++k) {
        Integrand basis_k = [&family, k](Real x) { return Cplx(family.eigenfunction(k, x), 0.0); };
        out.c[k] = inner_product(fi, basis_k, family, tol, spec);
    }
    out.norm_sq = inner_product(fi, fi, family, tol, spec).real();
    Real sum = 0.0;
    for (int k = 0; k <= K; ++k) sum += std::norm(out.c[k]);
    out.parseval_defect = std::abs(out.norm_sq - sum);
    return out;
}

CVector symbol_on_spectrum(const KernelFamily& family, const MultiplierSymbol& s, int K,
                           const Tolerance& tol) {
    CVector m(K + 1);
    for (int k = 0; k <= K; ++k) m[k] = symbol_m(s, family.eigenvalue(k), tol);
    return m;
}

CVector synthesize(const KernelFamily& family, const CVector& weighted_coeffs,
                   const Vector& nodes) {
    const int K = static_cast<int>(weighted_coeffs.size()) - 1;
    CVector out(nodes.size());
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
        const Vector phi = basis_values(family, K, nodes[i]);
        Cplx acc(0.0, 0.0);
        for (int k = 0; k <= K; ++k) acc += weighted_coeffs[k] * phi[k];
        out[i] = acc;
    }
    return out;
}

SpectralApplyResult spectral_apply_detailed(const KernelFamily& family, const MultiplierSymbol& s,
                                            const GridFunction& f, const SpectralTruncation& trunc,
                                            const Tolerance& tol) {
    SpectralApplyResult res;
    res.coeffs = spectral_coefficients(family, f, trunc.K, tol);
    res.symbol_values = symbol_on_spectrum(family, s, trunc.K, tol);
    CVector wc = res.coeffs.c * res.symbol_values;
    res.out = GridFunction(f.nodes, synthesize(family, wc, f.nodes), f.domain);
    return res;
}

GridFunction spectral_apply(const KernelFamily& family, const MultiplierSymbol& s,
                            const GridFunction& f, const SpectralTruncation& trunc,
                            const Tolerance& tol) {
    return spectral_apply_detailed(family, s, f, trunc, tol).out;
}

KernelValue multiplier_kernel_detailed(const KernelFamily& family, const MultiplierSymbol& s,
                                       Real x, Real y, const Tolerance& tol) {
    if (!family.contains(x) || !family.contains(y))
        throw std::domain_error("multiplier_kernel: point outside domain");
    if (x == y) throw std::domain_error("multiplier_kernel: diagonal evaluation");
    Integrand g = [&family, &s, x, y](Real t) {
        return s.phi(t) * Cplx(-heat_kernel_dt(family, t, x, y), 0.0);
    };
    QuadratureResult q = integrate_halfline(g, tol, {}, s.breakpoints);
    return {q.value, q};
}

Cplx multiplier_kernel(const KernelFamily& family, const MultiplierSymbol& s, Real x, Real y,
                       const Tolerance& tol) {
    return multiplier_kernel_detailed(family, s, x, y, tol).value;
}

Cplx lambda_schedule(const MultiplierSymbol& s, Real eps, const Tolerance& tol) {
    if (!(eps > 0.0)) throw std::domain_error("lambda_schedule: requires eps > 0");
    Integrand g = [&s, eps](Real t) { return s.phi(t) * Cplx(pv_weight(eps, t), 0.0); };
    return integrate_halfline(g, tol, {}, s.breakpoints).value;
}

std::vector<Real> default_pv_schedule() {
    std::vector<Real> eps;
    for (int j = 3; j <= 12; ++j) eps.push_back(std::ldexp(1.0, -j));
    return eps;
}

namespace {

// Integral of K_phi(x, .) f(.) dmu over [lo, hi] (either side of the excluded
// ball); kernel values from the time integral at each quadrature node.
Cplx pv_piece(const KernelFamily& family, const MultiplierSymbol& s, const CubicInterpolant& f,
              Real x, Real lo, Real hi, const Tolerance& tol) {
    if (!(lo < hi)) return Cplx(0.0, 0.0);
    Integrand g = [&, x](Real y) -> Cplx {
        const Cplx fy = f(y);
        if (fy == Cplx(0.0, 0.0)) return fy;
        // pointwise kernel values: relative accuracy governs near the
        // diagonal where |K| is large; the absolute floor tracks the
        // 1/|x-y| growth of what the time integration can deliver
        const Real floor = 1e-12 / std::abs(x - y);
        Tolerance kernel_tol(std::max(tol.abs_tol / 10.0, floor), std::max(tol.rel_tol, 1e-10),
                             tol.max_subdivisions);
        const Cplx K = multiplier_kernel(family, s, x, y, kernel_tol);
        return K * fy * Cplx(family.measure_weight(y), 0.0);
    };
    IntegrandSpec spec;
    spec.initial_panels = static_cast<int>((hi - lo) / 0.5) + 2;
    Tolerance piece_tol(std::max(tol.abs_tol, 1e-12), std::max(tol.rel_tol, 1e-10),
                        tol.max_subdivisions);
    return adaptive_integrate(g, lo, hi, piece_tol, spec).value;
}

} // namespace

PvResult pv_apply(const KernelFamily& family, const MultiplierSymbol& s, const GridFunction& f,
                  Real x, const std::vector<Real>& schedule, Real convergence_tol,
                  const Tolerance& tol) {
    if (!family.contains(x)) throw std::domain_error("pv_apply: x outside domain");
    if (domain_of(family) != f.domain) throw std::invalid_argument("pv_apply: domain mismatch");
    std::vector<Real> eps = schedule;
    std::sort(eps.begin(), eps.end(), std::greater<Real>());
    if (eps.empty()) throw std::invalid_argument("pv_apply: empty epsilon schedule");

    CubicInterpolant interp(f);
    const Real lo = family.half_line() ? std::max(interp.lo(), 0.0) : interp.lo();
    const Real hi = interp.hi();
    const Cplx fx = interp(x);

    PvResult res;
    res.epsilons = eps;

    // base region: everything farther than the largest epsilon
    Cplx ring = pv_piece(family, s, interp, x, lo, std::min(hi, x - eps[0]), tol) +
                pv_piece(family, s, interp, x, std::max(lo, x + eps[0]), hi, tol);
    res.truncations.push_back(lambda_schedule(s, eps[0], tol) * fx + ring);

    for (std::size_t j = 1; j < eps.size(); ++j) {
        // annuli eps_j < |x-y| < eps_{j-1}, clipped to the hull
        const Real a1 = std::max(lo, x - eps[j - 1]);
        const Real b1 = std::min(hi, x - eps[j]);
        const Real a2 = std::max(lo, x + eps[j]);
        const Real b2 = std::min(hi, x + eps[j - 1]);
        ring += pv_piece(family, s, interp, x, a1, b1, tol) +
                pv_piece(family, s, interp, x, a2, b2, tol);
        res.truncations.push_back(lambda_schedule(s, eps[j], tol) * fx + ring);
    }

    for (std::size_t j = 1; j < res.truncations.size(); ++j)
        res.increments.push_back(std::abs(res.truncations[j] - res.truncations[j - 1]));
    res.value = res.truncations.back();
    res.converged = !res.increments.empty() && res.increments.back() < convergence_tol;
    return res;
}

GridFunction imaginary_power(const KernelFamily& family, Real gamma, const GridFunction& f,
                             ApplyMode mode, const SpectralTruncation& trunc,
                             const Tolerance& tol) {
    if (family.tag() != FamilyTag::Hermite && family.tag() != FamilyTag::Laguerre)
        throw std::domain_error("imaginary_power: needs a positive spectrum");
    if (gamma == 0.0) return f;
    const MultiplierSymbol s = symbol_imaginary(gamma);
    if (mode == ApplyMode::Spectral) return spectral_apply(family, s, f, trunc, tol);
    CVector vals(f.nodes.size());
    for (Eigen::Index i = 0; i < f.nodes.size(); ++i)
        vals[i] = pv_apply(family, s, f, f.nodes[i], default_pv_schedule(), 1e-6, tol).value;
    return GridFunction(f.nodes, vals, f.domain);
}

Cplx ou_a_kernel_weighted(const MultiplierSymbol& s, Real x, Real y, const Tolerance& tol) {
    Integrand g = [&s, x, y](Real t) {
        return 0.5 * s.phi(t) * Cplx(std::exp(-0.5 * t) * ou_kernel_weighted(t, x, y), 0.0);
    };
    return integrate_halfline(g, tol, {}, s.breakpoints).value;
}

OuDecomposition ou_decomposition(const MultiplierSymbol& s, const GridFunction& f, int K,
                                 const Vector& output_nodes, const Tolerance& tol) {
    const KernelFamily ou = KernelFamily::ornstein_uhlenbeck();
    SpectralCoefficients sc = spectral_coefficients(ou, f, K, tol);

    // shifted symbol values m(k + 1/2) and the damped multiplier M(k)
    MultiplierSymbol damped;
    damped.name = s.name + "*exp(-t/2)";
    const auto phi = s.phi;
    damped.phi = [phi](Real t) { return phi(t) * std::exp(-0.5 * t); };
    damped.phi_sup = s.phi_sup;
    damped.breakpoints = s.breakpoints;

    CVector m_shift(K + 1), m_damped(K + 1);
    for (int k = 0; k <= K; ++k) {
        m_shift[k] = symbol_m(s, k + 0.5, tol);
        m_damped[k] = symbol_m(damped, static_cast<Real>(k), tol);
    }

    OuDecomposition out;
    out.nodes = output_nodes;
    out.direct = synthesize(ou, CVector(sc.c * m_shift), output_nodes);
    out.t_m_part = synthesize(ou, CVector(sc.c * m_damped), output_nodes);

    // A_phi through its kernel: integral of A(x,y) f(y) e^{-y^2} dy
    CubicInterpolant interp(f);
    out.a_phi_part.resize(output_nodes.size());
    for (Eigen::Index i = 0; i < output_nodes.size(); ++i) {
        const Real x = output_nodes[i];
        Integrand g = [&](Real y) -> Cplx {
            const Cplx fy = interp(y);
            if (fy == Cplx(0.0, 0.0)) return fy;
            return ou_a_kernel_weighted(s, x, y, tol) * fy;
        };
        IntegrandSpec spec;
        spec.initial_panels = static_cast<int>((interp.hi() - interp.lo()) / 0.5) + 4;
        out.a_phi_part[i] = adaptive_integrate(g, interp.lo(), interp.hi(),
                                               Tolerance(1e-9, 1e-8, tol.max_subdivisions), spec)
                                .value;
    }
    return out;
}

Cplx hermite_via_ou(const MultiplierSymbol& s, const GridFunction& f, Real x, int K,
                    const Tolerance& tol) {
    if (f.domain != Domain::RealLine) throw std::invalid_argument("hermite_via_ou: needs f on R");
    const KernelFamily ou = KernelFamily::ornstein_uhlenbeck();
    CubicInterpolant interp(f);
    // g(y) = e^{y^2/2} f(y); the growing factor is only ever evaluated where
    // f is supported.
    Integrand g = [&interp](Real y) -> Cplx {
        const Cplx v = interp(y);
        if (v == Cplx(0.0, 0.0)) return v;
        return v * std::exp(0.5 * y * y);
    };

    IntegrandSpec spec;
    spec.breakpoints = {interp.lo(), interp.hi()};
    spec.initial_panels = static_cast<int>((interp.hi() - interp.lo()) * max_frequency(ou, K) / 4.0) + 16;

    Cplx acc(0.0, 0.0);
    for (int k = 0; k <= K; ++k) {
        Integrand basis_k = [&ou, k](Real y) { return Cplx(ou.eigenfunction(k, y), 0.0); };
        const Cplx ck = inner_product(g, basis_k, ou, tol, spec);
        acc += symbol_m(s, k + 0.5, tol) * ck * ou.eigenfunction(k, x);
    }
    return std::exp(-0.5 * x * x) * acc;
}

} // namespace specmult
