#include "specmult/heat_kernels.hpp"

#include <cmath>
#include <numbers>

namespace specmult {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Real kInvSqrtPi = 0.5641895835477562869;  // 1/sqrt(pi)
constexpr Real kSqrt2Pi = 2.5066282746310005024;    // sqrt(2 pi)

void check_time_and_points(const KernelFamily& f, Real t, Real x, Real y) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("heat_kernel: requires t > 0");
    if (!f.contains(x) || !f.contains(y))
        throw std::domain_error("heat_kernel: point outside domain");
}

Real classical_kernel(Real t, Real x, Real y) {
    const Real u = x - y;
    return std::exp(-u * u / (2.0 * t)) / std::sqrt(2.0 * kPi * t);
}

Real classical_kernel_dt(Real t, Real x, Real y) {
    const Real u2 = (x - y) * (x - y);
    return -0.5 / kSqrt2Pi * std::exp(-u2 / (2.0 * t)) / (t * std::sqrt(t)) * (1.0 - u2 / t);
}

Real hermite_kernel(Real t, Real x, Real y) {
    const Real r = std::exp(-t);
    const Real D = -std::expm1(-2.0 * t);
    const Real q1 = x - r * y, q2 = y - r * x;
    const Real Q = q1 * q1 + q2 * q2;
    return kInvSqrtPi * std::sqrt(r / D) * std::exp(-Q / (2.0 * D));
}

Real hermite_kernel_dt(Real t, Real x, Real y) {
    const Real r = std::exp(-t);
    const Real r2 = r * r;
    const Real D = -std::expm1(-2.0 * t);
    const Real q1 = x - r * y, q2 = y - r * x;
    const Real Q = q1 * q1 + q2 * q2;
    const Real Qp = 2.0 * r * (q1 * y + q2 * x);
    const Real W = kInvSqrtPi * std::sqrt(r / D) * std::exp(-Q / (2.0 * D));
    return W * (-0.5 - r2 / D - Qp / (2.0 * D) + Q * r2 / (D * D));
}

Real laguerre_kernel(Real alpha, Real t, Real x, Real y) {
    const Real r = std::exp(-t);
    const Real D = -std::expm1(-2.0 * t);
    const Real z = 2.0 * x * y * r / D;
    if (z == 0.0) return 0.0;
    const Real u = x - y;
    const Real omr = -std::expm1(-t); // 1 - e^{-t}
    const Real G = (u * u * (1.0 + r * r) + 2.0 * x * y * omr * omr) / (2.0 * D);
    return std::sqrt(2.0 * r * z / D) * bessel_i_scaled(alpha, z) * std::exp(-G);
}

Real laguerre_kernel_dt(Real alpha, Real t, Real x, Real y) {
    const Real r = std::exp(-t);
    const Real r2 = r * r;
    const Real D = -std::expm1(-2.0 * t);
    const Real z = 2.0 * x * y * r / D;
    if (z == 0.0) return 0.0;
    const Real u = x - y;
    const Real omr = -std::expm1(-t);
    const Real G = (u * u * (1.0 + r2) + 2.0 * x * y * omr * omr) / (2.0 * D);
    const Real pref = std::sqrt(2.0 * r * z / D) * std::exp(-G);
    const Real c = 1.0 + 2.0 * r2 / D;
    // From I_a'(z) = I_{a+1}(z) + (a/z) I_a(z) and the kernel's log-derivative;
    // the O(1/t^2) pieces of z' and E' are combined analytically into
    //   S = z' - E' = 2 r^2 (x-y)^2 / D^2 - z (1-r)^2 / D,
    // and the Bessel pair enters through the stable difference
    // I_a - I_{a+1}, so no term exceeds O(1/t) near the diagonal.
    const Real S = 2.0 * r2 * u * u / (D * D) - z * omr * omr / D;
    const Real bracket = -(1.0 + alpha) * c + S;
    return pref * (bracket * bessel_i_scaled(alpha, z) +
                   z * c * bessel_i_scaled_diff(alpha, z));
}

} // namespace

Real KernelFamily::eigenfunction(int k, Real x) const {
    switch (tag_) {
        case FamilyTag::Hermite: return hermite_functions(k, x)[k];
        case FamilyTag::Laguerre: return LaguerreBasis(alpha_, k).eval(x)[k];
        case FamilyTag::OrnsteinUhlenbeck: {
            // normalized Hermite polynomials: the h_k recurrence without the
            // Gaussian envelope
            Real p0 = std::pow(kPi, -0.25);
            if (k == 0) return p0;
            Real p1 = x * std::sqrt(2.0) * p0;
            for (int j = 1; j < k; ++j) {
                const Real p2 = x * std::sqrt(2.0 / (j + 1.0)) * p1 - std::sqrt(j / (j + 1.0)) * p0;
                p0 = p1;
                p1 = p2;
            }
            return p1;
        }
        case FamilyTag::Classical:
            throw std::domain_error("KernelFamily: classical operator has no eigenfunctions");
    }
    return 0.0;
}

std::string KernelFamily::name() const {
    switch (tag_) {
        case FamilyTag::Classical: return "classical";
        case FamilyTag::Hermite: return "hermite";
        case FamilyTag::OrnsteinUhlenbeck: return "ou";
        case FamilyTag::Laguerre: return "laguerre(" + std::to_string(alpha_) + ")";
    }
    return "?";
}

Real heat_kernel(const KernelFamily& family, Real t, Real x, Real y) {
    check_time_and_points(family, t, x, y);
    switch (family.tag()) {
        case FamilyTag::Classical: return classical_kernel(t, x, y);
        case FamilyTag::Hermite: return hermite_kernel(t, x, y);
        case FamilyTag::OrnsteinUhlenbeck: return ou_kernel_weighted(t, x, y) * std::exp(y * y);
        case FamilyTag::Laguerre: return laguerre_kernel(family.alpha(), t, x, y);
    }
    return 0.0;
}

Real heat_kernel_dt(const KernelFamily& family, Real t, Real x, Real y) {
    check_time_and_points(family, t, x, y);
    switch (family.tag()) {
        case FamilyTag::Classical: return classical_kernel_dt(t, x, y);
        case FamilyTag::Hermite: return hermite_kernel_dt(t, x, y);
        case FamilyTag::OrnsteinUhlenbeck:
            return ou_kernel_weighted_dt(t, x, y) * std::exp(y * y);
        case FamilyTag::Laguerre: return laguerre_kernel_dt(family.alpha(), t, x, y);
    }
    return 0.0;
}

Real ou_kernel_weighted(Real t, Real x, Real y) {
    if (!(t > 0.0)) throw std::domain_error("ou_kernel_weighted: requires t > 0");
    const Real r = std::exp(-t);
    const Real D = -std::expm1(-2.0 * t);
    const Real A = r * x - y;
    return kInvSqrtPi / std::sqrt(D) * std::exp(-A * A / D);
}

Real ou_kernel_weighted_dt(Real t, Real x, Real y) {
    if (!(t > 0.0)) throw std::domain_error("ou_kernel_weighted_dt: requires t > 0");
    const Real r = std::exp(-t);
    const Real r2 = r * r;
    const Real D = -std::expm1(-2.0 * t);
    const Real A = r * x - y;
    const Real E = std::exp(-A * A / D);
    const Real term1 = -kInvSqrtPi * r2 / (D * std::sqrt(D)) * E;
    const Real term2 = 2.0 * kInvSqrtPi * r * A * (x - r * y) / (D * D * std::sqrt(D)) * E;
    return term1 + term2;
}

Real near_diagonal_mass(Real eps, Real t) {
    if (!(eps > 0.0) || !(t > 0.0))
        throw std::domain_error("near_diagonal_mass: requires eps > 0, t > 0");
    return std::erf(eps / std::sqrt(2.0 * t));
}

Real pv_weight(Real eps, Real t) {
    if (!(eps > 0.0) || !(t > 0.0)) throw std::domain_error("pv_weight: requires eps > 0, t > 0");
    return eps / kSqrt2Pi * std::exp(-eps * eps / (2.0 * t)) / (t * std::sqrt(t));
}

} // namespace specmult
