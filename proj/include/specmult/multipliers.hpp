#pragma once

#include <vector>

#include "specmult/grid_function.hpp"
#include "specmult/symbols.hpp"

namespace specmult {

/// m(lambda) = lambda * integral over (0,inf) of e^{-lambda t} phi(t) dt.
/// m(0) = 0 by convention (Ornstein-Uhlenbeck bottom eigenvalue).
Cplx symbol_m(const MultiplierSymbol& s, Real lambda, const Tolerance& tol = Tolerance());

struct SpectralTruncation {
    int K = 400;
};

struct SpectralCoefficients {
    CVector c;            // c_0..c_K
    Real norm_sq;         // quadrature L^2(mu) norm^2 of f
    Real parseval_defect; // | norm_sq - sum |c_k|^2 |
};

/// Eigen-coefficients c_k(f) = integral of f phi_k dmu, k = 0..K.
SpectralCoefficients spectral_coefficients(const KernelFamily& family, const GridFunction& f,
                                           int K, const Tolerance& tol = Tolerance());

/// m(nu_k) for k = 0..K.
CVector symbol_on_spectrum(const KernelFamily& family, const MultiplierSymbol& s, int K,
                           const Tolerance& tol = Tolerance());

struct SpectralApplyResult {
    GridFunction out;
    SpectralCoefficients coeffs;
    CVector symbol_values;
};

/// Truncated eigenfunction expansion of T_m f, evaluated on f's grid
/// (deterministic summation order k = 0..K).
SpectralApplyResult spectral_apply_detailed(const KernelFamily& family, const MultiplierSymbol& s,
                                            const GridFunction& f, const SpectralTruncation& trunc,
                                            const Tolerance& tol = Tolerance());
GridFunction spectral_apply(const KernelFamily& family, const MultiplierSymbol& s,
                            const GridFunction& f, const SpectralTruncation& trunc,
                            const Tolerance& tol = Tolerance());

/// Reconstruction sum_k m_k c_k phi_k on given nodes.
CVector synthesize(const KernelFamily& family, const CVector& weighted_coeffs,
                   const Vector& nodes);

/// Off-diagonal singular-integral kernel
///   K_phi(x,y) = integral of phi(t) (-d/dt) W_t(x,y) dt.
struct KernelValue {
    Cplx value;
    QuadratureResult quad;
};
KernelValue multiplier_kernel_detailed(const KernelFamily& family, const MultiplierSymbol& s,
                                       Real x, Real y, const Tolerance& tol = Tolerance());
Cplx multiplier_kernel(const KernelFamily& family, const MultiplierSymbol& s, Real x, Real y,
                       const Tolerance& tol = Tolerance());

/// Lambda(eps) = integral of phi(t) pv_weight(eps, t) dt; tends to phi(0+)
/// as eps -> 0 when that limit exists.
Cplx lambda_schedule(const MultiplierSymbol& s, Real eps, const Tolerance& tol = Tolerance());

/// Dyadic default schedule eps_j = 2^{-j}, j = 3..12.
std::vector<Real> default_pv_schedule();

struct PvResult {
    Cplx value; // truncation at the smallest epsilon
    bool converged = false;
    std::vector<Real> epsilons;
    std::vector<Cplx> truncations; // Lambda(eps) f(x) + off-ball integral
    std::vector<Real> increments;  // successive |differences|
};

/// Principal-value evaluation of T_m f at x:
///   Lambda(eps) f(x) + integral over {y in domain, |x-y| > eps} K_phi(x,y) f(y) dmu(y)
/// along a decreasing epsilon schedule, with Cauchy-increment reporting.
PvResult pv_apply(const KernelFamily& family, const MultiplierSymbol& s, const GridFunction& f,
                  Real x, const std::vector<Real>& schedule = default_pv_schedule(),
                  Real convergence_tol = 1e-6, const Tolerance& tol = Tolerance());

enum class ApplyMode { Spectral, PrincipalValue };

/// L^{i gamma} via the unimodular symbol; gamma = 0 is the identity.
GridFunction imaginary_power(const KernelFamily& family, Real gamma, const GridFunction& f,
                             ApplyMode mode, const SpectralTruncation& trunc = {},
                             const Tolerance& tol = Tolerance());

/// Shifted Ornstein-Uhlenbeck multiplier sum_k m(k + 1/2) c_k(f) H_k and its
/// splitting into T_M (M(lambda) = lambda * LT[e^{-t/2} phi](lambda)) plus the
/// bounded part A_phi realized through its kernel
///   A(x,y) = (1/2) integral of phi(t) W_t^{OU}(x,y) e^{-t/2} dt.
struct OuDecomposition {
    Vector nodes;
    CVector direct;     // shifted-eigenvalue evaluation
    CVector t_m_part;   // T_M piece (spectral)
    CVector a_phi_part; // A_phi piece (kernel quadrature)
};
OuDecomposition ou_decomposition(const MultiplierSymbol& s, const GridFunction& f, int K,
                                 const Vector& output_nodes, const Tolerance& tol = Tolerance());

/// A^{OU}(x,y) e^{-y^2} (the kernel of A_phi against Lebesgue measure).
Cplx ou_a_kernel_weighted(const MultiplierSymbol& s, Real x, Real y,
                          const Tolerance& tol = Tolerance());

/// Hermite multiplier through the Ornstein-Uhlenbeck side:
///   T_m f(x) = e^{-x^2/2} * [shifted OU multiplier applied to e^{y^2/2} f](x).
Cplx hermite_via_ou(const MultiplierSymbol& s, const GridFunction& f, Real x, int K,
                    const Tolerance& tol = Tolerance());

} // namespace specmult
