#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Core>

namespace specmult {

using Real = double;
using Cplx = std::complex<double>;
using Vector = Eigen::ArrayXd;
using CVector = Eigen::ArrayXcd;

/// Orthonormal Hermite functions h_k on the real line, evaluated per point.
///
/// The recurrence runs in the function normalization
///   h_{k+1}(x) = x sqrt(2/(k+1)) h_k(x) - sqrt(k/(k+1)) h_{k-1}(x),
/// starting from h_0(x) = pi^{-1/4} exp(-x^2/2), so the Gaussian factor is
/// absorbed and no intermediate overflows.
struct HermiteBasis {
    int max_index = 0;

    explicit HermiteBasis(int K);

    /// (h_0(x), ..., h_K(x)).
    Vector eval(Real x) const;

    /// Eigenvalue of the harmonic oscillator: k + 1/2.
    static Real eigenvalue(int k) { return static_cast<Real>(k) + 0.5; }
};

/// Orthonormal Laguerre functions phi_k^alpha on (0, infinity),
///   phi_k^a(x) = (2 k! / Gamma(k+a+1))^{1/2} e^{-x^2/2} x^{a+1/2} L_k^a(x^2),
/// with the normalization folded into the three-term recurrence.
struct LaguerreBasis {
    Real alpha;
    int max_index = 0;

    LaguerreBasis(Real alpha, int K);

    /// (phi_0(x), ..., phi_K(x)); requires x > 0.
    Vector eval(Real x) const;

    /// Eigenvalue 2k + alpha + 1.
    Real eigenvalue(int k) const { return 2.0 * k + alpha + 1.0; }
};

/// Convenience wrappers matching the struct interfaces.
Vector hermite_functions(int K, Real x);
Vector laguerre_functions(const LaguerreBasis& basis, Real x);

/// Exponentially scaled modified Bessel function of the first kind,
/// e^{-z} I_alpha(z), alpha > -1/2, z >= 0.
///
/// Power series below z = 30, large-argument asymptotic series above, with
/// the two regimes agreeing to ~1e-12 in the overlap window [25, 35]; falls
/// back to a log-scaled series if the asymptotic tail stalls (large alpha).
Real bessel_i_scaled(Real alpha, Real z);

/// e^{-z} (I_alpha(z) - I_{alpha+1}(z)), computed without the cancellation a
/// plain subtraction suffers for large z (the difference is O(I_alpha / z)).
Real bessel_i_scaled_diff(Real alpha, Real z);

/// Principal branch of log Gamma(z) for Re z > 0 (Lanczos rational
/// approximation, g = 607/128 with 15 coefficients; see README references).
Cplx log_gamma_complex(Cplx z);

/// exp(log_gamma_complex(z)).
Cplx gamma_complex(Cplx z);

namespace detail {
// The two bessel_i_scaled regimes, exposed so the crossover overlap can be
// checked directly.
Real bessel_series_branch(Real alpha, Real z);
Real bessel_asymptotic_branch(Real alpha, Real z);
} // namespace detail

} // namespace specmult
