#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "specmult/specfun.hpp"

namespace specmult {

using Integrand = std::function<Cplx(Real)>;

struct Tolerance {
    Real abs_tol = 1e-10;
    Real rel_tol = 1e-10;
    int max_subdivisions = 4000;

    Tolerance() = default;
    Tolerance(Real a, Real r, int m = 4000) : abs_tol(a), rel_tol(r), max_subdivisions(m) {
        if (!(abs_tol > 0.0 && abs_tol < 1.0) || !(rel_tol > 0.0 && rel_tol < 1.0))
            throw std::invalid_argument("Tolerance: abs_tol, rel_tol must lie in (0,1)");
        if (max_subdivisions < 1) throw std::invalid_argument("Tolerance: max_subdivisions >= 1");
    }
};

struct QuadratureResult {
    Cplx value{0.0, 0.0};
    Real error_estimate = 0.0;
    long nodes_used = 0;
};

/// Thrown when the panel budget is exhausted before the tolerance is met;
/// carries the best value so far.
class MaxSubdivisionsExceeded : public std::runtime_error {
  public:
    QuadratureResult partial;
    MaxSubdivisionsExceeded(const std::string& msg, QuadratureResult best)
        : std::runtime_error(msg), partial(best) {}
};

/// Optional integrand decorations for adaptive_integrate.
struct IntegrandSpec {
    /// |f| ~ (x-a)^{-beta} near the left endpoint, beta < 1; a power-law
    /// substitution removes the singularity before panelling.
    std::optional<Real> left_singularity;
    /// Same near the right endpoint.
    std::optional<Real> right_singularity;
    /// Interior points the panelling must split at (jumps, kinks).
    std::vector<Real> breakpoints;
    /// Minimum number of equal initial panels (resolves oscillation).
    int initial_panels = 1;
};

/// Adaptive Gauss-Kronrod 7/15 bisection on [a,b]; worst panel first,
/// deterministic summation order.
QuadratureResult adaptive_integrate(const Integrand& f, Real a, Real b, const Tolerance& tol,
                                    const IntegrandSpec& spec = {});

/// Integral of g over (0, infinity) for g with at most a power-law blowup
/// t^{-beta}, beta < 1, at the origin.  The head (0, T] is mapped to s in
/// (0, tanh(T/2)] by t = log((1+s)/(1-s)); the tail (T, infinity) is mapped
/// to v in (0, 1] by t = T/v^2, which integrates t^{-3/2}-type tails exactly.
QuadratureResult integrate_halfline(const Integrand& g, const Tolerance& tol,
                                    std::optional<Real> origin_power = {},
                                    const std::vector<Real>& breakpoints = {});

/// Integral of f over [a, infinity) via w -> a/(1-w) compression.
QuadratureResult integrate_from(const Integrand& f, Real a, const Tolerance& tol);

class KernelFamily; // heat_kernels.hpp

struct InnerProductResult {
    QuadratureResult quad;
    Real truncation_radius = 0.0;
};

/// Inner product integral f conj(g) dmu over the family's domain, truncated
/// to the radius where a Gaussian tail bound clears abs_tol/10.
InnerProductResult inner_product_detailed(const Integrand& f, const Integrand& g,
                                          const KernelFamily& family, const Tolerance& tol,
                                          const IntegrandSpec& spec = {});

Cplx inner_product(const Integrand& f, const Integrand& g, const KernelFamily& family,
                   const Tolerance& tol, const IntegrandSpec& spec = {});

} // namespace specmult
