#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "specmult/specfun.hpp"

namespace specmult {

enum class FamilyTag { Classical, Hermite, OrnsteinUhlenbeck, Laguerre };

/// One of the four operator families, with its domain, measure, spectrum and
/// closed-form heat kernel.
class KernelFamily {
  public:
    static KernelFamily classical() { return KernelFamily(FamilyTag::Classical, 0.0); }
    static KernelFamily hermite() { return KernelFamily(FamilyTag::Hermite, 0.0); }
    static KernelFamily ornstein_uhlenbeck() {
        return KernelFamily(FamilyTag::OrnsteinUhlenbeck, 0.0);
    }
    static KernelFamily laguerre(Real alpha) {
        if (!(alpha > -0.5)) throw std::domain_error("KernelFamily: Laguerre alpha must be > -1/2");
        return KernelFamily(FamilyTag::Laguerre, alpha);
    }

    FamilyTag tag() const { return tag_; }
    Real alpha() const { return alpha_; }

    /// Domain is (0, infinity) for Laguerre, the real line otherwise.
    bool half_line() const { return tag_ == FamilyTag::Laguerre; }
    bool contains(Real x) const { return half_line() ? x > 0.0 : std::isfinite(x); }

    /// dmu/dx: exp(-x^2) for Ornstein-Uhlenbeck, 1 otherwise.
    Real measure_weight(Real x) const {
        return tag_ == FamilyTag::OrnsteinUhlenbeck ? std::exp(-x * x) : 1.0;
    }

    /// k-th eigenvalue of the discrete spectrum; the classical operator has
    /// none (continuous spectrum).
    Real eigenvalue(int k) const {
        switch (tag_) {
            case FamilyTag::Hermite: return k + 0.5;
            case FamilyTag::OrnsteinUhlenbeck: return static_cast<Real>(k);
            case FamilyTag::Laguerre: return 2.0 * k + alpha_ + 1.0;
            case FamilyTag::Classical:
                throw std::domain_error("KernelFamily: classical operator has no eigenvalues");
        }
        return 0.0;
    }
    bool has_spectrum() const { return tag_ != FamilyTag::Classical; }

    /// k-th eigenfunction (Hermite functions, normalized Hermite polynomials,
    /// Laguerre functions).
    Real eigenfunction(int k, Real x) const;

    std::string name() const;

  private:
    KernelFamily(FamilyTag t, Real a) : tag_(t), alpha_(a) {}
    FamilyTag tag_;
    Real alpha_;
};

/// Closed-form heat kernel W_t(x, y); exponents are assembled in log space so
/// nothing overflows (Laguerre handles Bessel arguments far beyond 700).
Real heat_kernel(const KernelFamily& family, Real t, Real x, Real y);

/// Analytic time derivative of the heat kernel.
Real heat_kernel_dt(const KernelFamily& family, Real t, Real x, Real y);

/// Ornstein-Uhlenbeck kernel against Lebesgue measure, W_t(x,y) e^{-y^2};
/// bounded in y, unlike the kernel itself.
Real ou_kernel_weighted(Real t, Real x, Real y);
Real ou_kernel_weighted_dt(Real t, Real x, Real y);

/// Mass of the classical kernel over |z| <= eps: erf(eps / sqrt(2t)).
Real near_diagonal_mass(Real eps, Real t);

/// -d/dt of near_diagonal_mass: (eps/sqrt(2 pi)) t^{-3/2} exp(-eps^2/(2t));
/// integrates to 1 over t in (0, infinity).
Real pv_weight(Real eps, Real t);

} // namespace specmult
