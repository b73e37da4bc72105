#pragma once

#include <array>
#include <string>
#include <vector>

#include "specmult/multipliers.hpp"

namespace specmult {

/// 2-D scan window; n nodes per axis at base resolution.
struct GridSpec2D {
    Real x_min, x_max, y_min, y_max;
    int n = 25;
};

/// Empirical sup of a certified kernel ratio over a refined grid.
struct ScanReport {
    std::string id;
    GridSpec2D grid;
    Real delta = 0.0; // diagonal margin at base resolution
    Real empirical_constant = 0.0;
    Real refinement_drift = 0.0;
    Real worst_x = 0.0, worst_y = 0.0;
    bool conclusive = false; // drift within 5%
    std::vector<std::array<Real, 3>> samples; // (x, y, ratio) at base resolution
};

/// Membership predicates for the scan regions.
struct RegionSpec {
    enum class Kind { Local, GlobalBelow, GlobalAbove, Global, OppositeSign, NearBand, All };
    Kind kind = Kind::All;
    Real s = 1.0; // NearBand width parameter

    bool contains(Real x, Real y) const;
    static RegionSpec local() { return {Kind::Local, 0.0}; }
    static RegionSpec global_below() { return {Kind::GlobalBelow, 0.0}; }
    static RegionSpec global_above() { return {Kind::GlobalAbove, 0.0}; }
    static RegionSpec global() { return {Kind::Global, 0.0}; }
    static RegionSpec opposite_sign() { return {Kind::OppositeSign, 0.0}; }
    static RegionSpec near_band(Real s) { return {Kind::NearBand, s}; }
    static RegionSpec all() { return {Kind::All, 0.0}; }
};

/// Calderon-Zygmund ratios for K_phi:
///   size:     sup |x-y| |K(x,y)|
///   gradient: sup |x-y|^2 (|dK/dx| + |dK/dy|)   (central differences, h = delta/10)
/// both with their drift under 2x grid refinement.
std::pair<ScanReport, ScanReport> cz_scan(const KernelFamily& family, const MultiplierSymbol& s,
                                          const GridSpec2D& grid,
                                          const Tolerance& tol = Tolerance());

/// The four Hermite/Laguerre comparison ratios on (0, infinity).
enum class LaguerreBound { GlobalHermite, OppositeSign, GlobalLaguerre, LocalDifference };

ScanReport laguerre_bound_scan(Real alpha, const MultiplierSymbol& s, LaguerreBound which,
                               const GridSpec2D& grid, const Tolerance& tol = Tolerance());

using RealFn = std::function<Real(Real)>;

/// H_0^eta(f)(x) = x^{-eta-1} * integral over (0,x) of y^eta f(y) dy, eta > -1.
Real hardy_h0(Real eta, const RealFn& f, Real x, const Tolerance& tol = Tolerance());

/// H_inf^eta(f)(x) = x^eta * integral over (x,inf) of f(y) y^{-eta-1} dy.
Real hardy_hinf(Real eta, const RealFn& f, Real x, const Tolerance& tol = Tolerance());

/// N(f)(x) = integral over (x/2, 2x) of (1/y)(1 + sqrt(x/|x-y|)) |f(y)| dy.
Real op_n(const RealFn& f, Real x, const Tolerance& tol = Tolerance());

/// |Lambda(eps) f(x) + off-ball kernel integral| for each epsilon in the list.
std::vector<Real> maximal_truncation_scan(const KernelFamily& family, const MultiplierSymbol& s,
                                          const GridFunction& f, Real x,
                                          const std::vector<Real>& epsilons,
                                          const Tolerance& tol = Tolerance());

} // namespace specmult
