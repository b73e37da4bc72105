#pragma once

#include <Eigen/Core>

#include "specmult/heat_kernels.hpp"
#include "specmult/quadrature.hpp"

namespace specmult {

enum class Domain { RealLine, HalfLine };

inline Domain domain_of(const KernelFamily& f) {
    return f.half_line() ? Domain::HalfLine : Domain::RealLine;
}

/// Complex-valued function sampled on a strictly increasing 1-D grid.
struct GridFunction {
    Vector nodes;
    CVector values;
    Domain domain = Domain::RealLine;

    GridFunction() = default;
    GridFunction(Vector nodes, CVector values, Domain domain);

    int size() const { return static_cast<int>(nodes.size()); }
};

/// C^2 cubic spline through the samples, identically zero outside the grid
/// hull (sampled functions are treated as compactly supported).
class CubicInterpolant {
  public:
    explicit CubicInterpolant(const GridFunction& f);

    Cplx operator()(Real x) const;
    Real lo() const { return x_(0); }
    Real hi() const { return x_(x_.size() - 1); }

  private:
    Vector x_;
    CVector f_;
    CVector slope_;
};

Vector uniform_grid(Real a, Real b, int n);

GridFunction sample(const std::function<Cplx(Real)>& fn, const Vector& nodes, Domain domain);

/// (integral of |f|^p dmu)^{1/p} by composite Simpson on the grid
/// (trapezoid on non-uniform grids).
Real grid_lp_norm(const GridFunction& f, Real p, const KernelFamily& family);

} // namespace specmult
