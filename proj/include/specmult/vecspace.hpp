#pragma once

#include <limits>

#include "specmult/multipliers.hpp"

namespace specmult {

/// Finite-dimensional coordinate space ell^q_n (q = inf allowed).
struct CoordinateSpace {
    Real q = 2.0;
    int n = 1;

    CoordinateSpace() = default;
    CoordinateSpace(Real q_, int n_) : q(q_), n(n_) {
        if (!(q >= 1.0)) throw std::invalid_argument("CoordinateSpace: q must be >= 1");
        if (n < 1) throw std::invalid_argument("CoordinateSpace: n must be >= 1");
    }
    static constexpr Real inf = std::numeric_limits<Real>::infinity();
};

Real coordinate_norm(const CoordinateSpace& space, const Eigen::VectorXcd& v);

/// Vector-valued samples; row i holds coordinate i along the grid.
struct VectorGridFunction {
    Vector nodes;
    Eigen::MatrixXcd values; // n x N
    Domain domain = Domain::RealLine;

    VectorGridFunction() = default;
    VectorGridFunction(Vector nodes, Eigen::MatrixXcd values, Domain domain);

    int dim() const { return static_cast<int>(values.rows()); }
    GridFunction coordinate(int i) const;
};

struct BochnerNorm {
    Real p = 2.0;
    CoordinateSpace space;

    BochnerNorm() = default;
    BochnerNorm(Real p_, CoordinateSpace s) : p(p_), space(s) {
        if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("BochnerNorm: p in (1,inf)");
    }
};

/// (integral of |f(x)|_q^p dmu)^{1/p} by composite quadrature on the grid.
Real bochner_lp_norm(const BochnerNorm& bn, const VectorGridFunction& f,
                     const KernelFamily& family);

/// Coordinatewise truncated-expansion application of T_m.
VectorGridFunction vector_apply_spectral(const KernelFamily& family, const MultiplierSymbol& s,
                                         const VectorGridFunction& f,
                                         const SpectralTruncation& trunc = {},
                                         const Tolerance& tol = Tolerance());

/// Coordinatewise principal-value evaluation at one point.
Eigen::VectorXcd vector_pv_apply(const KernelFamily& family, const MultiplierSymbol& s,
                                 const VectorGridFunction& f, Real x,
                                 const std::vector<Real>& schedule = default_pv_schedule(),
                                 Real convergence_tol = 1e-6,
                                 const Tolerance& tol = Tolerance());

struct ProbeRow {
    Real gamma;
    int f_index;
    Real ratio; // |L^{i gamma} f| / |f| in the Bochner norm
};

/// Empirical operator-norm lower bounds for the imaginary powers across a
/// gamma list; purely descriptive output.
std::vector<ProbeRow> gamma_norm_probe(const KernelFamily& family, Real p,
                                       const CoordinateSpace& space,
                                       const std::vector<Real>& gammas,
                                       const std::vector<VectorGridFunction>& corpus,
                                       const SpectralTruncation& trunc = {},
                                       const Tolerance& tol = Tolerance());

} // namespace specmult
