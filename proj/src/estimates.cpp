#include "specmult/estimates.hpp"

#include <algorithm>
#include <cmath>

namespace specmult {

bool RegionSpec::contains(Real x, Real y) const {
    switch (kind) {
        case Kind::Local: return x > 0.0 && 0.5 * x < y && y < 2.0 * x;
        case Kind::GlobalBelow: return x > 0.0 && 0.0 < y && y < 0.5 * x;
        case Kind::GlobalAbove: return x > 0.0 && y > 2.0 * x;
        case Kind::Global:
            return x > 0.0 && y > 0.0 && (y < 0.5 * x || y > 2.0 * x);
        case Kind::OppositeSign: return x * y < 0.0;
        case Kind::NearBand: return std::abs(x - y) <= s / (1.0 + std::abs(x) + std::abs(y));
        case Kind::All: return true;
    }
    return false;
}

namespace {

struct ScanPass {
    Real sup = 0.0;
    Real worst_x = 0.0, worst_y = 0.0;
    std::vector<std::array<Real, 3>> samples;
};

// Sweep ratio(x, y) over the admissible grid nodes; deterministic node order.
template <typename RatioFn, typename AdmitFn>
ScanPass sweep(const GridSpec2D& grid, int n, const AdmitFn& admit, const RatioFn& ratio) {
    ScanPass pass;
    for (int i = 0; i < n; ++i) {
        const Real x = grid.x_min + (grid.x_max - grid.x_min) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const Real y = grid.y_min + (grid.y_max - grid.y_min) * j / (n - 1);
            if (!admit(x, y)) continue;
            Real r;
            try {
                r = ratio(x, y);
            } catch (const MaxSubdivisionsExceeded& e) {
                throw std::runtime_error("scan: quadrature failure at node (x=" +
                                         std::to_string(x) + ", y=" + std::to_string(y) +
                                         "): " + e.what());
            }
            pass.samples.push_back({x, y, r});
            if (r > pass.sup) {
                pass.sup = r;
                pass.worst_x = x;
                pass.worst_y = y;
            }
        }
    }
    return pass;
}

void merge_pass(ScanPass& into, const ScanPass& other) {
    if (other.sup > into.sup) {
        into.sup = other.sup;
        into.worst_x = other.worst_x;
        into.worst_y = other.worst_y;
    }
    into.samples.insert(into.samples.end(), other.samples.begin(), other.samples.end());
}

ScanReport make_report(const std::string& id, const GridSpec2D& grid, Real delta,
                       const ScanPass& base, const ScanPass& fine) {
    ScanReport rep;
    rep.id = id;
    rep.grid = grid;
    rep.delta = delta;
    rep.empirical_constant = std::max(base.sup, fine.sup);
    rep.refinement_drift =
        std::abs(fine.sup - base.sup) / std::max(std::abs(base.sup), Real(1e-300));
    rep.worst_x = fine.sup >= base.sup ? fine.worst_x : base.worst_x;
    rep.worst_y = fine.sup >= base.sup ? fine.worst_y : base.worst_y;
    rep.conclusive = rep.refinement_drift <= 0.05;
    rep.samples = base.samples;
    return rep;
}

template <typename RatioFn, typename AdmitFn>
ScanReport run_scan(const std::string& id, const GridSpec2D& grid, Real delta,
                    const AdmitFn& admit, const RatioFn& ratio) {
    ScanPass base = sweep(grid, grid.n, admit, ratio);
    ScanPass fine = sweep(grid, 2 * grid.n - 1, admit, ratio);
    return make_report(id, grid, delta, base, fine);
}

Real grid_delta(const GridSpec2D& grid) {
    return std::max((grid.x_max - grid.x_min), (grid.y_max - grid.y_min)) / (grid.n - 1);
}

} // namespace

std::pair<ScanReport, ScanReport> cz_scan(const KernelFamily& family, const MultiplierSymbol& s,
                                          const GridSpec2D& grid, const Tolerance& tol) {
    const Real delta = grid_delta(grid);
    const Real h = delta / 10.0;
    auto admit = [&](Real x, Real y) {
        return family.contains(x) && family.contains(y) && std::abs(x - y) >= delta * (1.0 - 1e-12);
    };
    auto size_ratio = [&](Real x, Real y) {
        return std::abs(x - y) * std::abs(multiplier_kernel(family, s, x, y, tol));
    };
    auto grad_ratio = [&](Real x, Real y) {
        auto K = [&](Real a, Real b) { return multiplier_kernel(family, s, a, b, tol); };
        const Cplx dx = (K(x + h, y) - K(x - h, y)) / (2.0 * h);
        const Cplx dy = (K(x, y + h) - K(x, y - h)) / (2.0 * h);
        const Real u2 = (x - y) * (x - y);
        return u2 * (std::abs(dx) + std::abs(dy));
    };
    ScanReport size_rep = run_scan("cz1", grid, delta, admit, size_ratio);
    ScanReport grad_rep = run_scan("cz2", grid, delta, admit, grad_ratio);
    return {size_rep, grad_rep};
}

ScanReport laguerre_bound_scan(Real alpha, const MultiplierSymbol& s, LaguerreBound which,
                               const GridSpec2D& grid, const Tolerance& tol) {
    const KernelFamily hermite = KernelFamily::hermite();
    const KernelFamily laguerre = KernelFamily::laguerre(alpha);
    const Real delta = grid_delta(grid);

    switch (which) {
        case LaguerreBound::GlobalHermite: {
            RegionSpec region = RegionSpec::global();
            auto admit = [&](Real x, Real y) { return region.contains(x, y); };
            auto ratio = [&](Real x, Real y) {
                return std::abs(multiplier_kernel(hermite, s, x, y, tol)) * std::max(x, y);
            };
            return run_scan("laguerre_a", grid, delta, admit, ratio);
        }
        case LaguerreBound::OppositeSign: {
            RegionSpec region = RegionSpec::opposite_sign();
            auto admit = [&](Real x, Real y) {
                return region.contains(x, y) && std::abs(x - y) >= delta;
            };
            auto ratio = [&](Real x, Real y) {
                return std::abs(multiplier_kernel(hermite, s, x, y, tol)) *
                       (std::abs(x) + std::abs(y));
            };
            // The sup saturates on the inner boundary |x| + |y| = delta, which
            // a rectangular mesh never lines up with; sample that segment too.
            auto segment_pass = [&](int n) {
                ScanPass pass;
                for (int i = 1; i < n; ++i) {
                    const Real theta = static_cast<Real>(i) / n;
                    for (auto [x, y] :
                         {std::pair<Real, Real>{theta * delta, -(1.0 - theta) * delta},
                          std::pair<Real, Real>{-theta * delta, (1.0 - theta) * delta}}) {
                        const Real r = ratio(x, y);
                        pass.samples.push_back({x, y, r});
                        if (r > pass.sup) {
                            pass.sup = r;
                            pass.worst_x = x;
                            pass.worst_y = y;
                        }
                    }
                }
                return pass;
            };
            ScanPass base = sweep(grid, grid.n, admit, ratio);
            merge_pass(base, segment_pass(grid.n));
            ScanPass fine = sweep(grid, 2 * grid.n - 1, admit, ratio);
            merge_pass(fine, segment_pass(2 * grid.n - 1));
            return make_report("laguerre_b", grid, delta, base, fine);
        }
        case LaguerreBound::GlobalLaguerre: {
            RegionSpec region = RegionSpec::global();
            auto admit = [&](Real x, Real y) { return region.contains(x, y); };
            auto ratio = [&](Real x, Real y) {
                const Real mn = std::min(x, y), mx = std::max(x, y);
                return std::abs(multiplier_kernel(laguerre, s, x, y, tol)) *
                       std::pow(mx, alpha + 1.5) / std::pow(mn, alpha + 0.5);
            };
            return run_scan("laguerre_c", grid, delta, admit, ratio);
        }
        case LaguerreBound::LocalDifference: {
            // Ratio of the kernel difference over the closed local zone
            // x/2 <= y <= 2x minus the diagonal band |x-y| < delta.  The sup
            // sits on the outer boundary y = x/2 (the weight grows with
            // |x-y|), so offsets are sampled as fixed fractions of the zone
            // width with the boundary fraction included; refinement then only
            // sharpens the mesh, never moves the region.
            const Real band_delta = (grid.x_max - grid.x_min) / (grid.n - 1);
            auto ratio = [&](Real x, Real y) {
                const Cplx diff = multiplier_kernel(laguerre, s, x, y, tol) -
                                  multiplier_kernel(hermite, s, x, y, tol);
                return std::abs(diff) * x / (1.0 + std::sqrt(x / std::abs(y - x)));
            };
            auto band_pass = [&](int nx, int nu) {
                ScanPass pass;
                for (int i = 0; i < nx; ++i) {
                    const Real x = grid.x_min + (grid.x_max - grid.x_min) * i / (nx - 1);
                    if (!(x > 0.0)) continue;
                    for (int j = 1; j <= nu; ++j) {
                        const Real tau = static_cast<Real>(j) / nu;
                        for (Real y : {x - 0.5 * x * tau, x + x * tau}) {
                            const Real u = std::abs(y - x);
                            if (u < band_delta || y < grid.y_min || y > grid.y_max) continue;
                            Real r;
                            try {
                                r = ratio(x, y);
                            } catch (const MaxSubdivisionsExceeded& e) {
                                throw std::runtime_error(
                                    "scan: quadrature failure at node (x=" + std::to_string(x) +
                                    ", y=" + std::to_string(y) + "): " + e.what());
                            }
                            pass.samples.push_back({x, y, r});
                            if (r > pass.sup) {
                                pass.sup = r;
                                pass.worst_x = x;
                                pass.worst_y = y;
                            }
                        }
                    }
                }
                return pass;
            };
            ScanPass base = band_pass(grid.n, 12);
            ScanPass fine = band_pass(2 * grid.n - 1, 24);
            return make_report("laguerre_d", grid, band_delta, base, fine);
        }
    }
    throw std::logic_error("laguerre_bound_scan: unreachable");
}

Real hardy_h0(Real eta, const RealFn& f, Real x, const Tolerance& tol) {
    if (!(eta > -1.0)) throw std::domain_error("hardy_h0: requires eta > -1");
    if (!(x > 0.0)) throw std::domain_error("hardy_h0: requires x > 0");
    Integrand g = [&f, eta](Real y) { return Cplx(std::pow(y, eta) * f(y), 0.0); };
    IntegrandSpec spec;
    if (eta < 0.0) spec.left_singularity = -eta;
    spec.initial_panels = 4;
    const Cplx v = adaptive_integrate(g, 0.0, x, tol, spec).value;
    return std::pow(x, -eta - 1.0) * v.real();
}

Real hardy_hinf(Real eta, const RealFn& f, Real x, const Tolerance& tol) {
    if (!(x > 0.0)) throw std::domain_error("hardy_hinf: requires x > 0");
    Integrand g = [&f, eta](Real y) { return Cplx(f(y) * std::pow(y, -eta - 1.0), 0.0); };
    const Cplx v = integrate_from(g, x, tol).value;
    return std::pow(x, eta) * v.real();
}

Real op_n(const RealFn& f, Real x, const Tolerance& tol) {
    if (!(x > 0.0)) throw std::domain_error("op_n: requires x > 0");
    Integrand g = [&f, x](Real y) {
        return Cplx((1.0 + std::sqrt(x / std::abs(x - y))) * std::abs(f(y)) / y, 0.0);
    };
    Tolerance half_tol(tol.abs_tol / 2.0, tol.rel_tol, tol.max_subdivisions);
    IntegrandSpec left_part; // singular at the right endpoint y = x
    left_part.right_singularity = 0.5;
    left_part.initial_panels = 4;
    IntegrandSpec right_part;
    right_part.left_singularity = 0.5;
    right_part.initial_panels = 4;
    const Cplx v1 = adaptive_integrate(g, 0.5 * x, x, half_tol, left_part).value;
    const Cplx v2 = adaptive_integrate(g, x, 2.0 * x, half_tol, right_part).value;
    return v1.real() + v2.real();
}

std::vector<Real> maximal_truncation_scan(const KernelFamily& family, const MultiplierSymbol& s,
                                          const GridFunction& f, Real x,
                                          const std::vector<Real>& epsilons,
                                          const Tolerance& tol) {
    PvResult pv = pv_apply(family, s, f, x, epsilons, 0.0, tol);
    std::vector<Real> out;
    out.reserve(pv.truncations.size());
    for (const Cplx& v : pv.truncations) out.push_back(std::abs(v));
    return out;
}

} // namespace specmult
