#include "specmult/grid_function.hpp"

#include <algorithm>
#include <cmath>

namespace specmult {

GridFunction::GridFunction(Vector n, CVector v, Domain d)
    : nodes(std::move(n)), values(std::move(v)), domain(d) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("GridFunction: nodes/values size mismatch");
    if (nodes.size() < 2) throw std::invalid_argument("GridFunction: need at least 2 nodes");
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i]) || !std::isfinite(values[i].real()) ||
            !std::isfinite(values[i].imag()))
            throw std::invalid_argument("GridFunction: non-finite entry");
        if (i > 0 && !(nodes[i] > nodes[i - 1]))
            throw std::invalid_argument("GridFunction: nodes must be strictly increasing");
        if (domain == Domain::HalfLine && !(nodes[i] > 0.0))
            throw std::invalid_argument("GridFunction: nodes must be positive on (0,inf)");
    }
}

namespace {

// End slope from a one-sided cubic fit through the first/last four samples.
Cplx end_slope(const Vector& x, const CVector& f, bool left) {
    const Eigen::Index n = x.size();
    if (n < 4) {
        return left ? (f[1] - f[0]) / (x[1] - x[0]) : (f[n - 1] - f[n - 2]) / (x[n - 1] - x[n - 2]);
    }
    Eigen::Index i0 = left ? 0 : n - 4;
    const Real xe = left ? x[0] : x[n - 1];
    // Lagrange derivative at xe
    Cplx d(0.0, 0.0);
    for (int j = 0; j < 4; ++j) {
        Real num = 0.0;
        for (int m = 0; m < 4; ++m) {
            if (m == j) continue;
            Real p = 1.0;
            for (int l = 0; l < 4; ++l) {
                if (l == j || l == m) continue;
                p *= (xe - x[i0 + l]);
            }
            num += p;
        }
        Real den = 1.0;
        for (int m = 0; m < 4; ++m)
            if (m != j) den *= (x[i0 + j] - x[i0 + m]);
        d += f[i0 + j] * (num / den);
    }
    return d;
}

} // namespace

CubicInterpolant::CubicInterpolant(const GridFunction& g) : x_(g.nodes), f_(g.values) {
    const Eigen::Index n = x_.size();
    slope_.resize(n);
    if (n == 2) {
        slope_[0] = slope_[1] = (f_[1] - f_[0]) / (x_[1] - x_[0]);
        return;
    }
    // C^2 spline in Hermite-slope form: tridiagonal system with clamped ends,
    // end slopes estimated by one-sided cubic fits.
    CVector rhs(n);
    Vector a(n), b(n), c(n);
    a[0] = 0.0;
    b[0] = 1.0;
    c[0] = 0.0;
    rhs[0] = end_slope(x_, f_, true);
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        const Real hl = x_[i] - x_[i - 1];
        const Real hr = x_[i + 1] - x_[i];
        a[i] = 1.0 / hl;
        b[i] = 2.0 * (1.0 / hl + 1.0 / hr);
        c[i] = 1.0 / hr;
        rhs[i] = 3.0 * ((f_[i] - f_[i - 1]) / (hl * hl) + (f_[i + 1] - f_[i]) / (hr * hr));
    }
    a[n - 1] = 0.0;
    b[n - 1] = 1.0;
    c[n - 1] = 0.0;
    rhs[n - 1] = end_slope(x_, f_, false);

    // Thomas solve
    for (Eigen::Index i = 1; i < n; ++i) {
        const Real w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    slope_[n - 1] = rhs[n - 1] / b[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i)
        slope_[i] = (rhs[i] - c[i] * slope_[i + 1]) / b[i];
}

Cplx CubicInterpolant::operator()(Real x) const {
    if (x < x_(0) || x > x_(x_.size() - 1)) return Cplx(0.0, 0.0);
    const Real* beg = x_.data();
    const Real* end = beg + x_.size();
    Eigen::Index i = std::upper_bound(beg, end, x) - beg;
    if (i <= 0) i = 1;
    if (i >= x_.size()) i = x_.size() - 1;
    const Real h = x_[i] - x_[i - 1];
    const Real u = (x - x_[i - 1]) / h;
    const Real u2 = u * u;
    const Real h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const Real h10 = u * (1.0 - u) * (1.0 - u);
    const Real h01 = u2 * (3.0 - 2.0 * u);
    const Real h11 = u2 * (u - 1.0);
    return h00 * f_[i - 1] + h10 * h * slope_[i - 1] + h01 * f_[i] + h11 * h * slope_[i];
}

Vector uniform_grid(Real a, Real b, int n) {
    if (n < 2 || !(a < b)) throw std::invalid_argument("uniform_grid: bad arguments");
    Vector g(n);
    for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1);
    return g;
}

GridFunction sample(const std::function<Cplx(Real)>& fn, const Vector& nodes, Domain domain) {
    CVector v(nodes.size());
    for (Eigen::Index i = 0; i < nodes.size(); ++i) v[i] = fn(nodes[i]);
    return GridFunction(nodes, v, domain);
}

Real grid_lp_norm(const GridFunction& f, Real p, const KernelFamily& family) {
    if (!(p >= 1.0)) throw std::invalid_argument("grid_lp_norm: requires p >= 1");
    const Eigen::Index n = f.nodes.size();
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i)
        g[i] = std::pow(std::abs(f.values[i]), p) * family.measure_weight(f.nodes[i]);

    const Real h = f.nodes[1] - f.nodes[0];
    bool uniform = true;
    for (Eigen::Index i = 1; i + 1 < n; ++i)
        if (std::abs((f.nodes[i + 1] - f.nodes[i]) - h) > 1e-12 * std::abs(h)) {
            uniform = false;
            break;
        }

    Real integral = 0.0;
    if (uniform && n >= 3) {
        // composite Simpson; odd trailing interval handled by trapezoid
        Eigen::Index last = (n % 2 == 1) ? n - 1 : n - 2;
        for (Eigen::Index i = 0; i + 2 <= last; i += 2)
            integral += h / 3.0 * (g[i] + 4.0 * g[i + 1] + g[i + 2]);
        if (last != n - 1) integral += 0.5 * h * (g[n - 2] + g[n - 1]);
    } else {
        for (Eigen::Index i = 0; i + 1 < n; ++i)
            integral += 0.5 * (f.nodes[i + 1] - f.nodes[i]) * (g[i] + g[i + 1]);
    }
    return std::pow(integral, 1.0 / p);
}

} // namespace specmult
