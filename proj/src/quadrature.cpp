#include "specmult/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "specmult/heat_kernels.hpp"

namespace specmult {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK dqk15).
constexpr Real kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr Real kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr Real kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct Panel {
    Real a, b;
    Cplx value;
    Real error;
    Real resabs;
    long order; // insertion index, for deterministic tie-breaks
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.error != q.error) return p.error < q.error;
        return p.order > q.order;
    }
};

Panel evaluate_panel(const Integrand& f, Real a, Real b, long order) {
    const Real mid = 0.5 * (a + b);
    const Real half = 0.5 * (b - a);
    const Cplx fc = f(mid);
    Cplx k15 = kWgk[7] * fc;
    Cplx g7 = kWg[3] * fc;
    Real resabs = kWgk[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const Real dx = half * kXgk[i];
        const Cplx f1 = f(mid - dx);
        const Cplx f2 = f(mid + dx);
        k15 += kWgk[i] * (f1 + f2);
        resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) g7 += kWg[i / 2] * (f1 + f2);
    }
    k15 *= half;
    g7 *= half;
    resabs *= half;
    Real err = std::abs(k15 - g7);
    // QUADPACK-style sharpening plus a roundoff floor.
    if (resabs > 0.0 && err > 0.0) {
        const Real scaled = 200.0 * err / resabs;
        if (scaled < 1.0) err = resabs * std::pow(scaled, 1.5) / 200.0 * 200.0;
    }
    err = std::max(err, 50.0 * std::numeric_limits<Real>::epsilon() * resabs);
    return Panel{a, b, k15, err, resabs, order};
}

// x = a + (b-a) u^p maps u in [0,1] onto [a,b], flattening an (x-a)^{-beta}
// blowup when p = 2/(1-beta).
Integrand left_power_map(const Integrand& f, Real a, Real b, Real beta, Real& pa, Real& pb) {
    const Real p = 2.0 / (1.0 - beta);
    const Real len = b - a;
    pa = 0.0;
    pb = 1.0;
    return [f, a, len, p](Real u) -> Cplx {
        if (u <= 0.0) return Cplx(0.0, 0.0);
        const Real up = std::pow(u, p);
        return f(a + len * up) * Cplx(len * p * up / u, 0.0);
    };
}

Integrand right_power_map(const Integrand& f, Real a, Real b, Real beta, Real& pa, Real& pb) {
    const Real p = 2.0 / (1.0 - beta);
    const Real len = b - a;
    pa = 0.0;
    pb = 1.0;
    return [f, b, len, p](Real u) -> Cplx {
        if (u <= 0.0) return Cplx(0.0, 0.0);
        const Real up = std::pow(u, p);
        return f(b - len * up) * Cplx(len * p * up / u, 0.0);
    };
}

QuadratureResult adaptive_core(const Integrand& f, Real a, Real b, const Tolerance& tol,
                               int initial_panels, const std::vector<Real>& splits) {
    std::vector<Real> edges;
    edges.push_back(a);
    for (Real s : splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    long order = 0;
    long nodes = 0;
    const int per_piece = std::max(1, initial_panels / std::max<int>(1, edges.size() - 1));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const Real lo = edges[i], hi = edges[i + 1];
        for (int j = 0; j < per_piece; ++j) {
            const Real pa = lo + (hi - lo) * j / per_piece;
            const Real pb = lo + (hi - lo) * (j + 1) / per_piece;
            heap.push(evaluate_panel(f, pa, pb, order++));
            nodes += 15;
        }
    }

    Real err_sum = 0.0;
    Cplx val_sum(0.0, 0.0);
    {
        std::priority_queue<Panel, std::vector<Panel>, PanelWorse> copy = heap;
        while (!copy.empty()) {
            err_sum += copy.top().error;
            val_sum += copy.top().value;
            copy.pop();
        }
    }

    // Panels whose error estimate sits at the evaluation-noise floor (or
    // whose width collapsed to machine spacing) cannot improve under
    // bisection -- splitting redistributes noise without shrinking its sum --
    // so they are retired and the loop terminates at the achievable accuracy.
    // The floor allows for ~1e4 ulp of internal cancellation in the
    // integrand, passed through the 1.5-power sharpening above.
    constexpr Real kNoiseFloor = 2.5e-13;
    std::vector<Panel> retired;
    auto at_floor = [](const Panel& p) {
        return p.error <= kNoiseFloor * p.resabs ||
               !(0.5 * (p.a + p.b) > p.a && 0.5 * (p.a + p.b) < p.b);
    };

    int used = static_cast<int>(order);
    while (err_sum > std::max(tol.abs_tol, tol.rel_tol * std::abs(val_sum)) && !heap.empty()) {
        Panel worst = heap.top();
        if (at_floor(worst)) {
            heap.pop();
            retired.push_back(worst);
            continue; // its error stays in err_sum as an honest residual
        }
        if (used >= tol.max_subdivisions) {
            std::vector<Panel> rest = retired;
            while (!heap.empty()) {
                rest.push_back(heap.top());
                heap.pop();
            }
            std::sort(rest.begin(), rest.end(),
                      [](const Panel& p, const Panel& q) { return p.a < q.a; });
            QuadratureResult best;
            for (const Panel& p : rest) {
                best.value += p.value;
                best.error_estimate += p.error;
            }
            best.nodes_used = nodes;
            throw MaxSubdivisionsExceeded("adaptive_integrate: max_subdivisions exceeded", best);
        }
        heap.pop();
        err_sum -= worst.error;
        val_sum -= worst.value;
        const Real mid = 0.5 * (worst.a + worst.b);
        Panel p1 = evaluate_panel(f, worst.a, mid, order++);
        Panel p2 = evaluate_panel(f, mid, worst.b, order++);
        nodes += 30;
        used++;
        err_sum += p1.error + p2.error;
        val_sum += p1.value + p2.value;
        heap.push(p1);
        heap.push(p2);
    }

    std::vector<Panel> all = retired;
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    QuadratureResult out;
    Real err = 0.0;
    Cplx val(0.0, 0.0);
    for (const Panel& p : all) {
        val += p.value;
        err += p.error;
    }
    out.value = val;
    out.error_estimate = err;
    out.nodes_used = nodes;
    return out;
}

} // namespace

QuadratureResult adaptive_integrate(const Integrand& f, Real a, Real b, const Tolerance& tol,
                                    const IntegrandSpec& spec) {
    if (!(a < b)) throw std::invalid_argument("adaptive_integrate: requires a < b");
    if (spec.left_singularity && !(*spec.left_singularity < 1.0))
        throw std::invalid_argument("adaptive_integrate: left singularity exponent must be < 1");
    if (spec.right_singularity && !(*spec.right_singularity < 1.0))
        throw std::invalid_argument("adaptive_integrate: right singularity exponent must be < 1");

    if (spec.left_singularity && spec.right_singularity) {
        const Real mid = 0.5 * (a + b);
        IntegrandSpec l = spec, r = spec;
        l.right_singularity.reset();
        r.left_singularity.reset();
        std::vector<Real> lb, rb;
        for (Real s : spec.breakpoints) (s < mid ? lb : rb).push_back(s);
        l.breakpoints = lb;
        r.breakpoints = rb;
        Tolerance half_tol(tol.abs_tol / 2.0, tol.rel_tol, tol.max_subdivisions / 2);
        QuadratureResult r1 = adaptive_integrate(f, a, mid, half_tol, l);
        QuadratureResult r2 = adaptive_integrate(f, mid, b, half_tol, r);
        return {r1.value + r2.value, r1.error_estimate + r2.error_estimate,
                r1.nodes_used + r2.nodes_used};
    }

    // Near a singular endpoint e != 0 the caller's integrand only sees x to
    // machine precision, so values within ~100 ulp of e carry O(1) relative
    // noise; report that sliver's mass as an irreducible error floor.
    auto endpoint_noise = [&f](Real e, int toward) -> Real {
        const Real d0 = 128.0 * std::numeric_limits<Real>::epsilon() * std::abs(e);
        if (d0 == 0.0) return 0.0;
        const Real probe = std::abs(f(e + toward * d0));
        return std::isfinite(probe) ? 4.0 * probe * d0 : 0.0;
    };

    if (spec.left_singularity) {
        Real pa, pb;
        Integrand g = left_power_map(f, a, b, *spec.left_singularity, pa, pb);
        IntegrandSpec inner;
        inner.initial_panels = std::max(2, spec.initial_panels);
        const Real p = 2.0 / (1.0 - *spec.left_singularity);
        for (Real s : spec.breakpoints)
            if (s > a && s < b) inner.breakpoints.push_back(std::pow((s - a) / (b - a), 1.0 / p));
        QuadratureResult r = adaptive_integrate(g, pa, pb, tol, inner);
        r.error_estimate += endpoint_noise(a, +1);
        return r;
    }
    if (spec.right_singularity) {
        Real pa, pb;
        Integrand g = right_power_map(f, a, b, *spec.right_singularity, pa, pb);
        IntegrandSpec inner;
        inner.initial_panels = std::max(2, spec.initial_panels);
        const Real p = 2.0 / (1.0 - *spec.right_singularity);
        for (Real s : spec.breakpoints)
            if (s > a && s < b) inner.breakpoints.push_back(std::pow((b - s) / (b - a), 1.0 / p));
        QuadratureResult r = adaptive_integrate(g, pa, pb, tol, inner);
        r.error_estimate += endpoint_noise(b, -1);
        return r;
    }

    return adaptive_core(f, a, b, tol, spec.initial_panels, spec.breakpoints);
}

QuadratureResult integrate_halfline(const Integrand& g, const Tolerance& tol,
                                    std::optional<Real> origin_power,
                                    const std::vector<Real>& breakpoints) {
    const Real T = 20.0;
    const Real s_star = std::tanh(0.5 * T);

    Integrand head = [&g](Real s) -> Cplx {
        const Real t = std::log1p(2.0 * s / (1.0 - s));
        return g(t) * Cplx(2.0 / ((1.0 - s) * (1.0 + s)), 0.0);
    };
    IntegrandSpec head_spec;
    head_spec.left_singularity = origin_power;
    head_spec.initial_panels = 8;
    for (Real tb : breakpoints)
        if (tb > 0.0 && tb < T) head_spec.breakpoints.push_back(std::tanh(0.5 * tb));
    Tolerance part_tol(tol.abs_tol / 2.0, tol.rel_tol, tol.max_subdivisions);
    QuadratureResult head_res = adaptive_integrate(head, 0.0, s_star, part_tol, head_spec);

    // tail: t = T / v^2, dt = -2T/v^3 dv; constant integrand for t^{-3/2} tails
    Integrand tail = [&g, T](Real v) -> Cplx {
        if (v <= 0.0) return Cplx(0.0, 0.0);
        const Real t = T / (v * v);
        if (!std::isfinite(t)) return Cplx(0.0, 0.0);
        return g(t) * Cplx(2.0 * T / (v * v * v), 0.0);
    };
    IntegrandSpec tail_spec;
    tail_spec.initial_panels = 4;
    for (Real tb : breakpoints)
        if (tb > T) tail_spec.breakpoints.push_back(std::sqrt(T / tb));
    QuadratureResult tail_res = adaptive_integrate(tail, 0.0, 1.0, part_tol, tail_spec);

    return {head_res.value + tail_res.value, head_res.error_estimate + tail_res.error_estimate,
            head_res.nodes_used + tail_res.nodes_used};
}

QuadratureResult integrate_from(const Integrand& f, Real a, const Tolerance& tol) {
    if (!(a > 0.0)) throw std::invalid_argument("integrate_from: requires a > 0");
    // y = a / (1 - w), dy = a/(1-w)^2 dw, w in (0,1)
    Integrand g = [&f, a](Real w) -> Cplx {
        if (w >= 1.0) return Cplx(0.0, 0.0);
        const Real y = a / (1.0 - w);
        if (!std::isfinite(y)) return Cplx(0.0, 0.0);
        return f(y) * Cplx(a / ((1.0 - w) * (1.0 - w)), 0.0);
    };
    IntegrandSpec spec;
    spec.right_singularity = 0.75; // conservative compression of slow decay
    spec.initial_panels = 4;
    return adaptive_integrate(g, 0.0, 1.0, tol, spec);
}

InnerProductResult inner_product_detailed(const Integrand& f, const Integrand& g,
                                          const KernelFamily& family, const Tolerance& tol,
                                          const IntegrandSpec& spec) {
    Integrand prod = [&f, &g, &family](Real x) -> Cplx {
        return f(x) * std::conj(g(x)) * Cplx(family.measure_weight(x), 0.0);
    };

    // Expand the truncation radius until a dense probe shows the integrand
    // below the Gaussian-tail budget abs_tol/10 across a whole trailing block.
    const Real budget = tol.abs_tol / 10.0;
    const bool two_sided = !family.half_line();
    Real X = 4.0;
    Real peak = 1e-30;
    const Real step = 0.25;
    auto block_quiet = [&](Real lo, Real hi) {
        Real m = 0.0;
        const int samples = static_cast<int>((hi - lo) / step) + 1;
        for (int i = 0; i < samples; ++i) {
            const Real x = lo + i * step;
            const Real xa = two_sided ? x : std::max(x, 1e-12);
            m = std::max(m, std::abs(prod(xa)));
            if (two_sided) m = std::max(m, std::abs(prod(-xa)));
        }
        peak = std::max(peak, m);
        return m;
    };
    while (X < 120.0) {
        const Real tail = block_quiet(X, X + 4.0);
        if (tail * 16.0 < budget) break; // block mass bound: sup * width * margin
        X += 4.0;
    }
    X += 4.0;

    const Real lo = two_sided ? -X : 0.0;
    IntegrandSpec s = spec;
    if (s.initial_panels <= 1) s.initial_panels = static_cast<int>((X - lo) / 0.4) + 4;
    QuadratureResult q = adaptive_integrate(prod, lo, X, tol, s);
    return {q, X};
}

Cplx inner_product(const Integrand& f, const Integrand& g, const KernelFamily& family,
                   const Tolerance& tol, const IntegrandSpec& spec) {
    return inner_product_detailed(f, g, family, tol, spec).quad.value;
}

} // namespace specmult
