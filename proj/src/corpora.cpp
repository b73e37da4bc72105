#include "specmult/corpora.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace specmult {

std::vector<SmoothBump> default_bumps(const KernelFamily& family) {
    if (family.half_line()) {
        return {SmoothBump{2.0, 1.2}, SmoothBump{1.5, 0.8}, SmoothBump{3.0, 1.5}};
    }
    return {SmoothBump{0.0, 1.5}, SmoothBump{0.8, 1.2}, SmoothBump{-1.2, 0.9}};
}

GridFunction bump_grid(const SmoothBump& b, Domain domain, int nodes) {
    Real lo = b.center - b.width - 0.1;
    Real hi = b.center + b.width + 0.1;
    if (domain == Domain::HalfLine) lo = std::max(lo, 1e-3);
    Vector g = uniform_grid(lo, hi, nodes);
    CVector v(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) v[i] = Cplx(b(g[i]), 0.0);
    return GridFunction(g, v, domain);
}

std::vector<Real> default_points(const SmoothBump& b) {
    const Real c = b.center, w = b.width;
    return {c - 0.5 * w, c - 0.2 * w, c, c + 0.3 * w, c + 0.6 * w};
}

std::vector<VectorGridFunction> vector_corpus(const KernelFamily& family, int dim, int count,
                                              std::uint32_t seed, int nodes) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<Real> unit(0.0, 1.0);
    const Domain dom = domain_of(family);
    const auto bumps = default_bumps(family);

    std::vector<VectorGridFunction> corpus;
    for (int c = 0; c < count; ++c) {
        const SmoothBump& base = bumps[c % bumps.size()];
        GridFunction g = bump_grid(base, dom, nodes);
        Eigen::MatrixXcd vals(dim, g.nodes.size());
        if (c % 2 == 0) {
            // tensor bump on one coordinate, zero elsewhere
            const int slot = static_cast<int>(unit(rng) * dim) % dim;
            vals.setZero();
            vals.row(slot) = g.values.matrix().transpose();
        } else {
            // oscillatory coordinates with random frequencies and phases
            for (int i = 0; i < dim; ++i) {
                const Real freq = 1.0 + 3.0 * unit(rng);
                const Real phase = 2.0 * std::numbers::pi_v<Real> * unit(rng);
                for (Eigen::Index j = 0; j < g.nodes.size(); ++j) {
                    const Real x = g.nodes[j];
                    vals(i, j) = g.values[j] * Cplx(std::cos(freq * x + phase),
                                                    std::sin(freq * x + phase));
                }
            }
        }
        corpus.emplace_back(g.nodes, vals, dom);
    }
    return corpus;
}

} // namespace specmult
