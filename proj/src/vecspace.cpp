#include "specmult/vecspace.hpp"

#include <cmath>

namespace specmult {

Real coordinate_norm(const CoordinateSpace& space, const Eigen::VectorXcd& v) {
    if (v.size() != space.n) throw std::invalid_argument("coordinate_norm: dimension mismatch");
    if (std::isinf(space.q)) return v.cwiseAbs().maxCoeff();
    Real acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), space.q);
    return std::pow(acc, 1.0 / space.q);
}

VectorGridFunction::VectorGridFunction(Vector n, Eigen::MatrixXcd v, Domain d)
    : nodes(std::move(n)), values(std::move(v)), domain(d) {
    if (nodes.size() != values.cols())
        throw std::invalid_argument("VectorGridFunction: nodes/columns mismatch");
    if (values.rows() < 1) throw std::invalid_argument("VectorGridFunction: empty coordinates");
}

GridFunction VectorGridFunction::coordinate(int i) const {
    if (i < 0 || i >= dim()) throw std::out_of_range("VectorGridFunction: coordinate index");
    return GridFunction(nodes, values.row(i).array().transpose(), domain);
}

Real bochner_lp_norm(const BochnerNorm& bn, const VectorGridFunction& f,
                     const KernelFamily& family) {
    if (f.dim() != bn.space.n) throw std::invalid_argument("bochner_lp_norm: dimension mismatch");
    // reduce to the scalar grid norm of x -> |f(x)|_q
    CVector pointwise(f.nodes.size());
    for (Eigen::Index j = 0; j < f.nodes.size(); ++j)
        pointwise[j] = Cplx(coordinate_norm(bn.space, f.values.col(j)), 0.0);
    return grid_lp_norm(GridFunction(f.nodes, pointwise, f.domain), bn.p, family);
}

VectorGridFunction vector_apply_spectral(const KernelFamily& family, const MultiplierSymbol& s,
                                         const VectorGridFunction& f,
                                         const SpectralTruncation& trunc, const Tolerance& tol) {
    Eigen::MatrixXcd out(f.values.rows(), f.values.cols());
    for (int i = 0; i < f.dim(); ++i) {
        GridFunction gi;
        try {
            gi = spectral_apply(family, s, f.coordinate(i), trunc, tol);
        } catch (const std::exception& e) {
            throw std::runtime_error("vector_apply: coordinate " + std::to_string(i) + ": " +
                                     e.what());
        }
        out.row(i) = gi.values.matrix().transpose();
    }
    return VectorGridFunction(f.nodes, out, f.domain);
}

Eigen::VectorXcd vector_pv_apply(const KernelFamily& family, const MultiplierSymbol& s,
                                 const VectorGridFunction& f, Real x,
                                 const std::vector<Real>& schedule, Real convergence_tol,
                                 const Tolerance& tol) {
    Eigen::VectorXcd out(f.dim());
    for (int i = 0; i < f.dim(); ++i) {
        try {
            out[i] = pv_apply(family, s, f.coordinate(i), x, schedule, convergence_tol, tol).value;
        } catch (const std::exception& e) {
            throw std::runtime_error("vector_pv_apply: coordinate " + std::to_string(i) + ": " +
                                     e.what());
        }
    }
    return out;
}

std::vector<ProbeRow> gamma_norm_probe(const KernelFamily& family, Real p,
                                       const CoordinateSpace& space,
                                       const std::vector<Real>& gammas,
                                       const std::vector<VectorGridFunction>& corpus,
                                       const SpectralTruncation& trunc, const Tolerance& tol) {
    if (corpus.empty()) throw std::invalid_argument("gamma_norm_probe: empty corpus");
    BochnerNorm bn(p, space);
    std::vector<ProbeRow> rows;
    for (Real g : gammas) {
        const MultiplierSymbol s = symbol_imaginary(g);
        for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
            const Real denom = bochner_lp_norm(bn, corpus[i], family);
            VectorGridFunction img = g == 0.0
                                         ? corpus[i]
                                         : vector_apply_spectral(family, s, corpus[i], trunc, tol);
            const Real num = bochner_lp_norm(bn, img, family);
            rows.push_back({g, i, num / denom});
        }
    }
    return rows;
}

} // namespace specmult
