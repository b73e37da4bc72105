#pragma once

#include <cstdint>

#include "specmult/vecspace.hpp"

namespace specmult {

/// C-infinity bump supported on (c - w, c + w), peak value 1 at c.
struct SmoothBump {
    Real center = 0.0;
    Real width = 1.0;

    Real operator()(Real x) const {
        const Real u = (x - center) / width;
        if (std::abs(u) >= 1.0) return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - u * u));
    }
};

/// The three default bumps per family (supports inside the domain).
std::vector<SmoothBump> default_bumps(const KernelFamily& family);

/// Sampled bump with grid padding and the given node count.
GridFunction bump_grid(const SmoothBump& b, Domain domain, int nodes = 241);

/// Five comparison points inside each bump's support.
std::vector<Real> default_points(const SmoothBump& b);

/// Deterministic vector-valued corpus: tensor bumps b(x) e_i plus mixed bumps
/// with oscillatory coordinates, drawn from a fixed seed.
std::vector<VectorGridFunction> vector_corpus(const KernelFamily& family, int dim, int count,
                                              std::uint32_t seed, int nodes = 201);

} // namespace specmult
