#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specmult/specfun.hpp"

namespace specmult {

/// Bounded function phi on (0, infinity) generating a Laplace-transform-type
/// multiplier m(lambda) = lambda * integral of e^{-lambda t} phi(t) dt.
struct MultiplierSymbol {
    std::string name;
    std::function<Cplx(Real)> phi;
    Real phi_sup = 1.0;
    std::optional<Cplx> phi_zero_limit;
    std::vector<Real> breakpoints; // jump points of phi, if any

    Cplx operator()(Real t) const { return phi(t); }
};

/// phi == 1 (the identity multiplier, m == 1).
MultiplierSymbol symbol_one();

/// phi(t) = e^{-t}; m(lambda) = lambda / (lambda + 1).
MultiplierSymbol symbol_expdecay();

/// phi = 1 on (0, a), 0 afterwards; m(lambda) = 1 - e^{-a lambda}.
MultiplierSymbol symbol_indicator(Real a);

/// phi_gamma(t) = t^{-i gamma} / Gamma(1 - i gamma); m(lambda) = lambda^{i gamma}.
MultiplierSymbol symbol_imaginary(Real gamma);

/// Parses "one" | "expdecay" | "indicator:<a>" | "imaginary:<gamma>".
MultiplierSymbol parse_symbol(const std::string& spec);

} // namespace specmult
