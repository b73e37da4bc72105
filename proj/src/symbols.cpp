#include "specmult/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace specmult {

MultiplierSymbol symbol_one() {
    MultiplierSymbol s;
    s.name = "one";
    s.phi = [](Real) { return Cplx(1.0, 0.0); };
    s.phi_sup = 1.0;
    s.phi_zero_limit = Cplx(1.0, 0.0);
    return s;
}

MultiplierSymbol symbol_expdecay() {
    MultiplierSymbol s;
    s.name = "expdecay";
    s.phi = [](Real t) { return Cplx(std::exp(-t), 0.0); };
    s.phi_sup = 1.0;
    s.phi_zero_limit = Cplx(1.0, 0.0);
    return s;
}

MultiplierSymbol symbol_indicator(Real a) {
    if (!(a > 0.0)) throw std::invalid_argument("symbol_indicator: requires a > 0");
    MultiplierSymbol s;
    s.name = "indicator:" + std::to_string(a);
    s.phi = [a](Real t) { return Cplx(t < a ? 1.0 : 0.0, 0.0); };
    s.phi_sup = 1.0;
    s.phi_zero_limit = Cplx(1.0, 0.0);
    s.breakpoints = {a};
    return s;
}

MultiplierSymbol symbol_imaginary(Real gamma) {
    MultiplierSymbol s;
    s.name = "imaginary:" + std::to_string(gamma);
    if (gamma == 0.0) {
        s.phi = [](Real) { return Cplx(1.0, 0.0); };
        s.phi_sup = 1.0;
        s.phi_zero_limit = Cplx(1.0, 0.0);
        return s;
    }
    const Cplx inv_gamma_factor = 1.0 / gamma_complex(Cplx(1.0, -gamma));
    s.phi = [gamma, inv_gamma_factor](Real t) {
        // t^{-i gamma} = exp(-i gamma log t)
        const Real a = -gamma * std::log(t);
        return inv_gamma_factor * Cplx(std::cos(a), std::sin(a));
    };
    s.phi_sup = std::abs(inv_gamma_factor);
    return s;
}

MultiplierSymbol parse_symbol(const std::string& spec) {
    if (spec == "one") return symbol_one();
    if (spec == "expdecay") return symbol_expdecay();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        std::size_t used = 0;
        Real v;
        try {
            v = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_symbol: bad numeric argument in '" + spec + "'");
        }
        if (used != arg.size())
            throw std::invalid_argument("parse_symbol: bad numeric argument in '" + spec + "'");
        if (head == "indicator") return symbol_indicator(v);
        if (head == "imaginary") return symbol_imaginary(v);
    }
    throw std::invalid_argument("parse_symbol: unknown symbol '" + spec + "'");
}

} // namespace specmult
