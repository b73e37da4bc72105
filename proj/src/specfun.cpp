#include "specmult/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace specmult {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

void require_finite(Real x, const char* what) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": non-finite argument");
}

} // namespace

HermiteBasis::HermiteBasis(int K) : max_index(K) {
    if (K < 0) throw std::domain_error("HermiteBasis: max_index must be >= 0");
}

Vector HermiteBasis::eval(Real x) const {
    require_finite(x, "HermiteBasis::eval");
    const int K = max_index;
    Vector h(K + 1);
    const Real h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    h[0] = h0;
    if (K == 0) return h;
    h[1] = x * std::sqrt(2.0) * h0;
    for (int k = 1; k < K; ++k) {
        h[k + 1] = x * std::sqrt(2.0 / (k + 1.0)) * h[k] - std::sqrt(k / (k + 1.0)) * h[k - 1];
    }
    return h;
}

Vector hermite_functions(int K, Real x) { return HermiteBasis(K).eval(x); }

LaguerreBasis::LaguerreBasis(Real a, int K) : alpha(a), max_index(K) {
    if (!(a > -0.5)) throw std::domain_error("LaguerreBasis: alpha must be > -1/2");
    if (K < 0) throw std::domain_error("LaguerreBasis: max_index must be >= 0");
}

Vector LaguerreBasis::eval(Real x) const {
    if (!(x > 0.0)) throw std::domain_error("LaguerreBasis::eval: x must be > 0");
    require_finite(x, "LaguerreBasis::eval");
    const int K = max_index;
    const Real a = alpha;
    const Real z = x * x;
    // ell_k = (2 k!/Gamma(k+a+1))^{1/2} L_k^a(z); the prefactor ratio is folded
    // into the recurrence so only Gamma(a+1) is ever exponentiated.
    Vector ell(K + 1);
    ell[0] = std::sqrt(2.0 / std::exp(std::lgamma(a + 1.0)));
    if (K >= 1) {
        ell[1] = (1.0 + a - z) / std::sqrt(1.0 + a) * ell[0];
    }
    for (int k = 1; k < K; ++k) {
        const Real c1 = (2.0 * k + 1.0 + a - z) / std::sqrt((k + 1.0) * (k + a + 1.0));
        const Real c2 = std::sqrt(k * (k + a) / ((k + 1.0) * (k + a + 1.0)));
        ell[k + 1] = c1 * ell[k] - c2 * ell[k - 1];
    }
    const Real envelope = std::exp(-0.5 * z) * std::pow(x, a + 0.5);
    return ell * envelope;
}

Vector laguerre_functions(const LaguerreBasis& basis, Real x) { return basis.eval(x); }

namespace {

// Power series sum_{j>=0} (z/2)^{a+2j} / (j! Gamma(j+a+1)), scaled by e^{-z}.
// Safe without intermediate scaling for z <= ~600 because the sum itself
// stays within double range; used below the crossover where z <= 35.
Real bessel_series_scaled(Real alpha, Real z) {
    const Real half = 0.5 * z;
    Real term = std::exp(alpha * std::log(half) - std::lgamma(alpha + 1.0));
    if (z == 0.0) return (alpha == 0.0) ? 1.0 : 0.0;
    Real sum = term;
    const Real q = half * half;
    for (int j = 1; j < 400; ++j) {
        term *= q / (j * (j + alpha));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum * std::exp(-z);
}

// Same series with every term assembled in log space relative to e^{z}; valid
// for any z where exp(log term - z) is representable (z large).
Real bessel_series_log_scaled(Real alpha, Real z) {
    const Real lh = std::log(0.5 * z);
    const int jpeak = static_cast<int>(0.5 * z);
    const int width = static_cast<int>(20.0 * std::sqrt(std::max(1.0, 0.5 * z))) + 40;
    const int jlo = std::max(0, jpeak - width);
    const int jhi = jpeak + width;
    Real sum = 0.0;
    for (int j = jlo; j <= jhi; ++j) {
        const Real lt = (alpha + 2.0 * j) * lh - std::lgamma(j + 1.0) - std::lgamma(j + alpha + 1.0);
        sum += std::exp(lt - z);
    }
    return sum;
}

// Large-argument asymptotic: e^{-z} I_a(z) ~ (2 pi z)^{-1/2} sum_k a_k with
// a_k = prod_{j<=k} -(mu - (2j-1)^2) / (j 8z), mu = 4 a^2.  Summed to the
// smallest term; returns NaN when the tail stalls above the accuracy target.
Real bessel_asymptotic_scaled(Real alpha, Real z) {
    const Real mu = 4.0 * alpha * alpha;
    Real term = 1.0;
    Real sum = 1.0;
    Real prev = std::numeric_limits<Real>::max();
    for (int k = 1; k <= 40; ++k) {
        const Real odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (k * 8.0 * z);
        if (std::abs(term) >= prev) break; // divergent tail reached
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17) break;
    }
    if (prev > 1e-12) return std::numeric_limits<Real>::quiet_NaN();
    return sum / std::sqrt(2.0 * kPi * z);
}

} // namespace

Real bessel_i_scaled(Real alpha, Real z) {
    if (!(alpha > -0.5)) throw std::domain_error("bessel_i_scaled: alpha must be > -1/2");
    if (z < 0.0) throw std::domain_error("bessel_i_scaled: z must be >= 0");
    require_finite(z, "bessel_i_scaled");
    if (z <= 30.0) return bessel_series_scaled(alpha, z);
    const Real a = bessel_asymptotic_scaled(alpha, z);
    if (std::isnan(a)) return bessel_series_log_scaled(alpha, z);
    return a;
}

Real bessel_i_scaled_diff(Real alpha, Real z) {
    if (!(alpha > -0.5)) throw std::domain_error("bessel_i_scaled_diff: alpha must be > -1/2");
    if (z < 0.0) throw std::domain_error("bessel_i_scaled_diff: z must be >= 0");
    require_finite(z, "bessel_i_scaled_diff");
    if (z == 0.0) return bessel_series_scaled(alpha, 0.0);
    if (z <= 30.0) {
        // termwise difference of the two power series:
        //   sum_j (z/2)^{a+2j} / (j! Gamma(j+a+2)) * (j+a+1 - z/2)
        const Real half = 0.5 * z;
        Real base = std::exp(alpha * std::log(half) - std::lgamma(alpha + 2.0));
        Real sum = base * (alpha + 1.0 - half);
        Real abs_sum = std::abs(sum);
        const Real q = half * half;
        for (int j = 1; j < 400; ++j) {
            base *= q / (j * (j + alpha + 1.0));
            const Real term = base * (j + alpha + 1.0 - half);
            sum += term;
            abs_sum += std::abs(term);
            if (std::abs(base) * (j + alpha + 1.0 + half) < abs_sum * 1e-18) break;
        }
        return sum * std::exp(-z);
    }
    // difference of the two asymptotic series; each coefficient difference is
    // carried as a divided-difference product, so no subtractive cancellation:
    //   P_k(mu) - P_k(mu') = (mu - mu') sum_i prod_{j<i}(mu - o_j) prod_{j>i}(mu' - o_j)
    const Real mu = 4.0 * alpha * alpha;
    const Real mup = 4.0 * (alpha + 1.0) * (alpha + 1.0);
    const Real dmu = mu - mup; // -(8 alpha + 4)
    Real pa = 1.0; // running product for the lower order
    Real dd = 0.0; // P_k(mu) - P_k(mu')
    Real denom = 1.0;
    Real sum = 0.0;
    Real prev = std::numeric_limits<Real>::max();
    for (int k = 1; k <= 40; ++k) {
        const Real odd = 2.0 * k - 1.0;
        const Real fa = mu - odd * odd;
        const Real fb = mup - odd * odd;
        dd = dd * fb + pa * dmu; // divided-difference update before extending the product
        pa *= fa;
        denom *= -(k * 8.0 * z); // sign folds the (-1)^k of the series
        const Real term = dd / denom;
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-20 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * kPi * z);
}

namespace {

// Lanczos coefficients, g = 607/128, n = 15 (Godfrey's table; see README).
constexpr Real kLanczosG = 4.7421875;
constexpr Real kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

} // namespace

Cplx log_gamma_complex(Cplx z) {
    if (!(z.real() > 0.0)) throw std::domain_error("log_gamma_complex: requires Re z > 0");
    Cplx sum = kLanczos[0];
    for (int j = 1; j < 15; ++j) sum += kLanczos[j] / (z + static_cast<Real>(j - 1));
    const Cplx base = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(base) - base + std::log(std::sqrt(2.0 * kPi) * sum);
}

Cplx gamma_complex(Cplx z) { return std::exp(log_gamma_complex(z)); }

namespace detail {
Real bessel_series_branch(Real alpha, Real z) { return bessel_series_scaled(alpha, z); }
Real bessel_asymptotic_branch(Real alpha, Real z) { return bessel_asymptotic_scaled(alpha, z); }
} // namespace detail

} // namespace specmult
