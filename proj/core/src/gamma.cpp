#include "dunkl/gamma.hpp"

#include <cmath>
#include <numbers>

namespace dunkl {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

} // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
    using std::numbers::pi;
    if (z.imag() == 0.0 && z.real() > 0.0) return {std::tgamma(z.real()), 0.0};
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace dunkl
