#pragma once

#include <complex>

namespace dunkl {

// Gamma function for complex argument (Lanczos approximation; reflection for
// Re z < 1/2). Real positive arguments dispatch to std::tgamma.
std::complex<double> gamma_complex(std::complex<double> z);

} // namespace dunkl
