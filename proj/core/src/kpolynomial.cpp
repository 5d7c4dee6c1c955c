#include "dunkl/kpolynomial.hpp"

#include <sstream>

namespace dunkl {

std::string KPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t p = 0; p < c_.size(); ++p) {
        if (c_[p] == 0) continue;
        Rational a = c_[p];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        os << a;
        if (p == 1)
            os << "*k";
        else if (p > 1)
            os << "*k^" << p;
    }
    return os.str();
}

} // namespace dunkl
