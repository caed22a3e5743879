#include "hopfcalc/numbers.hpp"

namespace hopfcalc {

std::string to_string(const GaussianRational& z) {
    if (z.is_zero())
        return "0";
    std::string out;
    if (z.re != 0) {
        out += z.re.get_str();
        if (z.im != 0) {
            Rational m = abs(z.im);
            out += (z.im < 0) ? "-" : "+";
            if (m != 1)
                out += m.get_str();
            out += "i";
        }
        return out;
    }
    Rational m = abs(z.im);
    if (z.im < 0)
        out += "-";
    if (m != 1)
        out += m.get_str();
    out += "i";
    return out;
}

} // namespace hopfcalc
