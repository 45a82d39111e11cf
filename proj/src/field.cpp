#include "dipgpe/field.hpp"

#include <cmath>

namespace dipgpe {

bool all_finite(const ComplexField& f) {
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double sup_norm(const ComplexField& f) {
    double m = 0.0;
    for (const cplx& v : f.values) {
        double a = std::abs(v);
        if (a > m) m = a;
    }
    return m;
}

} // namespace dipgpe
