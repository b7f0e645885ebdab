#include "curvesim/interval.hpp"

namespace curvesim {

std::string to_string(const ParamInterval& iv) {
    std::string a = iv.lo ? to_string(*iv.lo) : "-inf";
    std::string b = iv.hi ? to_string(*iv.hi) : "inf";
    return "[" + a + ", " + b + "]";
}

RatInterval eval_interval(const PolyQ& p, const RatInterval& x) {
    RatInterval acc(Rational(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x + RatInterval(p.coeff(i));
    }
    return acc;
}

}  // namespace curvesim
