#include "curvesim/ratfunc.hpp"

namespace curvesim {

PolyQ real_part(const PolyG& p) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).re);
    return PolyQ::from_coeffs(std::move(c));
}

PolyQ imag_part(const PolyG& p) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).im);
    return PolyQ::from_coeffs(std::move(c));
}

std::pair<RatFuncQ, RatFuncQ> split_real_imag(const RatFuncG& f) {
    // num/den = num*conj(den) / (den*conj(den)); the new denominator is real
    PolyG n = f.num() * conj(f.den());
    PolyG d = f.den() * conj(f.den());
    PolyQ dr = real_part(d);
    return {RatFuncQ(real_part(n), dr), RatFuncQ(imag_part(n), dr)};
}

RatFuncG join_real_imag(const RatFuncQ& re, const RatFuncQ& im) {
    RatFuncG i_im = to_gaussian(im) * RatFuncG(PolyG(GaussianRational::i_unit()));
    return to_gaussian(re) + i_im;
}

}  // namespace curvesim
