#include "maass/rational_fn.hpp"

#include <stdexcept>

namespace maass {

RationalK::RationalK(PolyK num, PolyK den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalK::normalize() {
    if (num_.is_zero()) {
        den_ = PolyK(Rational(1));
        return;
    }
    PolyK g = PolyK::gcd(num_, den_);
    if (g.degree() > 0) {
        PolyK q, r;
        PolyK::divmod(num_, g, q, r);
        num_ = q;
        PolyK::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RationalK::eval(const Rational& k) const {
    Rational d = den_.eval(k);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole, k = " + to_string(k));
    return num_.eval(k) / d;
}

RationalK RationalK::operator-() const {
    RationalK r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalK RationalK::operator+(const RationalK& o) const {
    return RationalK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalK RationalK::operator-(const RationalK& o) const {
    return RationalK(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalK RationalK::operator*(const RationalK& o) const {
    // cross-cancel before multiplying; the factors are then pairwise coprime
    PolyK g1 = PolyK::gcd(num_, o.den_);
    PolyK g2 = PolyK::gcd(o.num_, den_);
    PolyK na = num_, da = den_, nb = o.num_, db = o.den_;
    PolyK q, r;
    if (g1.degree() > 0) {
        PolyK::divmod(na, g1, q, r);
        na = q;
        PolyK::divmod(db, g1, q, r);
        db = q;
    }
    if (g2.degree() > 0) {
        PolyK::divmod(nb, g2, q, r);
        nb = q;
        PolyK::divmod(da, g2, q, r);
        da = q;
    }
    RationalK out;
    out.num_ = na * nb;
    out.den_ = da * db;
    if (out.num_.is_zero()) {
        out.den_ = PolyK(Rational(1));
        return out;
    }
    Rational lead = out.den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        out.num_ = out.num_.scaled(inv);
        out.den_ = out.den_.scaled(inv);
    }
    return out;
}

RationalK RationalK::operator/(const RationalK& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalK(num_ * o.den_, den_ * o.num_);
}

std::string RationalK::str() const {
    if (den_ == PolyK(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace maass
