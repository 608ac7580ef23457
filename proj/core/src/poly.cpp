#include "maass/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace maass {

PolyK::PolyK(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

PolyK::PolyK(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyK PolyK::variable() { return PolyK(std::vector<Rational>{Rational(0), Rational(1)}); }

PolyK PolyK::affine(const Rational& a, const Rational& b) {
    return PolyK(std::vector<Rational>{a, b});
}

void PolyK::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& PolyK::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const Rational& PolyK::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational PolyK::eval(const Rational& k) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

PolyK PolyK::operator-() const {
    PolyK r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyK PolyK::operator+(const PolyK& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return PolyK(std::move(out));
}

PolyK PolyK::operator-(const PolyK& o) const { return *this + (-o); }

PolyK PolyK::operator*(const PolyK& o) const {
    if (c_.empty() || o.c_.empty()) return PolyK();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return PolyK(std::move(out));
}

PolyK PolyK::scaled(const Rational& s) const {
    if (s == 0) return PolyK();
    PolyK r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

PolyK PolyK::monic() const {
    if (c_.empty()) return PolyK();
    return scaled(Rational(1) / leading());
}

void PolyK::divmod(const PolyK& a, const PolyK& d, PolyK& q, PolyK& r) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    int dd = d.degree();
    if (a.degree() >= dd) quo.assign(static_cast<size_t>(a.degree() - dd) + 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        int shift = static_cast<int>(rem.size()) - 1 - dd;
        Rational f = rem.back() / d.leading();
        quo[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(i + shift)] -= f * d.c_[static_cast<size_t>(i)];
        rem.pop_back();
    }
    q = PolyK(std::move(quo));
    r = PolyK(std::move(rem));
}

namespace {

// Primitive integer image of a rational-coefficient polynomial (ascending).
std::vector<mpz_class> primitive_z(const PolyK& p) {
    std::vector<mpz_class> z;
    if (p.is_zero()) return z;
    mpz_class lcm_den(1);
    for (int i = 0; i <= p.degree(); ++i) {
        mpz_class d = p.coeff(i).get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    z.resize(static_cast<size_t>(p.degree()) + 1);
    mpz_class content(0);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(i);
        z[static_cast<size_t>(i)] = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[static_cast<size_t>(i)].get_mpz_t());
    }
    if (content != 0)
        for (auto& c : z) c /= content;
    if (z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

void strip_z(std::vector<mpz_class>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive_z(std::vector<mpz_class>& a) {
    strip_z(a);
    if (a.empty()) return;
    mpz_class content(0);
    for (const auto& c : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0 && content != 1)
        for (auto& c : a) c /= content;
    if (a.back() < 0)
        for (auto& c : a) c = -c;
}

// Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lc = b.back();
    long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long shift = static_cast<long>(a.size()) - 1 - db;
        mpz_class f = a.back();
        for (auto& c : a) c *= lc;
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
        strip_z(a);
        // re-primitivize occasionally to tame growth
        if (!a.empty() && static_cast<long>(a.size()) - 1 >= db) make_primitive_z(a);
    }
    return a;
}

}  // namespace

PolyK PolyK::gcd(PolyK a, PolyK b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return PolyK(Rational(1));
    std::vector<mpz_class> A = primitive_z(a), B = primitive_z(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        if (B.size() == 1) return PolyK(Rational(1));
        std::vector<mpz_class> R = pseudo_rem(A, B);
        make_primitive_z(R);
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<Rational> out;
    out.reserve(A.size());
    for (const auto& c : A) out.emplace_back(c);
    return PolyK(std::move(out)).monic();
}

std::string PolyK::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        Rational a = first ? c : Rational(abs(c.get_num()), c.get_den());
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace maass
