#include "maass/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace maass {

LaurentSeries LaurentSeries::zero(char var) {
    LaurentSeries s;
    s.var_ = var;
    return s;
}

LaurentSeries LaurentSeries::zero_truncated(char var, long known) {
    LaurentSeries s;
    s.var_ = var;
    s.exact_ = false;
    s.known_ = known;
    return s;
}

LaurentSeries LaurentSeries::monomial(char var, SymbolicExponent pre, long shift, RationalK coeff) {
    LaurentSeries s;
    s.var_ = var;
    s.pre_ = std::move(pre);
    s.first_ = shift;
    if (!coeff.is_zero()) s.c_.push_back(std::move(coeff));
    s.exact_ = true;
    s.known_ = 0;
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(char var, SymbolicExponent pre, long first,
                                         std::vector<RationalK> coeffs, bool exact, long known) {
    LaurentSeries s;
    s.var_ = var;
    s.pre_ = std::move(pre);
    s.first_ = first;
    s.c_ = std::move(coeffs);
    s.exact_ = exact;
    s.known_ = exact ? 0 : known;
    if (!exact && !s.c_.empty()) {
        long want = known - first + 1;
        if (want < static_cast<long>(s.c_.size()))
            throw std::invalid_argument("laurent window inconsistent with coefficient count");
        s.c_.resize(static_cast<size_t>(want));  // zero-pad the declared window
    }
    s.normalize();
    return s;
}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        first_ += static_cast<long>(lead);
    }
    if (exact_) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    if (c_.empty()) first_ = 0;
}

void LaurentSeries::check_var(const LaurentSeries& o) const {
    if (var_ != o.var_)
        throw std::invalid_argument(std::string("series variable mismatch: ") + var_ + " vs " + o.var_);
}

// Integer lattice offset aligning o's prefactor with ours; throws when the
// prefactors do not differ by an integer.
long LaurentSeries::rebase_delta(const LaurentSeries& o) const {
    SymbolicExponent d = o.pre_ - pre_;
    if (d.kcoef != 0 || !is_integer(d.base))
        throw std::invalid_argument("incompatible series prefactors: " + pre_.str() + " vs " +
                                    o.pre_.str());
    return d.base.get_num().get_si();
}

const RationalK& LaurentSeries::coeff(long rel) const {
    static const RationalK zero{};
    if (!exact_ && rel > known_)
        throw std::out_of_range("coefficient beyond known truncation window");
    if (rel < first_ || rel > last_stored()) return zero;
    return c_[static_cast<size_t>(rel - first_)];
}

LaurentSeries LaurentSeries::operator-() const { return scaled(RationalK(-1)); }

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check_var(o);
    if (is_zero() && exact_) return o;
    if (o.is_zero() && o.exact_) return *this;
    long delta = rebase_delta(o);  // o exponents shift by +delta on our lattice
    bool exact = exact_ && o.exact_;
    long known = 0;
    if (!exact) {
        known = std::numeric_limits<long>::max();
        if (!exact_) known = std::min(known, known_);
        if (!o.exact_) known = std::min(known, o.known_ + delta);
    }
    long lo = std::min(c_.empty() ? 0 : first_, o.c_.empty() ? 0 : o.first_ + delta);
    long hi;
    if (exact) {
        hi = std::max(c_.empty() ? lo - 1 : last_stored(),
                      o.c_.empty() ? lo - 1 : o.last_stored() + delta);
    } else {
        hi = known;
    }
    std::vector<RationalK> out;
    if (hi >= lo) {
        out.reserve(static_cast<size_t>(hi - lo + 1));
        for (long t = lo; t <= hi; ++t) {
            RationalK a = (t >= first_ && t <= last_stored()) ? c_[static_cast<size_t>(t - first_)]
                                                              : RationalK();
            long to = t - delta;
            if (to >= o.first_ && to <= o.last_stored()) a += o.c_[static_cast<size_t>(to - o.first_)];
            out.push_back(std::move(a));
        }
    }
    return from_coeffs(var_, pre_, lo, std::move(out), exact, exact ? 0 : known);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::scaled(const RationalK& s) const {
    LaurentSeries r(*this);
    if (s.is_zero()) {
        r.c_.clear();
        r.first_ = 0;
        return r;
    }
    for (auto& c : r.c_) c *= s;
    return r;
}

LaurentSeries LaurentSeries::shifted(long dexp, const RationalK& s) const {
    LaurentSeries r = scaled(s);
    r.first_ += dexp;
    if (!r.exact_) r.known_ += dexp;
    return r;
}

LaurentSeries LaurentSeries::prefactor_shifted(const SymbolicExponent& d) const {
    LaurentSeries r(*this);
    r.pre_ = r.pre_ + d;
    return r;
}

LaurentSeries LaurentSeries::mul(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_var(b);
    SymbolicExponent pre = a.pre_ + b.pre_;
    if (a.is_zero() || b.is_zero()) {
        // Zero with an honest window: an exact zero factor wipes everything.
        if ((a.is_zero() && a.exact_) || (b.is_zero() && b.exact_)) return zero(a.var_);
        long known = std::numeric_limits<long>::max();
        if (!a.exact_) known = std::min(known, a.known_ + (b.is_zero() ? 0 : b.first_));
        if (!b.exact_) known = std::min(known, b.known_ + (a.is_zero() ? 0 : a.first_));
        LaurentSeries z = zero_truncated(a.var_, known);
        z.pre_ = pre;
        return z;
    }
    bool exact = a.exact_ && b.exact_;
    long lo = a.first_ + b.first_;
    long hi;
    long known = 0;
    if (exact) {
        hi = a.last_stored() + b.last_stored();
    } else {
        known = std::numeric_limits<long>::max();
        if (!a.exact_) known = std::min(known, a.known_ + b.first_);
        if (!b.exact_) known = std::min(known, b.known_ + a.first_);
        hi = std::min(known, a.last_stored() + b.last_stored());
    }
    std::vector<RationalK> out(static_cast<size_t>(std::max<long>(hi - lo + 1, 0)));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            long t = a.first_ + static_cast<long>(i) + b.first_ + static_cast<long>(j);
            if (t > hi) break;
            out[static_cast<size_t>(t - lo)] += a.c_[i] * b.c_[j];
        }
    }
    return from_coeffs(a.var_, pre, lo, std::move(out), exact, exact ? 0 : known);
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r;
    r.var_ = var_;
    r.pre_ = pre_;
    r.exact_ = exact_;
    r.known_ = exact_ ? 0 : known_ - 1;
    r.first_ = first_ - 1;
    r.c_.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        RationalK e = RationalK::affine(pre_.base + Rational(first_ + static_cast<long>(i)), pre_.kcoef);
        r.c_.push_back(c_[i] * e);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::truncated(long new_known) const {
    LaurentSeries r(*this);
    if (r.exact_) {
        r.exact_ = false;
        r.known_ = new_known;
        if (r.last_stored() > new_known || r.c_.empty()) {
            long keep = new_known - r.first_ + 1;
            if (keep < 0) keep = 0;
            r.c_.resize(static_cast<size_t>(std::min<long>(keep, static_cast<long>(r.c_.size()))));
        } else if (r.last_stored() < new_known) {
            r.c_.resize(static_cast<size_t>(new_known - r.first_ + 1));
        }
        r.normalize();
        return r;
    }
    if (new_known > known_) throw std::invalid_argument("cannot extend a truncated series");
    r.known_ = new_known;
    if (!r.c_.empty() && r.last_stored() > new_known) {
        long keep = new_known - r.first_ + 1;
        if (keep < 0) keep = 0;
        r.c_.resize(static_cast<size_t>(keep));
        r.normalize();
    }
    return r;
}

LaurentSeries LaurentSeries::specialized(const Rational& kval) const {
    LaurentSeries r;
    r.var_ = var_;
    r.pre_ = SymbolicExponent::constant(pre_.eval(kval));
    r.first_ = first_;
    r.exact_ = exact_;
    r.known_ = known_;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(RationalK(c.eval(kval)));
    r.normalize();
    return r;
}

double LaurentSeries::eval_double(double x, const Rational& kval) const {
    double prefac = std::pow(x, to_double(pre_.eval(kval)));
    double acc = 0.0;
    for (size_t i = 0; i < c_.size(); ++i) {
        double e = static_cast<double>(first_ + static_cast<long>(i));
        acc += to_double(c_[i].eval(kval)) * std::pow(x, e);
    }
    return prefac * acc;
}

std::string LaurentSeries::str(int max_terms) const {
    std::ostringstream os;
    if (!pre_.is_zero()) os << var_ << "^(" << pre_.str() << ") * ";
    os << "[";
    if (c_.empty()) os << "0";
    int shown = 0;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i].is_zero()) continue;
        if (shown) os << " + ";
        os << "(" << c_[i].str() << ")" << var_ << "^" << first_ + static_cast<long>(i);
        ++shown;
    }
    if (shown == max_terms) os << " + ...";
    os << "]";
    if (!exact_) os << " + O(" << var_ << "^" << known_ + 1 << ")";
    return os.str();
}

}  // namespace maass
