#include "carcode/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carcode {

void LaurentSeries::normalize() {
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++val_;
    }
    if (static_cast<long long>(val_) + static_cast<long long>(c_.size()) > prec_)
        c_.resize(static_cast<std::size_t>(prec_ - val_));
    while (!c_.empty() && c_.back().is_zero() &&
           val_ + static_cast<int>(c_.size()) > prec_)
        c_.pop_back();
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++val_;
    }
    if (c_.empty()) val_ = prec_;
}

LaurentSeries LaurentSeries::zero_to(FieldCtxPtr ctx, int prec) {
    LaurentSeries s;
    s.ctx_ = std::move(ctx);
    s.prec_ = prec;
    s.val_ = prec;
    return s;
}

LaurentSeries LaurentSeries::monomial(const FieldElement& c, int e, int prec) {
    LaurentSeries s;
    s.ctx_ = c.ctx();
    s.prec_ = prec;
    if (c.is_zero() || e >= prec) {
        s.val_ = prec;
        return s;
    }
    s.val_ = e;
    s.c_ = {c};
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& f, int prec) {
    LaurentSeries s;
    s.ctx_ = f.ctx();
    s.prec_ = prec;
    s.val_ = 0;
    for (const auto& e : f.coeffs()) s.c_.push_back(e);
    s.normalize();
    return s;
}

int LaurentSeries::valuation() const {
    if (c_.empty())
        throw std::domain_error("valuation of a series that is zero to its known precision");
    return val_;
}

FieldElement LaurentSeries::lead() const {
    if (c_.empty())
        throw std::domain_error("leading coefficient of a series that is zero to precision");
    return c_.front();
}

FieldElement LaurentSeries::coeff(int e) const {
    if (e >= prec_)
        throw std::domain_error("series coefficient requested beyond known precision");
    if (c_.empty() || e < val_ || e >= val_ + static_cast<int>(c_.size())) return ctx_->zero();
    return c_[static_cast<std::size_t>(e - val_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (!ctx_->same(*o.ctx_)) throw std::invalid_argument("series context mismatch");
    LaurentSeries r;
    r.ctx_ = ctx_;
    r.prec_ = std::min(prec_, o.prec_);
    int lo = std::min(c_.empty() ? r.prec_ : val_, o.c_.empty() ? r.prec_ : o.val_);
    if (lo >= r.prec_) {
        r.val_ = r.prec_;
        return r;
    }
    r.val_ = lo;
    r.c_.assign(static_cast<std::size_t>(r.prec_ - lo), ctx_->zero());
    for (int e = lo; e < r.prec_; ++e) {
        FieldElement a = (e < prec_) ? coeff(e) : ctx_->zero();
        FieldElement b = (e < o.prec_) ? o.coeff(e) : ctx_->zero();
        r.c_[static_cast<std::size_t>(e - lo)] = a + b;
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& e : r.c_) e = -e;
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (!ctx_->same(*o.ctx_)) throw std::invalid_argument("series context mismatch");
    LaurentSeries r;
    r.ctx_ = ctx_;
    if (c_.empty() || o.c_.empty()) {
        // zero-to-precision times anything: product window starts at sum of
        // the best available lower bounds
        int lb1 = c_.empty() ? prec_ : val_;
        int lb2 = o.c_.empty() ? o.prec_ : o.val_;
        long long pr = std::min<long long>(
            static_cast<long long>(prec_) + lb2,
            static_cast<long long>(o.prec_) + lb1);
        r.prec_ = static_cast<int>(pr);
        r.val_ = r.prec_;
        return r;
    }
    long long pr = std::min<long long>(static_cast<long long>(prec_) + o.val_,
                                       static_cast<long long>(o.prec_) + val_);
    r.prec_ = static_cast<int>(pr);
    r.val_ = val_ + o.val_;
    std::size_t len = static_cast<std::size_t>(std::max<long long>(0, r.prec_ - r.val_));
    r.c_.assign(len, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size() && i + j < len; ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator*(const FieldElement& s) const {
    LaurentSeries r = *this;
    if (s.is_zero()) {
        r.c_.clear();
        r.val_ = r.prec_;
        return r;
    }
    for (auto& e : r.c_) e = e * s;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::inv() const {
    if (c_.empty())
        throw std::domain_error("inverting a series that is zero to its known precision");
    std::size_t terms = static_cast<std::size_t>(prec_ - val_);
    std::vector<FieldElement> u(terms, ctx_->zero());
    for (std::size_t i = 0; i < terms; ++i)
        u[i] = (i < c_.size()) ? c_[i] : ctx_->zero();
    std::vector<FieldElement> inv(terms, ctx_->zero());
    FieldElement u0inv = u[0].inv();
    inv[0] = u0inv;
    for (std::size_t k = 1; k < terms; ++k) {
        FieldElement s = ctx_->zero();
        for (std::size_t j = 1; j <= k; ++j) s = s + u[j] * inv[k - j];
        inv[k] = -(u0inv * s);
    }
    LaurentSeries r;
    r.ctx_ = ctx_;
    r.val_ = -val_;
    r.prec_ = static_cast<int>(static_cast<long long>(prec_) - 2LL * val_);
    r.c_ = std::move(inv);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::pow(int e) const {
    if (e == 0) {
        // exact 1 with this series' own precision scaled conservatively
        return LaurentSeries::monomial(ctx_->one(), 0, prec_ == 0 ? 1 : std::max(1, prec_));
    }
    LaurentSeries b = e < 0 ? inv() : *this;
    int n = e < 0 ? -e : e;
    LaurentSeries r = b;
    for (int i = 1; i < n; ++i) r = r * b;
    return r;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r;
    r.ctx_ = ctx_;
    r.prec_ = prec_ - 1;
    if (c_.empty()) {
        r.val_ = r.prec_;
        return r;
    }
    r.val_ = val_ - 1;
    r.c_.assign(c_.size(), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long long e = static_cast<long long>(val_) + static_cast<long long>(i);
        r.c_[i] = c_[i] * ctx_->from_int(e);
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner) const {
    if (!ctx_->same(*inner.ctx_)) throw std::invalid_argument("series context mismatch");
    if (inner.c_.empty() || inner.valuation() < 1)
        throw std::domain_error("composition requires inner valuation >= 1");
    int vg = inner.valuation();
    long long prec1 = static_cast<long long>(prec_) * vg;
    long long prec2 = static_cast<long long>(inner.prec_) +
                      static_cast<long long>(std::min(val_, 1) - 1) * vg;
    // conservative: error from outer truncation is O(inner^prec_), from inner
    // truncation O(s'(inner) * t^{inner.prec}), s' valuation >= (val-1)*vg
    long long pr = std::min(prec1, prec2);
    if (c_.empty()) {
        return LaurentSeries::zero_to(ctx_, static_cast<int>(std::min<long long>(pr, prec1)));
    }
    // split negative part: s = sum_{e<0} c_e t^e + nonneg part
    LaurentSeries acc = LaurentSeries::zero_to(ctx_, static_cast<int>(pr));
    // Horner on nonnegative exponents
    LaurentSeries horner = LaurentSeries::zero_to(ctx_, static_cast<int>(pr));
    int top = val_ + static_cast<int>(c_.size()) - 1;
    for (int e = top; e >= 0; --e) {
        horner = horner * inner.truncated(static_cast<int>(pr));
        FieldElement ce = (e >= val_) ? coeff(e) : ctx_->zero();
        horner = horner + LaurentSeries::monomial(ce, 0, static_cast<int>(pr));
    }
    acc = acc + horner;
    if (val_ < 0) {
        LaurentSeries gi = inner.inv();
        LaurentSeries p = gi;
        for (int e = -1; e >= val_; --e) {
            FieldElement ce = coeff(e);
            if (!ce.is_zero()) acc = acc + p * ce;
            if (e > val_) p = p * gi;
        }
    }
    return acc.truncated(static_cast<int>(pr));
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    r.val_ += k;
    r.prec_ += k;
    return r;
}

LaurentSeries LaurentSeries::truncated(int prec) const {
    LaurentSeries r = *this;
    if (prec < r.prec_) {
        r.prec_ = prec;
        r.normalize();
    }
    return r;
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        int e = val_ + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].str();
        if (e == 0) {
            os << cs;
            continue;
        }
        if (!c_[i].is_one()) os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << prec_ << ")";
    return os.str();
}

LaurentSeries eval_poly_at(const Poly& f, const LaurentSeries& s) {
    // infer a generous working precision from the argument
    int pr = s.precision();
    if (!s.known_zero() && s.valuation() < 0)
        pr = static_cast<int>(static_cast<long long>(pr) +
                              static_cast<long long>(s.valuation()) * std::max(0, f.deg()));
    LaurentSeries acc = LaurentSeries::zero_to(f.ctx(), pr);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * s;
        acc = acc + LaurentSeries::monomial(f.coeffs()[i], 0, pr);
    }
    return acc;
}

}  // namespace carcode
