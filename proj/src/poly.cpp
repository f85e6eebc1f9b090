#include "carcode/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace carcode {

Poly::Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& e : c_)
        if (!e.ctx()->same(*ctx_)) throw std::invalid_argument("poly coefficient context mismatch");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) {
    Poly p(c.ctx());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::x(FieldCtxPtr ctx) {
    Poly p(ctx);
    p.c_ = {ctx->zero(), ctx->one()};
    return p;
}

Poly Poly::from_ints(FieldCtxPtr ctx, const std::vector<std::int64_t>& cs) {
    std::vector<FieldElement> v;
    v.reserve(cs.size());
    for (auto i : cs) v.push_back(ctx->from_int(i));
    return Poly(ctx, std::move(v));
}

FieldElement Poly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return ctx_->zero();
}

FieldElement Poly::lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) throw std::invalid_argument("poly context mismatch");
    Poly r(ctx_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        FieldElement s = ctx_->zero();
        if (i < c_.size()) s = s + c_[i];
        if (i < o.c_.size()) s = s + o.c_[i];
        r.c_[i] = s;
    }
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& e : c_) r.c_.push_back(-e);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) throw std::invalid_argument("poly context mismatch");
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.c_.assign(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(const FieldElement& s) const {
    Poly r(ctx_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& e : c_) r.c_.push_back(e * s);
    r.normalize();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!ctx_->same(*o.ctx_) || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    Poly r(ctx_);
    r.c_.assign(static_cast<std::size_t>(k), ctx_->zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(ctx_), r = *this;
    FieldElement lead_inv = d.lead().inv();
    if (r.c_.size() >= d.c_.size())
        q.c_.assign(r.c_.size() - d.c_.size() + 1, ctx_->zero());
    while (!r.is_zero() && r.c_.size() >= d.c_.size()) {
        FieldElement f = r.c_.back() * lead_inv;
        std::size_t off = r.c_.size() - d.c_.size();
        q.c_[off] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            r.c_[off + i] = r.c_[off + i] - f * d.c_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

Poly Poly::derivative() const {
    Poly r(ctx_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * ctx_->from_int(static_cast<std::int64_t>(i)));
    r.normalize();
    return r;
}

FieldElement Poly::eval(const FieldElement& at) const {
    FieldElement acc = ctx_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::constant(ctx_->one()), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::pow_mod(std::uint64_t e, const Poly& mod) const {
    Poly r = Poly::constant(ctx_->one()), b = *this % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].str();
        bool needs_paren = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << cs;
        } else {
            if (!c_[i].is_one()) {
                if (needs_paren) os << "(" << cs << ")";
                else os << cs;
                os << "*";
            }
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!a.ctx()->same(*b.ctx())) throw std::invalid_argument("gcd context mismatch");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("squarefreeness of the zero polynomial");
    if (f.deg() == 0) return true;
    Poly d = f.derivative();
    // f' = 0 means f is a p-th power, hence not squarefree for deg >= 1;
    // gcd(f, 0) = monic(f) != 1 covers that case uniformly.
    return poly_gcd(f, d).deg() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) throw std::domain_error("irreducibility of a constant");
    const auto& ctx = f.ctx();
    std::uint64_t Q = ctx->size();
    int n = f.deg();
    Poly x = Poly::x(ctx);
    // x^{Q^n} mod f
    Poly t = x % f;
    for (int i = 0; i < n; ++i) t = t.pow_mod(Q, f);
    if (!((t - (x % f)) % f).is_zero()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r) continue;
        bool prime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) { prime = false; break; }
        if (!prime) continue;
        Poly u = x % f;
        for (int i = 0; i < n / r; ++i) u = u.pow_mod(Q, f);
        if (poly_gcd(f, u - (x % f)).deg() != 0) return false;
    }
    return true;
}

Poly embed_poly(const Poly& f, const FieldTower& t) {
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(t.embed(c));
    return Poly(t.ext(), std::move(cs));
}

RatFn::RatFn(Poly n) : n_(std::move(n)), d_(Poly::constant(n_.ctx()->one())) {}

RatFn::RatFn(Poly n, Poly d) : n_(std::move(n)), d_(std::move(d)) {
    if (d_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (n_.is_zero()) {
        d_ = Poly::constant(n_.ctx()->one());
        return;
    }
    Poly g = poly_gcd(n_, d_);
    if (g.deg() > 0) {
        n_ = n_ / g;
        d_ = d_ / g;
    }
    FieldElement inv = d_.lead().inv();
    n_ = n_ * inv;
    d_ = d_ * inv;
}

RatFn RatFn::operator+(const RatFn& o) const {
    return RatFn(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return RatFn(n_ * o.d_ - o.n_ * d_, d_ * o.d_);
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.n_ = -r.n_;
    return r;
}

RatFn RatFn::operator*(const RatFn& o) const { return RatFn(n_ * o.n_, d_ * o.d_); }

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    return RatFn(n_ * o.d_, d_ * o.n_);
}

RatFn RatFn::inv() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFn(d_, n_);
}

bool RatFn::operator==(const RatFn& o) const { return n_ == o.n_ && d_ == o.d_; }

std::string RatFn::str(const std::string& var) const {
    if (d_.deg() == 0 && !d_.is_zero() && d_.lead().is_one()) return n_.str(var);
    return "(" + n_.str(var) + ")/(" + d_.str(var) + ")";
}

}  // namespace carcode
