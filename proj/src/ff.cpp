#include "carcode/ff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace carcode {

namespace {

constexpr std::uint64_t kSizeCap = 1u << 20;

bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    std::int64_t x1, y1;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Coeff inv_mod_p(Coeff a, std::uint32_t p) {
    std::int64_t x, y;
    std::int64_t g = egcd(static_cast<std::int64_t>(a % p), p, x, y);
    if (g != 1) throw std::domain_error("division by zero in F_p");
    std::int64_t r = x % p;
    if (r < 0) r += p;
    return static_cast<Coeff>(r);
}

// dense F_p polynomial helpers on raw coefficient vectors (low-to-high)
void trim(std::vector<Coeff>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// a mod b, b monic-izable; returns remainder. Used only at construction time.
std::vector<Coeff> poly_mod(std::vector<Coeff> a, const std::vector<Coeff>& b, std::uint32_t p) {
    trim(a);
    std::vector<Coeff> bb = b;
    trim(bb);
    if (bb.empty()) throw std::domain_error("mod by zero polynomial");
    Coeff lead_inv = inv_mod_p(bb.back(), p);
    while (a.size() >= bb.size()) {
        std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t off = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) {
            std::uint64_t t = a[off + i] + static_cast<std::uint64_t>(p) -
                              f * bb[i] % p;
            a[off + i] = static_cast<Coeff>(t % p);
        }
        trim(a);
    }
    return a;
}

std::vector<Coeff> poly_mul_mod(const std::vector<Coeff>& a, const std::vector<Coeff>& b,
                                const std::vector<Coeff>& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<Coeff> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<Coeff>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(c), mod, p);
}

// irreducibility over F_p without a FieldCtx (bootstrap for mk_field):
// x^{p^deg} == x mod f and gcd(x^{p^{deg/r}} - x, f) = 1 for prime r | deg.
std::vector<Coeff> frob_pow(const std::vector<Coeff>& h, std::uint64_t e,
                            const std::vector<Coeff>& mod, std::uint32_t p) {
    // h^e mod (mod) by square and multiply
    std::vector<Coeff> r{1}, base = h;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

std::vector<Coeff> raw_gcd(std::vector<Coeff> a, std::vector<Coeff> b, std::uint32_t p) {
    trim(a); trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool raw_irreducible(const std::vector<Coeff>& f, std::uint32_t p) {
    std::vector<Coeff> ff = f;
    trim(ff);
    if (ff.size() < 2) return false;
    std::size_t n = ff.size() - 1;
    std::vector<Coeff> x{0, 1};
    // x^{p^n} mod f
    std::vector<Coeff> t = x;
    for (std::size_t i = 0; i < n; ++i) t = frob_pow(t, p, ff, p);
    std::vector<Coeff> diff = t;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<Coeff>((diff[1] + p - 1) % p);
    trim(diff);
    if (!diff.empty()) return false;
    for (std::size_t r = 2; r <= n; ++r) {
        if (n % r || !is_prime_u32(r)) continue;
        std::size_t k = n / r;
        std::vector<Coeff> u = x;
        for (std::size_t i = 0; i < k; ++i) u = frob_pow(u, p, ff, p);
        std::vector<Coeff> d = u;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = static_cast<Coeff>((d[1] + p - 1) % p);
        trim(d);
        std::vector<Coeff> g = raw_gcd(ff, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldCtxPtr FieldCtx::make(std::uint32_t p, std::uint32_t m,
                           const std::vector<Coeff>* modulus, std::string gen_name) {
    if (!is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        size *= p;
        if (size > kSizeCap) throw std::invalid_argument("field size p^m exceeds 2^20 cap");
    }
    std::vector<Coeff> mod;
    if (modulus) {
        mod = *modulus;
        for (auto& c : mod) c %= p;
        trim(mod);
        if (mod.size() != m + 1) throw std::invalid_argument("modulus must have degree m");
        if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (m >= 1 && !raw_irreducible(mod, p))
            throw std::invalid_argument("modulus is reducible over F_p");
    } else {
        // least irreducible by integer encoding of (c_0, ..., c_{m-1})
        std::uint64_t lower = 1;
        for (std::uint32_t i = 0; i + 1 < m; ++i) lower *= p;
        bool found = false;
        for (std::uint64_t e = 0; e < lower * p && !found; ++e) {
            std::vector<Coeff> cand(m + 1, 0);
            std::uint64_t t = e;
            for (std::uint32_t i = 0; i < m; ++i) { cand[i] = static_cast<Coeff>(t % p); t /= p; }
            cand[m] = 1;
            if (m == 1 || raw_irreducible(cand, p)) { mod = cand; found = true; }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->size_ = size;
    ctx->modulus_ = std::move(mod);
    ctx->gen_name_ = std::move(gen_name);
    // reduction table: xpow_[k] = x^{m+k} mod modulus, k = 0..m-2
    ctx->xpow_.resize(m >= 1 ? m - 1 : 0);
    std::vector<Coeff> xm(m + 1, 0);
    xm[m] = 1;
    std::vector<Coeff> red = poly_mod(xm, ctx->modulus_, p);
    red.resize(m, 0);
    for (std::uint32_t k = 0; k + 1 < m; ++k) {
        ctx->xpow_[k] = red;
        std::vector<Coeff> nxt(m + 1, 0);
        for (std::uint32_t i = 0; i < m; ++i) nxt[i + 1] = red[i];
        nxt = poly_mod(nxt, ctx->modulus_, p);
        nxt.resize(m, 0);
        red.assign(nxt.begin(), nxt.begin() + m);
    }
    return ctx;
}

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), std::vector<Coeff>(m_, 0)); }

FieldElement FieldCtx::one() const {
    std::vector<Coeff> c(m_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::gen() const {
    std::vector<Coeff> c(m_, 0);
    if (m_ >= 2) c[1] = 1;
    else c[0] = static_cast<Coeff>((p_ - modulus_[0]) % p_);  // root of the degree-1 modulus
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_coeffs(std::vector<Coeff> c) const {
    for (auto& x : c) x %= p_;
    c.resize(m_, 0);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    std::vector<Coeff> c(m_, 0);
    c[0] = static_cast<Coeff>(r);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_encoding(std::uint64_t e) const {
    return FieldElement(shared_from_this(), decode_raw(e));
}

std::vector<Coeff> FieldCtx::add_raw(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const {
    std::vector<Coeff> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
}

std::vector<Coeff> FieldCtx::sub_raw(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const {
    std::vector<Coeff> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) c[i] = (a[i] + p_ - b[i]) % p_;
    return c;
}

std::vector<Coeff> FieldCtx::neg_raw(const std::vector<Coeff>& a) const {
    std::vector<Coeff> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) c[i] = (p_ - a[i]) % p_;
    return c;
}

std::vector<Coeff> FieldCtx::mul_raw(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const {
    if (m_ == 1) return {static_cast<Coeff>(static_cast<std::uint64_t>(a[0]) * b[0] % p_)};
    std::vector<std::uint64_t> conv(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (!a[i]) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            conv[i + j] += static_cast<std::uint64_t>(a[i]) * b[j] % p_;
    }
    std::vector<Coeff> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) c[i] = static_cast<Coeff>(conv[i] % p_);
    for (std::uint32_t k = 0; k + 1 < m_; ++k) {
        std::uint64_t hi = conv[m_ + k] % p_;
        if (!hi) continue;
        const auto& red = xpow_[k];
        for (std::uint32_t i = 0; i < m_; ++i)
            c[i] = static_cast<Coeff>((c[i] + hi * red[i]) % p_);
    }
    return c;
}

std::vector<Coeff> FieldCtx::inv_raw(const std::vector<Coeff>& a) const {
    // extended Euclid in F_p[x] against the modulus
    std::vector<Coeff> r0 = modulus_, r1 = a;
    trim(r1);
    if (r1.empty()) throw std::domain_error("division by zero field element");
    std::vector<Coeff> t0, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        std::vector<Coeff> q;
        std::vector<Coeff> rem = r0;
        Coeff lead_inv = inv_mod_p(r1.back(), p_);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint64_t f = static_cast<std::uint64_t>(rem.back()) * lead_inv % p_;
            std::size_t off = rem.size() - r1.size();
            q[off] = static_cast<Coeff>(f);
            for (std::size_t i = 0; i < r1.size(); ++i) {
                std::uint64_t t = rem[off + i] + static_cast<std::uint64_t>(p_) - f * r1[i] % p_;
                rem[off + i] = static_cast<Coeff>(t % p_);
            }
            trim(rem);
        }
        // t2 = t0 - q*t1
        std::vector<Coeff> qt(q.size() + (t1.empty() ? 0 : t1.size()), 0);
        if (!t1.empty())
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (!q[i]) continue;
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt[i + j] = static_cast<Coeff>((qt[i + j] + static_cast<std::uint64_t>(q[i]) * t1[j]) % p_);
            }
        std::vector<Coeff> t2(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = static_cast<Coeff>((t2[i] + p_ - qt[i]) % p_);
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a constant, nonzero); result = t0 / r0
    if (r0.size() != 1) throw std::logic_error("element not invertible (modulus not irreducible?)");
    Coeff s = inv_mod_p(r0[0], p_);
    std::vector<Coeff> out(m_, 0);
    for (std::size_t i = 0; i < t0.size() && i < m_; ++i)
        out[i] = static_cast<Coeff>(static_cast<std::uint64_t>(t0[i]) * s % p_);
    return out;
}

std::uint64_t FieldCtx::encode_raw(const std::vector<Coeff>& a) const {
    std::uint64_t e = 0;
    for (std::uint32_t i = m_; i-- > 0;) e = e * p_ + a[i];
    return e;
}

std::vector<Coeff> FieldCtx::decode_raw(std::uint64_t e) const {
    std::vector<Coeff> c(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) { c[i] = static_cast<Coeff>(e % p_); e /= p_; }
    if (e) throw std::invalid_argument("encoding out of range");
    return c;
}

std::string FieldCtx::field_line() const {
    std::ostringstream os;
    os << "field p=" << p_ << " m=" << m_ << " modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
    }
    os << " gen=" << gen_name_;
    return os.str();
}

FieldElement::FieldElement(FieldCtxPtr ctx, std::vector<Coeff> c)
    : ctx_(std::move(ctx)), c_(std::move(c)) {
    if (c_.size() != ctx_->degree()) throw std::invalid_argument("bad coefficient length");
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Coeff v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

void FieldElement::check_ctx(const FieldElement& o) const {
    if (!ctx_->same(*o.ctx_)) throw std::invalid_argument("field context mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_ctx(o);
    return FieldElement(ctx_, ctx_->add_raw(c_, o.c_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_ctx(o);
    return FieldElement(ctx_, ctx_->sub_raw(c_, o.c_));
}

FieldElement FieldElement::operator-() const { return FieldElement(ctx_, ctx_->neg_raw(c_)); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_ctx(o);
    return FieldElement(ctx_, ctx_->mul_raw(c_, o.c_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_ctx(o);
    return FieldElement(ctx_, ctx_->mul_raw(c_, ctx_->inv_raw(o.c_)));
}

FieldElement FieldElement::inv() const { return FieldElement(ctx_, ctx_->inv_raw(c_)); }

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = ctx_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return ctx_->same(*o.ctx_) && c_ == o.c_;
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    const std::string& g = ctx_->gen_name();
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = ctx_->degree(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) { os << c_[i]; continue; }
        if (c_[i] != 1) os << c_[i] << "*";
        os << g;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

FieldElement FieldCtx::parse(const std::string& text) const {
    // sum of terms: [int '*'] gen ['^' int] | int ; '-' treated as +(p-1)*
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty element literal");
    FieldElement acc = zero();
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
    while (i < s.size()) {
        std::uint64_t coeff = 1;
        bool saw_num = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) { coeff = std::stoull(s.substr(i, j - i)); saw_num = true; i = j; }
        if (i < s.size() && s[i] == '*') ++i;
        std::uint32_t power = 0;
        if (i + gen_name_.size() <= s.size() && s.compare(i, gen_name_.size(), gen_name_) == 0) {
            i += gen_name_.size();
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw std::invalid_argument("missing exponent in element literal");
                power = static_cast<std::uint32_t>(std::stoul(s.substr(i, k - i)));
                i = k;
            }
        } else if (!saw_num) {
            throw std::invalid_argument("cannot parse element literal: " + text);
        }
        FieldElement term = from_int(static_cast<std::int64_t>(coeff % p_));
        if (power) term = term * gen().pow(power);
        if (neg) term = -term;
        acc = acc + term;
        if (i == s.size()) break;
        if (s[i] == '+') { neg = false; ++i; }
        else if (s[i] == '-') { neg = true; ++i; }
        else throw std::invalid_argument("cannot parse element literal: " + text);
        if (i == s.size()) throw std::invalid_argument("dangling sign in element literal");
    }
    return acc;
}

FieldElement frobenius_q(const FieldElement& a, std::uint64_t q) {
    std::uint32_t p = a.ctx()->characteristic();
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p) throw std::invalid_argument("q is not a power of the characteristic");
        t /= p;
    }
    if (q == 0) throw std::invalid_argument("q must be positive");
    return a.pow(q);
}

FieldElement pth_root(const FieldElement& a) {
    std::uint32_t p = a.ctx()->characteristic(), m = a.ctx()->degree();
    if (m == 1) return a;  // Frobenius is the identity on F_p
    FieldElement r = a;    // a^{p^{m-1}}
    for (std::uint32_t i = 0; i + 1 < m; ++i) r = r.pow(p);
    return r;
}

FieldTower::FieldTower(FieldCtxPtr base, FieldCtxPtr ext)
    : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->characteristic() != ext_->characteristic())
        throw std::invalid_argument("tower fields have different characteristic");
    if (ext_->degree() % base_->degree() != 0)
        throw std::invalid_argument("base degree does not divide extension degree");
    ell_ = ext_->degree() / base_->degree();
    const std::uint32_t p = base_->characteristic();
    const std::uint32_t M = ext_->degree();

    // subfield of size q inside ext: kernel of (x -> x^q) - id as an F_p-linear map
    std::vector<std::vector<Coeff>> frob(M, std::vector<Coeff>(M, 0));
    for (std::uint32_t j = 0; j < M; ++j) {
        std::vector<Coeff> e(M, 0);
        e[j] = 1;
        FieldElement b(ext_, e);
        FieldElement bq = b.pow(base_->size());
        for (std::uint32_t i = 0; i < M; ++i) {
            Coeff delta = (i == j) ? 1u : 0u;
            frob[i][j] = (bq.coeffs()[i] + p - delta) % p;
        }
    }
    // kernel basis by Gaussian elimination over F_p
    std::vector<std::vector<Coeff>> mat = frob;
    std::vector<int> pivot_col(M, -1);
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < M && rank < M; ++col) {
        std::uint32_t sel = rank;
        while (sel < M && mat[sel][col] == 0) ++sel;
        if (sel == M) continue;
        std::swap(mat[sel], mat[rank]);
        Coeff inv = inv_mod_p(mat[rank][col], p);
        for (std::uint32_t j = 0; j < M; ++j)
            mat[rank][j] = static_cast<Coeff>(static_cast<std::uint64_t>(mat[rank][j]) * inv % p);
        for (std::uint32_t r = 0; r < M; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            Coeff f = mat[r][col];
            for (std::uint32_t j = 0; j < M; ++j)
                mat[r][j] = static_cast<Coeff>((mat[r][j] + static_cast<std::uint64_t>(p - f) * mat[rank][j]) % p);
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    std::vector<std::vector<Coeff>> kern;
    std::vector<bool> is_pivot(M, false);
    for (std::uint32_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (std::uint32_t col = 0; col < M; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Coeff> v(M, 0);
        v[col] = 1;
        for (std::uint32_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = static_cast<Coeff>((p - mat[r][col] % p) % p);
        kern.push_back(std::move(v));
    }
    // enumerate the subfield (size q) and pick the least root of the base modulus
    std::uint64_t q = base_->size();
    if (kern.size() != 0 && kern.size() > 20)
        throw std::logic_error("unexpected subfield dimension");
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < kern.size(); ++i) count *= p;
    if (count != q) throw std::logic_error("subfield size mismatch in tower construction");

    const auto& mod = base_->modulus();
    std::optional<FieldElement> best;
    std::vector<std::uint32_t> digits(kern.size(), 0);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::vector<Coeff> v(M, 0);
        std::uint64_t t = it;
        for (std::size_t k = 0; k < kern.size(); ++k) {
            Coeff dk = static_cast<Coeff>(t % p);
            t /= p;
            if (!dk) continue;
            for (std::uint32_t i = 0; i < M; ++i)
                v[i] = static_cast<Coeff>((v[i] + static_cast<std::uint64_t>(dk) * kern[k][i]) % p);
        }
        FieldElement cand(ext_, std::move(v));
        // evaluate base modulus at cand
        FieldElement acc = ext_->zero();
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = acc * cand + ext_->from_int(mod[i]);
        }
        if (!acc.is_zero()) continue;
        if (!best || cand.encode() < best->encode()) best = cand;
    }
    if (!best) throw std::logic_error("no root of base modulus in extension");

    gen_pows_.clear();
    FieldElement pw = ext_->one();
    for (std::uint32_t i = 0; i < base_->degree(); ++i) {
        gen_pows_.push_back(pw);
        pw = pw * *best;
    }
    if (base_->degree() == 1) gen_pows_[0] = ext_->one();

    // forward matrix: (x_0..x_{ell-1}) over base -> ext, basis {G^j} with G = ext gen
    fwd_.assign(M, std::vector<Coeff>(M, 0));
    FieldElement G = ext_->gen();
    FieldElement Gj = ext_->one();
    for (std::uint32_t j = 0; j < ell_; ++j) {
        for (std::uint32_t i = 0; i < base_->degree(); ++i) {
            FieldElement col = gen_pows_[i] * Gj;
            for (std::uint32_t r = 0; r < M; ++r)
                fwd_[r][j * base_->degree() + i] = col.coeffs()[r];
        }
        Gj = Gj * G;
    }
    // invert fwd_ over F_p
    std::vector<std::vector<Coeff>> a = fwd_;
    inv_.assign(M, std::vector<Coeff>(M, 0));
    for (std::uint32_t i = 0; i < M; ++i) inv_[i][i] = 1 % p;
    for (std::uint32_t col = 0; col < M; ++col) {
        std::uint32_t sel = col;
        while (sel < M && a[sel][col] == 0) ++sel;
        if (sel == M) throw std::logic_error("tower basis is singular");
        std::swap(a[sel], a[col]);
        std::swap(inv_[sel], inv_[col]);
        Coeff f = inv_mod_p(a[col][col], p);
        for (std::uint32_t j = 0; j < M; ++j) {
            a[col][j] = static_cast<Coeff>(static_cast<std::uint64_t>(a[col][j]) * f % p);
            inv_[col][j] = static_cast<Coeff>(static_cast<std::uint64_t>(inv_[col][j]) * f % p);
        }
        for (std::uint32_t r = 0; r < M; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Coeff g = a[r][col];
            for (std::uint32_t j = 0; j < M; ++j) {
                a[r][j] = static_cast<Coeff>((a[r][j] + static_cast<std::uint64_t>(p - g) * a[col][j]) % p);
                inv_[r][j] = static_cast<Coeff>((inv_[r][j] + static_cast<std::uint64_t>(p - g) * inv_[col][j]) % p);
            }
        }
    }
}

FieldElement FieldTower::embed(const FieldElement& a) const {
    if (!a.ctx()->same(*base_)) throw std::invalid_argument("embed: element not in tower base");
    FieldElement acc = ext_->zero();
    for (std::uint32_t i = 0; i < base_->degree(); ++i) {
        Coeff c = a.coeffs()[i];
        if (!c) continue;
        acc = acc + gen_pows_[i] * ext_->from_int(c);
    }
    return acc;
}

std::vector<FieldElement> FieldTower::coords(const FieldElement& a) const {
    if (!a.ctx()->same(*ext_)) throw std::invalid_argument("coords: element not in tower extension");
    const std::uint32_t p = base_->characteristic();
    const std::uint32_t M = ext_->degree();
    std::vector<Coeff> v(M, 0);
    for (std::uint32_t i = 0; i < M; ++i) {
        std::uint64_t s = 0;
        for (std::uint32_t j = 0; j < M; ++j) s += static_cast<std::uint64_t>(inv_[i][j]) * a.coeffs()[j] % p;
        v[i] = static_cast<Coeff>(s % p);
    }
    std::vector<FieldElement> out;
    out.reserve(ell_);
    for (std::uint32_t j = 0; j < ell_; ++j) {
        std::vector<Coeff> c(v.begin() + j * base_->degree(), v.begin() + (j + 1) * base_->degree());
        out.emplace_back(base_, std::move(c));
    }
    return out;
}

FieldElement FieldTower::from_coords(const std::vector<FieldElement>& xs) const {
    if (xs.size() != ell_) throw std::invalid_argument("from_coords: wrong length");
    FieldElement acc = ext_->zero();
    FieldElement G = ext_->gen(), Gj = ext_->one();
    for (std::uint32_t j = 0; j < ell_; ++j) {
        acc = acc + embed(xs[j]) * Gj;
        Gj = Gj * G;
    }
    return acc;
}

std::optional<FieldElement> FieldTower::try_descend(const FieldElement& a) const {
    std::vector<FieldElement> c = coords(a);
    for (std::uint32_t j = 1; j < ell_; ++j)
        if (!c[j].is_zero()) return std::nullopt;
    return c[0];
}

FieldElement FieldTower::trace_to_base(const FieldElement& a) const {
    if (!a.ctx()->same(*ext_)) throw std::invalid_argument("trace: element not in tower extension");
    FieldElement s = ext_->zero(), t = a;
    for (std::uint32_t i = 0; i < ell_; ++i) {
        s = s + t;
        t = t.pow(base_->size());
    }
    auto d = try_descend(s);
    if (!d) throw std::logic_error("trace did not land in the base field");
    return *d;
}

}  // namespace carcode
