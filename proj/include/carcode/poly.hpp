#pragma once

#include <string>
#include <vector>

#include "carcode/ff.hpp"

namespace carcode {

/// Dense univariate polynomial over a FieldCtx, coefficients low-to-high,
/// leading coefficient nonzero unless the polynomial is zero (degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    static Poly zero(FieldCtxPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(const FieldElement& c);
    static Poly x(FieldCtxPtr ctx);
    static Poly from_ints(FieldCtxPtr ctx, const std::vector<std::int64_t>& cs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(std::size_t i) const;
    FieldElement lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly shifted(int k) const;  // * x^k, k >= 0
    /// division with remainder by a nonzero divisor
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }

    Poly monic() const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& at) const;
    Poly pow(std::uint64_t e) const;
    Poly pow_mod(std::uint64_t e, const Poly& mod) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    FieldCtxPtr ctx_;
    std::vector<FieldElement> c_;
};

/// monic gcd
Poly poly_gcd(const Poly& a, const Poly& b);

/// true iff f has no repeated factor over the algebraic closure.
/// Handles f' = 0 (then f is a p-th power, not squarefree unless constant).
bool is_squarefree(const Poly& f);

/// finite-field irreducibility test; throws on constant input.
bool is_irreducible(const Poly& f);

/// map coefficients through a tower embedding
Poly embed_poly(const Poly& f, const FieldTower& t);

/// Reduced rational function n/d with d monic and gcd(n, d) = 1.
class RatFn {
public:
    RatFn() = default;
    explicit RatFn(Poly n);
    RatFn(Poly n, Poly d);

    static RatFn zero(FieldCtxPtr ctx) { return RatFn(Poly::zero(std::move(ctx))); }
    static RatFn one(FieldCtxPtr ctx) { return RatFn(Poly::constant(ctx->one())); }

    const Poly& num() const { return n_; }
    const Poly& den() const { return d_; }
    const FieldCtxPtr& ctx() const { return n_.ctx(); }
    bool is_zero() const { return n_.is_zero(); }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator-() const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn inv() const;
    bool operator==(const RatFn& o) const;
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    Poly n_, d_;
};

}  // namespace carcode
