#pragma once

#include <string>
#include <vector>

#include "carcode/ff.hpp"
#include "carcode/poly.hpp"

namespace carcode {

/// Truncated Laurent series with explicit, pessimistic precision tracking.
/// Coefficients are exact for every exponent in [valuation, precision).
/// A series that is zero on its whole known window is "zero to precision";
/// asking such a series for its valuation or leading coefficient throws,
/// rather than returning a silently wrong answer.
class LaurentSeries {
public:
    LaurentSeries() = default;

    static LaurentSeries zero_to(FieldCtxPtr ctx, int prec);
    /// c * t^e known exactly up to prec
    static LaurentSeries monomial(const FieldElement& c, int e, int prec);
    /// image of a polynomial in t, exact below prec
    static LaurentSeries from_poly(const Poly& f, int prec);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int precision() const { return prec_; }
    bool known_zero() const { return c_.empty(); }
    /// throws when the series is zero to its known precision
    int valuation() const;
    FieldElement lead() const;
    /// coefficient of t^e; throws for e >= precision
    FieldElement coeff(int e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const FieldElement& s) const;
    LaurentSeries inv() const;
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inv(); }
    LaurentSeries pow(int e) const;

    /// d/dt
    LaurentSeries derivative() const;
    /// substitute t -> inner, where inner has valuation >= 1
    LaurentSeries compose(const LaurentSeries& inner) const;
    LaurentSeries shifted(int k) const;  // * t^k
    LaurentSeries truncated(int prec) const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    FieldCtxPtr ctx_;
    int prec_ = 0;
    int val_ = 0;                  // == prec_ when zero to precision
    std::vector<FieldElement> c_;  // exponents val_ .. val_+size-1, c_[0] != 0
};

/// evaluate a polynomial at a Laurent series (Horner)
LaurentSeries eval_poly_at(const Poly& f, const LaurentSeries& s);

}  // namespace carcode
