#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace carcode {

using Coeff = std::uint32_t;

class FieldCtx;
class FieldElement;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Exact arithmetic context for F_{p^m}, represented in the polynomial basis
/// of a fixed monic irreducible modulus over F_p. Immutable and shareable.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    /// Builds F_{p^m}. If no modulus is given, the lexicographically least
    /// monic irreducible of degree m is chosen (least integer encoding
    /// c0 + c1*p + ...), so contexts are reproducible across runs.
    /// Throws on non-prime p, reducible modulus, or p^m > 2^20.
    static FieldCtxPtr make(std::uint32_t p, std::uint32_t m,
                            const std::vector<Coeff>* modulus = nullptr,
                            std::string gen_name = "w");

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t size() const { return size_; }
    const std::vector<Coeff>& modulus() const { return modulus_; }
    const std::string& gen_name() const { return gen_name_; }

    bool same(const FieldCtx& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;
    FieldElement from_coeffs(std::vector<Coeff> c) const;
    FieldElement from_int(std::int64_t v) const;   // image of an integer (constant)
    FieldElement from_encoding(std::uint64_t e) const;
    FieldElement parse(const std::string& text) const;

    // raw coefficient-vector arithmetic (length m, reduced)
    std::vector<Coeff> add_raw(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const;
    std::vector<Coeff> sub_raw(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const;
    std::vector<Coeff> neg_raw(const std::vector<Coeff>& a) const;
    std::vector<Coeff> mul_raw(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const;
    std::vector<Coeff> inv_raw(const std::vector<Coeff>& a) const;

    std::uint64_t encode_raw(const std::vector<Coeff>& a) const;
    std::vector<Coeff> decode_raw(std::uint64_t e) const;

    std::string field_line() const;  // "field p=.. m=.. modulus=.. gen=.."

private:
    FieldCtx() = default;
    std::uint32_t p_ = 0, m_ = 0;
    std::uint64_t size_ = 0;
    std::vector<Coeff> modulus_;             // length m+1, monic
    std::string gen_name_;
    std::vector<std::vector<Coeff>> xpow_;   // x^m .. x^{2m-2} reduced
};

/// An element of F_{p^m}: reduced coefficient vector over F_p, low-to-high.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldCtxPtr ctx, std::vector<Coeff> c);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    std::uint64_t encode() const { return ctx_->encode_raw(c_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_ctx(const FieldElement& o) const;
    FieldCtxPtr ctx_;
    std::vector<Coeff> c_;
};

/// a^q for q a power of the characteristic; throws otherwise.
FieldElement frobenius_q(const FieldElement& a, std::uint64_t q);

/// The unique b with b^p = a (finite fields are perfect).
FieldElement pth_root(const FieldElement& a);

/// Embedding/trace data for a subfield pair F_q = base inside F_{q^ell} = ext.
/// The image of the base generator is the least root (by encoding) of the
/// base modulus inside ext, so towers are reproducible.
class FieldTower {
public:
    FieldTower(FieldCtxPtr base, FieldCtxPtr ext);

    const FieldCtxPtr& base() const { return base_; }
    const FieldCtxPtr& ext() const { return ext_; }
    std::uint32_t ell() const { return ell_; }
    std::uint64_t q() const { return base_->size(); }
    const FieldElement& embed_image() const { return gen_pows_[1 < gen_pows_.size() ? 1 : 0]; }

    FieldElement embed(const FieldElement& a) const;
    std::optional<FieldElement> try_descend(const FieldElement& a) const;

    /// coordinates of a in the base-basis {1, G, ..., G^{ell-1}} of ext,
    /// G the ext generator; inverse of from_coords.
    std::vector<FieldElement> coords(const FieldElement& a) const;
    FieldElement from_coords(const std::vector<FieldElement>& xs) const;

    /// a + a^q + ... + a^{q^{ell-1}}, re-expressed in the base context.
    FieldElement trace_to_base(const FieldElement& a) const;

private:
    FieldCtxPtr base_, ext_;
    std::uint32_t ell_ = 0;
    std::vector<FieldElement> gen_pows_;          // embed(base_gen^i), i < base.m
    // F_p-linear map (x_0..x_{ell-1}) -> sum embed(x_j) G^j, and its inverse,
    // as M x M matrices over F_p with M = ext.m.
    std::vector<std::vector<Coeff>> fwd_, inv_;
};

}  // namespace carcode
