#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carcode/ff.hpp"
#include "carcode/matrix.hpp"

namespace carcode {

struct DistanceResult {
    std::uint64_t d = 0;  // 0 stands for the zero code ("infinite" distance)
    bool exact = true;
};

/// Linear code over a FieldCtx, identified with its canonical reduced
/// row-echelon generator matrix, so two codes are equal iff their canonical
/// generators are identical. The zero code (k = 0) is first-class.
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& m);
    static LinearCode from_parity(const Matrix& h);

    const FieldCtxPtr& ctx() const { return gen_.ctx(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    /// generator of the dual code (kernel basis of the generator)
    Matrix parity_matrix() const;

    bool contains(const std::vector<FieldElement>& word) const;
    bool operator==(const LinearCode& o) const;
    bool operator!=(const LinearCode& o) const { return !(*this == o); }
    bool subset_of(const LinearCode& o) const;

    /// Exact minimum Hamming weight by enumerating all |F|^k codewords.
    /// Throws when the enumeration exceeds `budget` unless `allow_sampled`,
    /// in which case a sampled upper bound (exact = false) is returned.
    DistanceResult min_distance(std::uint64_t budget = (1ull << 24),
                                unsigned jobs = 1,
                                bool allow_sampled = false,
                                std::uint64_t seed = 1) const;

    std::string params_str(std::optional<std::uint64_t> d = std::nullopt) const;
    /// "code q=.. n=.. k=.." header plus generator rows
    std::string text_format() const;
    /// rows as integer encodings (single digits when q <= 10)
    std::string bits_format() const;

private:
    explicit LinearCode(Matrix canonical) : gen_(std::move(canonical)) {}
    Matrix gen_;
};

/// {c in F_q^n : c in C}, via expansion of a parity matrix of C over a base
/// basis of the extension; each extension constraint becomes ell base rows.
LinearCode subfield_subcode(const LinearCode& c, const FieldTower& t);

/// componentwise a -> a^q
std::vector<FieldElement> frobenius_word(const std::vector<FieldElement>& w, std::uint64_t q);

/// (n, max(0, n - ell*r), d) — generic subfield-subcode parameter bound
struct SubfieldParams {
    std::size_t n;
    std::size_t k_lower;
    std::uint64_t d_lower;
};
SubfieldParams subfield_params_bound(std::size_t n, std::size_t r, std::uint64_t d, std::uint32_t ell);

}  // namespace carcode
