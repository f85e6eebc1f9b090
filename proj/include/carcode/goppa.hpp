#pragma once

#include <string>
#include <vector>

#include "carcode/codes.hpp"
#include "carcode/poly.hpp"

namespace carcode {

/// Classical Goppa code data: support L of distinct extension-field elements
/// and a polynomial f over the extension not vanishing on L.
struct GoppaInstance {
    FieldTower tower;
    std::vector<FieldElement> support;  // elements of tower.ext()
    Poly gpoly;                         // over tower.ext()

    GoppaInstance(FieldTower t, std::vector<FieldElement> L, Poly f);
};

/// the deg(f) x n matrix with rows (alpha_i^j / f(alpha_i)), j = 0..deg f - 1;
/// its kernel over the extension is the GRS supercode
Matrix alternant_parity(const GoppaInstance& inst);

/// words c of F_q^n with sum c_i/(x - alpha_i) = 0 mod f, via the alternant
/// parity matrix and subfield restriction
LinearCode goppa_code(const GoppaInstance& inst);

struct GoppaIdentityReport {
    bool holds = false;
    std::size_t n = 0;
    std::size_t k_lhs = 0, k_rhs = 0;
    std::uint64_t designed_distance = 0;  // q*deg f + 1
    std::string str() const;
};

/// checks Gamma_q(L, f^{q-1}) == Gamma_q(L, f^q) for squarefree f;
/// refuses (throws) when f is not squarefree.
GoppaIdentityReport check_goppa_identity(const FieldTower& tower,
                                         const std::vector<FieldElement>& L, const Poly& f);

}  // namespace carcode
