#include "carcode/codes.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace carcode {

LinearCode LinearCode::from_generator(const Matrix& m) {
    return LinearCode(m.row_space_canonical());
}

LinearCode LinearCode::from_parity(const Matrix& h) {
    auto basis = h.kernel();
    Matrix g = Matrix::from_rows(h.ctx(), basis);
    if (basis.empty()) g = Matrix(h.ctx(), 0, h.cols());
    return LinearCode(g.row_space_canonical());
}

Matrix LinearCode::parity_matrix() const {
    auto basis = gen_.kernel();
    if (basis.empty()) return Matrix(ctx(), 0, n());
    return Matrix::from_rows(ctx(), basis).row_space_canonical();
}

bool LinearCode::contains(const std::vector<FieldElement>& word) const {
    if (word.size() != n()) throw std::invalid_argument("word length mismatch");
    // reduce against the canonical generator; pivot of row r is its first
    // nonzero column (a leading 1 in RREF)
    std::vector<FieldElement> w = word;
    for (std::size_t r = 0; r < k(); ++r) {
        std::size_t piv = 0;
        while (piv < n() && gen_.at(r, piv).is_zero()) ++piv;
        if (piv == n()) continue;
        if (!w[piv].is_zero()) {
            FieldElement f = w[piv];
            for (std::size_t j = piv; j < n(); ++j) w[j] = w[j] - f * gen_.at(r, j);
        }
    }
    for (const auto& e : w)
        if (!e.is_zero()) return false;
    return true;
}

bool LinearCode::operator==(const LinearCode& o) const { return gen_ == o.gen_; }

bool LinearCode::subset_of(const LinearCode& o) const {
    if (n() != o.n() || !ctx()->same(*o.ctx())) throw std::invalid_argument("code length/field mismatch");
    for (std::size_t i = 0; i < k(); ++i)
        if (!o.contains(gen_.row(i))) return false;
    return true;
}

namespace {

// weight of sum over rows with digit coefficients, enumerated with an
// odometer; each step updates the current word by a precomputed delta row.
std::uint64_t enumerate_min_weight(const Matrix& gen, std::uint64_t lo, std::uint64_t hi) {
    const auto& ctx = gen.ctx();
    const std::uint64_t Q = ctx->size();
    const std::size_t k = gen.rows(), n = gen.cols();
    // field elements in encoding order
    std::vector<FieldElement> elems;
    elems.reserve(Q);
    for (std::uint64_t e = 0; e < Q; ++e) elems.push_back(ctx->from_encoding(e));
    // delta[i][v] = (elems[v+1]-elems[v]) * row_i; delta_wrap[i] = (elems[0]-elems[Q-1]) * row_i
    std::vector<std::vector<std::vector<FieldElement>>> delta(k);
    for (std::size_t i = 0; i < k; ++i) {
        delta[i].resize(Q);
        for (std::uint64_t v = 0; v < Q; ++v) {
            FieldElement step = elems[(v + 1) % Q] - elems[v];
            std::vector<FieldElement> d(n, ctx->zero());
            for (std::size_t j = 0; j < n; ++j) d[j] = step * gen.at(i, j);
            delta[i][v] = std::move(d);
        }
    }
    // start word for index lo
    std::vector<std::uint64_t> digits(k, 0);
    std::uint64_t t = lo;
    for (std::size_t i = 0; i < k; ++i) { digits[i] = t % Q; t /= Q; }
    std::vector<FieldElement> word(n, ctx->zero());
    for (std::size_t i = 0; i < k; ++i) {
        if (!digits[i]) continue;
        FieldElement c = elems[digits[i]];
        for (std::size_t j = 0; j < n; ++j) word[j] = word[j] + c * gen.at(i, j);
    }
    auto weight = [&](const std::vector<FieldElement>& w) {
        std::uint64_t s = 0;
        for (const auto& e : w)
            if (!e.is_zero()) ++s;
        return s;
    };
    std::uint64_t best = n + 1;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (idx != 0) {
            std::uint64_t w = weight(word);
            if (w && w < best) best = w;
        }
        // increment odometer to idx+1
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t v = digits[i];
            const auto& d = delta[i][v];
            for (std::size_t j = 0; j < n; ++j) word[j] = word[j] + d[j];
            digits[i] = (v + 1) % Q;
            if (digits[i] != 0) break;
        }
    }
    return best;
}

}  // namespace

DistanceResult LinearCode::min_distance(std::uint64_t budget, unsigned jobs,
                                        bool allow_sampled, std::uint64_t seed) const {
    if (k() == 0) return {0, true};  // zero code: distance reported as infinity sentinel
    const std::uint64_t Q = ctx()->size();
    // total = Q^k, detecting overflow against the budget
    std::uint64_t total = 1;
    bool over = false;
    for (std::size_t i = 0; i < k(); ++i) {
        if (total > budget / Q + 1) { over = true; break; }
        total *= Q;
        if (total > budget) { over = true; break; }
    }
    if (over) {
        if (!allow_sampled)
            throw std::runtime_error("min_distance enumeration budget exceeded");
        // sampled upper bound, clearly non-exact
        std::mt19937_64 rng(seed);
        std::uint64_t best = n();
        for (std::uint64_t it = 0; it < budget; ++it) {
            std::vector<FieldElement> w(n(), ctx()->zero());
            bool nonzero = false;
            for (std::size_t i = 0; i < k(); ++i) {
                std::uint64_t c = rng() % Q;
                if (!c) continue;
                nonzero = true;
                FieldElement f = ctx()->from_encoding(c);
                for (std::size_t j = 0; j < n(); ++j) w[j] = w[j] + f * gen_.at(i, j);
            }
            if (!nonzero) continue;
            std::uint64_t wt = 0;
            for (const auto& e : w)
                if (!e.is_zero()) ++wt;
            if (wt && wt < best) best = wt;
        }
        return {best, false};
    }
    unsigned nthreads = std::max(1u, jobs);
    if (nthreads == 1 || total < 4096) return {enumerate_min_weight(gen_, 0, total), true};
    std::vector<std::uint64_t> results(nthreads, n() + 1);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, t]() { results[t] = enumerate_min_weight(gen_, lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t best = n() + 1;
    for (auto r : results) best = std::min(best, r);
    return {best, true};
}

std::string LinearCode::params_str(std::optional<std::uint64_t> d) const {
    std::ostringstream os;
    os << "[" << n() << ", " << k();
    if (d) {
        os << ", ";
        if (k() == 0) os << "inf";
        else os << *d;
    }
    os << "]_" << ctx()->size();
    return os.str();
}

std::string LinearCode::text_format() const {
    std::ostringstream os;
    os << "code q=" << ctx()->size() << " n=" << n() << " k=" << k() << "\n";
    os << gen_.str();
    return os.str();
}

std::string LinearCode::bits_format() const {
    std::ostringstream os;
    os << "code q=" << ctx()->size() << " n=" << n() << " k=" << k() << "\n";
    bool compact = ctx()->size() <= 10;
    for (std::size_t i = 0; i < k(); ++i) {
        for (std::size_t j = 0; j < n(); ++j) {
            if (!compact && j) os << " ";
            os << gen_.at(i, j).encode();
        }
        os << "\n";
    }
    return os.str();
}

LinearCode subfield_subcode(const LinearCode& c, const FieldTower& t) {
    if (!c.ctx()->same(*t.ext()))
        throw std::invalid_argument("subfield_subcode: code not over the tower extension");
    Matrix h = c.parity_matrix();
    const std::size_t n = c.n();
    const std::uint32_t ell = t.ell();
    Matrix hb(t.base(), h.rows() * ell, n);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
            auto cs = t.coords(h.at(r, j));
            for (std::uint32_t l = 0; l < ell; ++l) hb.at(r * ell + l, j) = cs[l];
        }
    return LinearCode::from_parity(hb);
}

std::vector<FieldElement> frobenius_word(const std::vector<FieldElement>& w, std::uint64_t q) {
    std::vector<FieldElement> out;
    out.reserve(w.size());
    for (const auto& e : w) out.push_back(frobenius_q(e, q));
    return out;
}

SubfieldParams subfield_params_bound(std::size_t n, std::size_t r, std::uint64_t d, std::uint32_t ell) {
    if (r > n) throw std::invalid_argument("codimension exceeds length");
    std::size_t lr = static_cast<std::size_t>(ell) * r;
    return {n, n > lr ? n - lr : 0, d};
}

}  // namespace carcode
