// The explicit braid-representation intertwiner between twist-equivalent
// rack cocycles, and the dimension-level invariance checks it implies.
#pragma once

#include <string>
#include <vector>

#include "nichols/approx.hpp"
#include "nichols/braiding.hpp"
#include "nichols/cocycle.hpp"
#include "nichols/common.hpp"
#include "nichols/rack.hpp"

namespace nichols {

// Diagonal on the rack-word basis of (kX)^(x)n, with entry at
// (x_1,...,x_n) the product of sigma(x_i, x_{i+1} ... x_n) over
// i = 1..n-1, the tail products taken left to right in G.
struct Intertwiner {
    std::size_t strands = 0;
    std::size_t dim = 0;
    unsigned modulus = 1;
    std::vector<ExactScalar> diag;
};

inline Intertwiner intertwiner_matrix(const EmbeddedRack& er, const GroupCocycle& sigma, std::size_t n,
                                      const ComputeOptions& opts = {}) {
    if (sigma.size() != er.group.size()) throw input_error("intertwiner: sigma size does not match group");
    if (n < 1) throw input_error("intertwiner: n must be >= 1");
    std::size_t dim = er.rack.size();
    std::size_t total = sat_pow(dim, n);
    opts.budget.check_ambient(total, "intertwiner_matrix");
    Intertwiner f;
    f.strands = n;
    f.dim = dim;
    f.modulus = sigma.modulus;
    f.diag.reserve(total);
    std::vector<std::size_t> digits(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rem % dim;
            rem /= dim;
        }
        // suffix products in G: tail[k] = x_{k+1} ... x_n
        ExactScalar entry = ExactScalar::one(sigma.modulus);
        if (n >= 2) {
            std::size_t tail = er.to_group[digits[n - 1]];
            for (std::size_t k = n - 1; k-- > 0;) {
                entry *= sigma.value(er.to_group[digits[k]], tail);
                tail = er.group.mul(er.to_group[digits[k]], tail);
            }
        }
        f.diag.push_back(entry);
    }
    return f;
}

struct IntertwineCheck {
    bool ok = true;
    std::size_t generator = 0;    // offending sigma_j
    std::size_t basis_index = 0;  // offending basis word
    std::string message;
};

// rho_n(sigma_j) f = f rho'_n(sigma_j) for every generator j, compared
// exactly column by column. Both representations are monomial, so the
// column of sigma_j at the basis word w is q(x_j, x_{j+1}) e_{w'} with
// w' the rack-braided word; the comparison never assumes q' is a valid
// cocycle, which is what lets a corrupted table be caught here.
inline IntertwineCheck verify_intertwining(const EmbeddedRack& er, const RackCocycle& q,
                                           const RackCocycle& q_prime, const GroupCocycle& sigma,
                                           std::size_t n, const ComputeOptions& opts = {}) {
    if (n < 2) throw input_error("verify_intertwining: n must be >= 2");
    if (q.size() != er.rack.size() || q_prime.size() != er.rack.size())
        throw input_error("verify_intertwining: cocycle size does not match rack");
    unsigned l = lcm_modulus(lcm_modulus(q.modulus, q_prime.modulus), sigma.modulus);
    GroupCocycle sig;
    {
        ScalarTable t = sigma.sigma;
        for (auto& row : t)
            for (auto& v : row) v = v.embed_to(l);
        sig = GroupCocycle::from_table(std::move(t));
    }
    Intertwiner f = intertwiner_matrix(er, sig, n, opts);
    std::size_t dim = er.rack.size(), total = f.diag.size();
    std::vector<std::size_t> digits(n);
    for (std::size_t b = 0; b < total; ++b) {
        std::size_t rem = b;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rem % dim;
            rem /= dim;
        }
        for (std::size_t j = 1; j + 1 <= n; ++j) {
            std::size_t x = digits[j - 1], y = digits[j];
            // b' = b with (x, y) replaced by (x > y, x) at positions j-1, j
            std::size_t s2 = checked_pow(dim, n - j - 1), s1 = s2 * dim;
            std::size_t bp = b - x * s1 - y * s2 + er.rack.apply(x, y) * s1 + x * s2;
            ExactScalar lhs = f.diag[b] * q.value(x, y).embed_to(l);
            ExactScalar rhs = f.diag[bp] * q_prime.value(x, y).embed_to(l);
            if (!(lhs == rhs)) {
                IntertwineCheck r;
                r.ok = false;
                r.generator = j;
                r.basis_index = b;
                r.message = "intertwining fails for sigma_" + std::to_string(j) + " on basis word " +
                            std::to_string(b);
                return r;
            }
        }
    }
    return IntertwineCheck{};
}

struct TwistInvarianceReport {
    RackCocycle q_prime;
    CocycleCheck q_prime_valid;
    HilbertPrefix q_dims, q_prime_dims;
    CoverCheck q_cover, q_prime_cover;
    std::size_t intertwiner_verified_up_to = 0;  // largest n with the identity verified
    bool dims_equal = true;
    bool verdicts_equal = true;

    bool all_equal() const { return dims_equal && verdicts_equal; }
};

// Computes q' = twist(q, sigma) and compares both Nichols dimension
// tables, both cover tables, and the cover verdicts; also runs the
// intertwiner identity for 2 <= n <= N within budget.
inline TwistInvarianceReport twist_invariance_check(const EmbeddedRack& er, const RackCocycle& q,
                                                    const GroupCocycle& sigma, std::size_t d,
                                                    std::size_t N, const ComputeOptions& opts = {}) {
    TwistResult tw = twist_rack_cocycle(er, q, sigma);
    TwistInvarianceReport rep;
    rep.q_prime = tw.q_prime;
    rep.q_prime_valid = tw.validation;
    Braiding c = Braiding::from_rack(er.rack, q);
    Braiding cp = Braiding::from_rack(er.rack, tw.q_prime);
    rep.q_dims = nichols_dims(c, N, opts);
    rep.q_prime_dims = nichols_dims(cp, N, opts);
    rep.q_cover = cover_check(c, d, N, opts);
    rep.q_prime_cover = cover_check(cp, d, N, opts);
    rep.dims_equal = rep.q_dims.dims() == rep.q_prime_dims.dims() &&
                     rep.q_cover.cover.dims() == rep.q_prime_cover.cover.dims();
    rep.verdicts_equal = rep.q_cover.agree == rep.q_prime_cover.agree &&
                         (rep.q_cover.agree || rep.q_cover.mismatch_degree == rep.q_prime_cover.mismatch_degree);
    for (std::size_t n = 2; n <= N; ++n) {
        try {
            IntertwineCheck chk = verify_intertwining(er, q, tw.q_prime, sigma, n, opts);
            if (!chk.ok) break;
            rep.intertwiner_verified_up_to = n;
        } catch (const budget_error&) {
            break;
        }
    }
    return rep;
}

}  // namespace nichols
