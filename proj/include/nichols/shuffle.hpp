// The braided (quantum) shuffle product on T(V): sum over the
// minimal-length coset representatives of (p,q)-shuffles, acting through
// the Matsumoto lifts. Its degree-n identity operator is Q_n, realized
// here as omega_component.
#pragma once

#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/common.hpp"
#include "nichols/perm.hpp"
#include "nichols/sparse.hpp"

namespace nichols {

// Permutations increasing on positions 0..p-1 and p..p+q-1 — the
// minimal-length representatives of the left S_p x S_q cosets —
// enumerated by the lexicographic choice of the first block's image.
inline std::vector<Permutation> shuffle_representatives(std::size_t p, std::size_t q) {
    std::size_t n = p + q;
    std::vector<Permutation> out;
    std::vector<std::size_t> pick(p);
    for (std::size_t i = 0; i < p; ++i) pick[i] = i;
    while (true) {
        std::vector<bool> used(n, false);
        std::vector<std::size_t> one_line(n);
        for (std::size_t i = 0; i < p; ++i) {
            one_line[i] = pick[i];
            used[pick[i]] = true;
        }
        std::size_t at = p;
        for (std::size_t v = 0; v < n; ++v)
            if (!used[v]) one_line[at++] = v;
        out.push_back(Permutation::from_one_line(std::move(one_line)));
        // next p-combination of {0..n-1} in lexicographic order
        std::size_t i = p;
        while (i > 0 && pick[i - 1] == n - p + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// u in V^(x)p, v in V^(x)q (a degree-0 factor is a scalar in coordinate
// 0). Returns the shuffle product in V^(x)(p+q).
inline SparseVec shuffle_product(const Braiding& c, const SparseVec& u, std::size_t p,
                                 const SparseVec& v, std::size_t q, const ComputeOptions& opts = {}) {
    std::size_t n = p + q;
    opts.budget.check_ambient(sat_pow(c.dim(), n), "shuffle_product");
    opts.budget.check_work(sat_mul(binomial(n, p), sat_pow(c.dim(), n)), "shuffle_product");
    if (p == 0 || q == 0) {
        const SparseVec& scalar = p == 0 ? u : v;
        const SparseVec& body = p == 0 ? v : u;
        ExactScalar s = ExactScalar::zero(c.modulus());
        for (const auto& [idx, val] : scalar) {
            if (idx != 0) throw input_error("shuffle: degree-0 factor has a nonzero coordinate");
            s = val;
        }
        SparseVec out;
        for (const auto& [idx, val] : body) vec_add_to(out, idx, s * val);
        return out;
    }
    std::size_t qpow = checked_pow(c.dim(), q);
    SparseVec uv;
    for (const auto& [iu, cu] : u)
        for (const auto& [iv, cv] : v) vec_add_to(uv, iu * qpow + iv, cu * cv);
    SparseVec acc;
    for (const Permutation& tau : shuffle_representatives(p, q)) {
        SparseVec term = braid_rep_apply(c, n, matsumoto_word(tau), uv);
        for (const auto& [idx, val] : term) vec_add_to(acc, idx, val);
    }
    return acc;
}

// Degree-n component of the algebra morphism from the tensor algebra to
// the shuffle algebra extending the identity of V; equals Q_n.
inline SparseMatrix omega_component(const Braiding& c, std::size_t n, const ComputeOptions& opts = {}) {
    return quantum_symmetrizer(c, n, opts);
}

}  // namespace nichols
