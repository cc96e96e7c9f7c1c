// Shared helpers and independent oracles for the test suites. Everything
// here stays deliberately naive: dense elimination with first-nonzero
// pivoting, permutation-matrix sums, recursive reduced-word enumeration,
// classical riffle shuffles. These are the second routes the library's
// results are checked against.
#pragma once

#include <map>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cocycle.hpp"
#include "nichols/common.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/perm.hpp"
#include "nichols/rack.hpp"
#include "nichols/sparse.hpp"

namespace testutil {

using nichols::ExactScalar;
using nichols::Permutation;
using nichols::SparseMatrix;
using nichols::SparseVec;

using Dense = std::vector<std::vector<ExactScalar>>;

inline Dense dense_of(const SparseMatrix& m) {
    Dense d(m.rows(), std::vector<ExactScalar>(m.cols(), ExactScalar::zero(m.modulus())));
    m.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { d[r][c] = v; });
    return d;
}

// Plain Gaussian elimination, first nonzero pivot, no sparsity tricks.
inline std::size_t dense_rank(Dense a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        ExactScalar inv = a[rank][col].inverse();
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            ExactScalar f = a[r][col] * inv;
            for (std::size_t c2 = col; c2 < cols; ++c2) {
                if (a[rank][c2].is_zero()) continue;
                a[r][c2] -= f * a[rank][c2];
            }
        }
        ++rank;
    }
    return rank;
}

inline SparseVec matvec(const SparseMatrix& m, const SparseVec& v) {
    SparseVec out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ExactScalar acc = ExactScalar::zero(m.modulus());
        for (const auto& [c, val] : m.row(r)) {
            auto it = v.find(c);
            if (it != v.end()) acc += val * it->second;
        }
        if (!acc.is_zero()) out.emplace(r, acc);
    }
    return out;
}

// All reduced words of w, built recursively from its right descents.
inline std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w(i) > w(i + 1)) {
            std::vector<std::size_t> shorter = w.one_line();
            std::swap(shorter[i], shorter[i + 1]);
            for (auto word : all_reduced_words(Permutation::from_one_line(shorter))) {
                word.push_back(static_cast<int>(i + 1));
                out.push_back(std::move(word));
            }
        }
    }
    return out;
}

// The operator permuting tensor positions by sigma: e_{w} -> e_{w'},
// w'(sigma(k)) = w(k). Together with a sign per inversion this is the
// independent route to Q_n for flip and uniform -1 diagonal braidings.
inline SparseMatrix position_permutation_matrix(std::size_t dim, std::size_t n, const Permutation& sigma,
                                                const ExactScalar& scale) {
    std::size_t total = nichols::checked_pow(dim, n);
    SparseMatrix m(total, total, scale.modulus());
    std::vector<std::size_t> digits(n), moved(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rem % dim;
            rem /= dim;
        }
        for (std::size_t k = 0; k < n; ++k) moved[sigma(k)] = digits[k];
        std::size_t target = 0;
        for (std::size_t k = 0; k < n; ++k) target = target * dim + moved[k];
        m.add_to(target, idx, scale);
    }
    return m;
}

// Sum over S_n of scale(sigma) * position permutation; with scale = 1
// this is the flip-braiding symmetrizer, with scale = (-1)^{l(sigma)}
// the uniform-(-1) diagonal one.
inline SparseMatrix permutation_sum_matrix(std::size_t dim, std::size_t n, bool signs) {
    std::size_t total = nichols::checked_pow(dim, n);
    SparseMatrix acc(total, total, 1);
    for (const auto& sigma : nichols::all_permutations(n)) {
        ExactScalar s = ExactScalar::integer(signs && (sigma.inversions() % 2 == 1) ? -1 : 1);
        SparseMatrix term = position_permutation_matrix(dim, n, sigma, s);
        term.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { acc.add_to(r, c, v); });
    }
    return acc;
}

// Classical sum over riffle interleavings of two basis words (flip
// braiding only): distribute the letters of u and v into all C(p+q,p)
// position choices, keeping each word's internal order.
inline SparseVec classical_shuffle(std::size_t dim, const std::vector<std::size_t>& u,
                                   const std::vector<std::size_t>& v) {
    std::size_t p = u.size(), q = v.size(), n = p + q;
    SparseVec out;
    std::vector<bool> take(n, false);
    std::vector<std::size_t> word(n);
    // iterate subsets of size p via combinations
    std::vector<std::size_t> pick(p);
    for (std::size_t i = 0; i < p; ++i) pick[i] = i;
    while (true) {
        std::fill(take.begin(), take.end(), false);
        for (std::size_t i = 0; i < p; ++i) take[pick[i]] = true;
        std::size_t iu = 0, iv = 0;
        for (std::size_t k = 0; k < n; ++k) word[k] = take[k] ? u[iu++] : v[iv++];
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k) idx = idx * dim + word[k];
        nichols::vec_add_to(out, idx, ExactScalar::one());
        if (p == 0) break;
        std::size_t i = p;
        while (i > 0 && pick[i - 1] == n - p + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Seeded random scalars: roots of unity of order <= 12 times a small
// nonzero rational.
inline ExactScalar random_root_scalar(nichols::Rng& rng, unsigned order = 12) {
    return ExactScalar::root_of_unity(order, rng.below(order));
}

inline ExactScalar random_rational(nichols::Rng& rng) {
    long num = static_cast<long>(rng.below(9)) - 4;
    long den = static_cast<long>(rng.below(4)) + 1;
    return ExactScalar(nichols::Rational(num, den), 1);
}

// Dihedral quandle on Z_n: x > y = 2x - y mod n.
inline nichols::Rack dihedral_rack(std::size_t n) {
    nichols::OpTable op(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) op[x][y] = (2 * x + (n - y % n)) % n;
    return nichols::Rack::from_table(std::move(op));
}

// A seeded valid (rack, cocycle) instance with |X| <= 4 and values among
// roots of unity of order <= 12: trivial racks carry arbitrary tables,
// the nontrivial racks carry constant cocycles (always cocycles).
inline std::pair<nichols::Rack, nichols::RackCocycle> random_rack_cocycle(nichols::Rng& rng) {
    std::size_t family = rng.below(4);
    if (family == 0) {
        std::size_t n = 1 + rng.below(4);
        nichols::Rack r = nichols::Rack::trivial(n);
        nichols::ScalarTable t(n, std::vector<ExactScalar>(n, ExactScalar::one(12)));
        for (auto& row : t)
            for (auto& v : row) v = random_root_scalar(rng);
        return {r, nichols::RackCocycle::from_table(std::move(t))};
    }
    if (family == 1) {
        std::size_t n = 3 + rng.below(2);  // dihedral quandle on 3 or 4 elements
        nichols::Rack r = dihedral_rack(n);
        return {r, nichols::RackCocycle::constant(n, random_root_scalar(rng))};
    }
    if (family == 2) {
        nichols::GroupTable s3 = nichols::symmetric_group(3);
        nichols::EmbeddedRack er = nichols::conjugation_rack(s3, {1, 2, 5});
        return {er.rack, nichols::RackCocycle::constant(3, random_root_scalar(rng))};
    }
    nichols::GroupTable s3 = nichols::symmetric_group(3);
    nichols::EmbeddedRack er = nichols::conjugation_rack(s3, {3, 4});  // the two 3-cycles
    return {er.rack, nichols::RackCocycle::constant(2, random_root_scalar(rng))};
}

inline nichols::SparseVec random_vector(nichols::Rng& rng, std::size_t dim_total, std::size_t terms,
                                        unsigned modulus) {
    SparseVec v;
    for (std::size_t t = 0; t < terms; ++t) {
        ExactScalar s = ExactScalar(nichols::Rational(static_cast<long>(rng.below(7)) - 3), 1);
        nichols::vec_add_to(v, rng.below(dim_total), s.embed_to(modulus));
    }
    return v;
}

}  // namespace testutil
