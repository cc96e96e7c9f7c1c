// Nichols-algebra graded dimensions, d-atic covers, the truncation of
// concrete graded algebras to degree d, and the extension functor on
// truncated data (graded dimensions of T(A)/J_A).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/common.hpp"
#include "nichols/graded.hpp"
#include "nichols/shuffle.hpp"
#include "nichols/sparse.hpp"

namespace nichols {

struct HilbertRow {
    std::size_t degree = 0;
    std::size_t dim = 0;
    bool exact = true;  // false marks a budget-truncated degree (dim meaningless)
};

struct HilbertPrefix {
    std::vector<HilbertRow> rows;
    bool truncated = false;

    // exact dims only; stops at the first truncated row
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& r : rows) {
            if (!r.exact) break;
            out.push_back(r.dim);
        }
        return out;
    }
};

namespace detail {

// Run `value(n)` for n = 1..N after a fixed row for degree 0; a budget
// failure flags the remaining prefix as truncated instead of failing.
template <typename F>
inline HilbertPrefix degree_table(std::size_t N, F&& value) {
    HilbertPrefix h;
    h.rows.push_back(HilbertRow{0, 1, true});
    for (std::size_t n = 1; n <= N; ++n) {
        try {
            h.rows.push_back(HilbertRow{n, value(n), true});
        } catch (const budget_error&) {
            h.rows.push_back(HilbertRow{n, 0, false});
            h.truncated = true;
            break;
        }
    }
    return h;
}

}  // namespace detail

// dims[n] = rank Q_n: the graded dimensions of T(V)/(+) ker(Q_n).
inline HilbertPrefix nichols_dims(const Braiding& c, std::size_t N, const ComputeOptions& opts = {}) {
    return detail::degree_table(N, [&](std::size_t n) { return symmetrizer_rank(c, n, opts); });
}

// Relations of the d-atic cover: kernels of Q_2..Q_d in degree-1 words.
inline RelationSet cover_relations(const Braiding& c, std::size_t d, const ComputeOptions& opts = {}) {
    RelationSet rels;
    rels.modulus = c.modulus();
    for (std::size_t j = 2; j <= d; ++j) {
        SparseMatrix qj = quantum_symmetrizer(c, j, opts);
        for (auto& v : nullspace_basis(qj)) rels.add(j, std::move(v));
    }
    return rels;
}

// Graded dimensions of T(V) / (ker Q_2 + ... + ker Q_d).
inline HilbertPrefix cover_dims(const Braiding& c, std::size_t d, std::size_t N,
                                const ComputeOptions& opts = {}) {
    if (d < 1) throw input_error("cover: d must be >= 1");
    GradedGenerators gens{{c.dim()}};
    RelationSet rels = cover_relations(c, d, opts);
    return detail::degree_table(N, [&](std::size_t n) {
        WordBasis wb(gens, n);
        opts.budget.check_ambient(wb.total(), "cover_dims");
        return wb.total() - ideal_component_dim(gens, rels, n, opts);
    });
}

struct CoverCheck {
    bool agree = true;
    std::size_t mismatch_degree = 0;
    std::size_t cover_dim = 0, nichols_dim = 0;
    std::size_t checked_up_to = 0;  // largest degree compared exactly
    bool truncated = false;
    HilbertPrefix cover, nichols;

    std::string verdict() const {
        if (!agree)
            return "mismatch at degree " + std::to_string(mismatch_degree) + " (cover " +
                   std::to_string(cover_dim) + " vs nichols " + std::to_string(nichols_dim) + ")";
        return "agree up to degree " + std::to_string(checked_up_to);
    }
};

// Degree-by-degree comparison; a mismatch at n certifies a relation of
// degree > d within range, agreement up to N is reported as exactly that.
inline CoverCheck cover_check(const Braiding& c, std::size_t d, std::size_t N,
                              const ComputeOptions& opts = {}) {
    CoverCheck out;
    out.cover = cover_dims(c, d, N, opts);
    out.nichols = nichols_dims(c, N, opts);
    std::size_t upto = 0;
    for (std::size_t k = 0; k < out.cover.rows.size() && k < out.nichols.rows.size(); ++k) {
        const auto& cr = out.cover.rows[k];
        const auto& nr = out.nichols.rows[k];
        if (!cr.exact || !nr.exact) break;
        if (cr.dim != nr.dim && out.agree) {
            out.agree = false;
            out.mismatch_degree = cr.degree;
            out.cover_dim = cr.dim;
            out.nichols_dim = nr.dim;
        }
        upto = cr.degree;
    }
    out.checked_up_to = upto;
    out.truncated = (out.cover.truncated || out.nichols.truncated) && upto < N;
    return out;
}

// Graded components A_1..A_d as dimensions plus multiplication tables
// m[i][j] : A_i (x) A_j -> A_{i+j} for i+j <= d; products of total
// degree > d are zero and never stored, the unit is implicit.
struct TruncatedBialgebra {
    std::size_t d = 0;
    unsigned modulus = 1;
    std::vector<std::size_t> dims;  // dims[i-1] = dim A_i
    std::map<std::pair<std::size_t, std::size_t>, SparseMatrix> tables;

    std::size_t dim_at(std::size_t i) const { return (i >= 1 && i <= d) ? dims[i - 1] : 0; }

    const SparseMatrix& table(std::size_t i, std::size_t j) const {
        auto it = tables.find({i, j});
        if (it == tables.end()) throw input_error("truncated bialgebra: missing table m[" +
                                                  std::to_string(i) + "][" + std::to_string(j) + "]");
        return it->second;
    }

    // Associativity where defined: for i+j+k <= d the two bracketings of
    // m agree as matrices on A_i (x) A_j (x) A_k.
    void validate() const {
        if (dims.size() != d) throw input_error("truncated bialgebra: dims size != d");
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 1; i + j <= d; ++j) {
                const SparseMatrix& m = table(i, j);
                if (m.rows() != dim_at(i + j) || m.cols() != dim_at(i) * dim_at(j))
                    throw input_error("truncated bialgebra: table m[" + std::to_string(i) + "][" +
                                      std::to_string(j) + "] has wrong shape");
            }
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 1; i + j < d; ++j)
                for (std::size_t k = 1; i + j + k <= d; ++k) {
                    SparseMatrix lhs = matmul(table(i + j, k), kron_id_right(table(i, j), dim_at(k)));
                    SparseMatrix rhs = matmul(table(i, j + k), kron_id_left(dim_at(i), table(j, k)));
                    if (!(lhs == rhs))
                        throw input_error("truncated bialgebra: associativity fails on degrees (" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
                }
    }
};

enum class AlgebraTag { tensor, shuffle, nichols };

inline const char* algebra_tag_name(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::tensor: return "tensor";
        case AlgebraTag::shuffle: return "shuffle";
        default: return "nichols";
    }
}

inline AlgebraTag algebra_tag_from(const std::string& s) {
    if (s == "tensor") return AlgebraTag::tensor;
    if (s == "shuffle") return AlgebraTag::shuffle;
    if (s == "nichols") return AlgebraTag::nichols;
    throw input_error("unknown algebra tag '" + s + "'");
}

// Degree-<=d part of the tensor algebra, the shuffle algebra, or the
// Nichols algebra of the braiding, with its multiplication tables.
inline TruncatedBialgebra truncate_graded_algebra(const Braiding& c, AlgebraTag tag, std::size_t d,
                                                  const ComputeOptions& opts = {}) {
    if (d < 1) throw input_error("truncate: d must be >= 1");
    TruncatedBialgebra a;
    a.d = d;
    a.modulus = c.modulus();
    if (tag == AlgebraTag::tensor || tag == AlgebraTag::shuffle) {
        for (std::size_t i = 1; i <= d; ++i) {
            std::size_t total = sat_pow(c.dim(), i);
            opts.budget.check_ambient(total, "truncate_graded_algebra");
            a.dims.push_back(checked_pow(c.dim(), i));
        }
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 1; i + j <= d; ++j) {
                std::size_t rows = a.dims[i + j - 1], cols = a.dims[i - 1] * a.dims[j - 1];
                SparseMatrix m(rows, cols, a.modulus);
                if (tag == AlgebraTag::tensor) {
                    for (std::size_t k = 0; k < rows; ++k) m.set(k, k, ExactScalar::one(a.modulus));
                } else {
                    for (std::size_t u = 0; u < a.dims[i - 1]; ++u)
                        for (std::size_t v = 0; v < a.dims[j - 1]; ++v) {
                            SparseVec eu, ev;
                            eu.emplace(u, ExactScalar::one(a.modulus));
                            ev.emplace(v, ExactScalar::one(a.modulus));
                            SparseVec prod = shuffle_product(c, eu, i, ev, j, opts);
                            for (const auto& [r, val] : prod) m.set(r, u * a.dims[j - 1] + v, val);
                        }
                }
                a.tables.emplace(std::make_pair(i, j), std::move(m));
            }
        return a;
    }
    // nichols: A_i realized as the image of Q_i, basis = columns of Q_i
    // at its pivot columns; the product of Q_i(e_u) and Q_j(e_v) is
    // represented by Q_{i+j}(e_u (x) e_v).
    std::vector<SparseMatrix> q(d + 1);          // Q_i
    std::vector<std::vector<std::size_t>> piv(d + 1);
    std::vector<SparseMatrix> image(d + 1);      // ambient x rank, columns Q_i(e_w)
    for (std::size_t i = 1; i <= d; ++i) {
        q[i] = quantum_symmetrizer(c, i, opts);
        Rref r = rref(q[i]);
        piv[i] = r.pivot_cols;
        a.dims.push_back(piv[i].size());
        image[i] = SparseMatrix(q[i].rows(), piv[i].size(), a.modulus);
        for (std::size_t k = 0; k < piv[i].size(); ++k)
            for (std::size_t row = 0; row < q[i].rows(); ++row) {
                ExactScalar val = q[i].get(row, piv[i][k]);
                if (!val.is_zero()) image[i].set(row, k, val);
            }
    }
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; i + j <= d; ++j) {
            std::size_t qcols = checked_pow(c.dim(), j);
            SparseMatrix targets(q[i + j].rows(), piv[i].size() * piv[j].size(), a.modulus);
            for (std::size_t u = 0; u < piv[i].size(); ++u)
                for (std::size_t v = 0; v < piv[j].size(); ++v) {
                    std::size_t word = piv[i][u] * qcols + piv[j][v];
                    for (std::size_t row = 0; row < q[i + j].rows(); ++row) {
                        ExactScalar val = q[i + j].get(row, word);
                        if (!val.is_zero()) targets.set(row, u * piv[j].size() + v, val);
                    }
                }
            a.tables.emplace(std::make_pair(i, j), solve_in_span(image[i + j], targets));
        }
    return a;
}

// Relations of J_A in the free algebra on A_1..A_d: one generator
// (x (x) y) - m[i][j](x (x) y) per pair of basis elements with
// i + j <= d; the unit identification is structural (degree-0 factors
// are never stored). Products of total degree > d stay free.
inline RelationSet extension_relations(const TruncatedBialgebra& a) {
    GradedGenerators gens{a.dims};
    RelationSet rels;
    rels.modulus = a.modulus;
    for (std::size_t i = 1; i <= a.d; ++i)
        for (std::size_t j = 1; i + j <= a.d; ++j) {
            const SparseMatrix& m = a.table(i, j);
            WordBasis wb(gens, i + j);
            std::size_t pair_block = wb.block_index({i, j});
            std::size_t single_block = wb.block_index({i + j});
            for (std::size_t x = 0; x < a.dim_at(i); ++x)
                for (std::size_t y = 0; y < a.dim_at(j); ++y) {
                    SparseVec rel;
                    rel.emplace(wb.encode(gens, pair_block, {x, y}), ExactScalar::one(a.modulus));
                    std::size_t col = x * a.dim_at(j) + y;
                    for (std::size_t z = 0; z < a.dim_at(i + j); ++z) {
                        ExactScalar val = m.get(z, col);
                        if (!val.is_zero())
                            vec_add_to(rel, wb.encode(gens, single_block, {z}), -val);
                    }
                    rels.add(i + j, std::move(rel));
                }
        }
    return rels;
}

// Graded dimensions of T(A)/J_A.
inline HilbertPrefix extension_dims(const TruncatedBialgebra& a, std::size_t N,
                                    const ComputeOptions& opts = {}) {
    a.validate();
    GradedGenerators gens{a.dims};
    RelationSet rels = extension_relations(a);
    return detail::degree_table(N, [&](std::size_t n) {
        WordBasis wb(gens, n);
        opts.budget.check_ambient(wb.total(), "extension_dims");
        return wb.total() - ideal_component_dim(gens, rels, n, opts);
    });
}

// F_d on dimensions: extension of the d-th truncation.
inline HilbertPrefix approximation_dims(const Braiding& c, AlgebraTag tag, std::size_t d, std::size_t N,
                                        const ComputeOptions& opts = {}) {
    return extension_dims(truncate_graded_algebra(c, tag, d, opts), N, opts);
}

}  // namespace nichols
