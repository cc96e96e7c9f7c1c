// Sparse vectors and matrices over ExactScalar; exact rank, RREF,
// nullspace, and span computations via fraction-preserving elimination.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nichols/common.hpp"
#include "nichols/cyclotomic.hpp"

namespace nichols {

// index -> nonzero scalar; absent means zero
using SparseVec = std::map<std::size_t, ExactScalar>;

inline void vec_set(SparseVec& v, std::size_t i, const ExactScalar& s) {
    if (s.is_zero()) v.erase(i);
    else v[i] = s;
}

inline void vec_add_to(SparseVec& v, std::size_t i, const ExactScalar& s) {
    if (s.is_zero()) return;
    auto it = v.find(i);
    if (it == v.end()) {
        v.emplace(i, s);
    } else {
        it->second += s;
        if (it->second.is_zero()) v.erase(it);
    }
}

// dst -= factor * src. A column known to cancel exactly may be named in
// skip_col and is erased without arithmetic.
inline void vec_submul(SparseVec& dst, const ExactScalar& factor, const SparseVec& src,
                       std::size_t skip_col = static_cast<std::size_t>(-1)) {
    for (const auto& [c, v] : src) {
        if (c == skip_col) {
            dst.erase(c);
            continue;
        }
        ExactScalar t = factor * v;
        if (t.is_zero()) continue;
        auto it = dst.find(c);
        if (it == dst.end()) {
            dst.emplace(c, -t);
        } else {
            it->second -= t;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0), modulus_(1) {}
    SparseMatrix(std::size_t rows, std::size_t cols, unsigned modulus = 1)
        : rows_(rows), cols_(cols), modulus_(modulus), data_(rows) {}

    static SparseMatrix identity(std::size_t n, unsigned modulus = 1) {
        SparseMatrix m(n, n, modulus);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, ExactScalar::one(modulus));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned modulus() const { return modulus_; }

    void set(std::size_t r, std::size_t c, const ExactScalar& v) {
        check_index(r, c);
        check_modulus(v);
        vec_set(data_[r], c, v);
    }

    void add_to(std::size_t r, std::size_t c, const ExactScalar& v) {
        check_index(r, c);
        check_modulus(v);
        vec_add_to(data_[r], c, v);
    }

    ExactScalar get(std::size_t r, std::size_t c) const {
        check_index(r, c);
        auto it = data_[r].find(c);
        return it == data_[r].end() ? ExactScalar::zero(modulus_) : it->second;
    }

    const SparseVec& row(std::size_t r) const { return data_[r]; }

    void set_row(std::size_t r, SparseVec v) {
        if (r >= rows_) throw input_error("sparse: row out of range");
        data_[r] = std::move(v);
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    // Deterministic (row-major) entry traversal.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) f(r, c, v);
    }

    SparseMatrix embedded_to(unsigned target) const {
        SparseMatrix out(rows_, cols_, target);
        for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) {
            out.set(r, c, v.embed_to(target));
        });
        return out;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.modulus_ == b.modulus_ && a.data_ == b.data_;
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw input_error("sparse: index out of range");
    }
    void check_modulus(const ExactScalar& v) const {
        if (v.modulus() != modulus_)
            throw input_error("sparse: entry modulus " + std::to_string(v.modulus()) +
                              " does not match matrix modulus " + std::to_string(modulus_));
    }

    std::size_t rows_, cols_;
    unsigned modulus_;
    std::vector<SparseVec> data_;
};

namespace detail {

// Column sweep with the pivot chosen as the candidate row of least
// current fill (Q_n blocks are sparse; fill-in dominates runtime).
// If reduce_fully is set, produces normalized RREF rows.
struct Elimination {
    std::vector<SparseVec> pivot_rows;
    std::vector<std::size_t> pivot_cols;

    Elimination(const SparseMatrix& m, bool reduce_fully) {
        std::vector<SparseVec> work;
        work.reserve(m.rows());
        std::vector<std::size_t> active;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!m.row(r).empty()) {
                work.push_back(m.row(r));
                active.push_back(work.size() - 1);
            }
        }
        for (std::size_t col = 0; col < m.cols(); ++col) {
            std::size_t best = static_cast<std::size_t>(-1), best_pos = 0;
            std::vector<std::size_t> hits;
            for (std::size_t pos = 0; pos < active.size(); ++pos) {
                std::size_t r = active[pos];
                if (work[r].count(col)) {
                    hits.push_back(pos);
                    if (best == static_cast<std::size_t>(-1) || work[r].size() < work[best].size()) {
                        best = r;
                        best_pos = pos;
                    }
                }
            }
            if (best == static_cast<std::size_t>(-1)) continue;
            ExactScalar inv = work[best].at(col).inverse();
            if (reduce_fully) {
                for (auto& [c, v] : work[best]) v *= inv;
                for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
                    auto it = pivot_rows[i].find(col);
                    if (it != pivot_rows[i].end()) {
                        ExactScalar f = it->second;
                        vec_submul(pivot_rows[i], f, work[best], col);
                    }
                }
            }
            for (std::size_t pos : hits) {
                std::size_t r = active[pos];
                if (r == best) continue;
                ExactScalar f = work[r].at(col);
                if (!reduce_fully) f *= inv;
                vec_submul(work[r], f, work[best], col);
            }
            pivot_rows.push_back(std::move(work[best]));
            pivot_cols.push_back(col);
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_pos));
            active.erase(std::remove_if(active.begin(), active.end(),
                                        [&](std::size_t r) { return work[r].empty(); }),
                         active.end());
        }
    }
};

}  // namespace detail

inline std::size_t rank(const SparseMatrix& m) {
    return detail::Elimination(m, /*reduce_fully=*/false).pivot_cols.size();
}

struct Rref {
    std::vector<SparseVec> rows;        // normalized, in pivot-column order
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;
};

inline Rref rref(const SparseMatrix& m) {
    detail::Elimination e(m, /*reduce_fully=*/true);
    return Rref{std::move(e.pivot_rows), std::move(e.pivot_cols), m.cols()};
}

// Exact basis of the right kernel { v : M v = 0 }, one vector per free
// column, enumerated in ascending column order and normalized so the
// lowest-index coordinate of each vector is 1.
inline std::vector<SparseVec> nullspace_basis(const SparseMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v.emplace(f, ExactScalar::one(m.modulus()));
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            auto it = r.rows[i].find(f);
            if (it != r.rows[i].end()) v.emplace(r.pivot_cols[i], -it->second);
        }
        ExactScalar lead = v.begin()->second;
        if (!lead.is_one()) {
            ExactScalar inv = lead.inverse();
            for (auto& [idx, val] : v) val = val * inv;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t span_rank(const std::vector<SparseVec>& vectors, std::size_t ambient_dim,
                             unsigned modulus) {
    SparseMatrix m(vectors.size(), ambient_dim, modulus);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (const auto& [c, v] : vectors[i]) {
            if (c >= ambient_dim) throw input_error("span_rank: coordinate out of range");
            m.set(i, c, v);
        }
    }
    return rank(m);
}

inline SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw input_error("matmul: shape mismatch");
    if (a.modulus() != b.modulus()) throw input_error("matmul: mixed moduli (embed explicitly)");
    SparseMatrix out(a.rows(), b.cols(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& [k, av] : a.row(r))
            for (const auto& [c, bv] : b.row(k)) out.add_to(r, c, av * bv);
    return out;
}

// I_k (x) M
inline SparseMatrix kron_id_left(std::size_t k, const SparseMatrix& m) {
    SparseMatrix out(k * m.rows(), k * m.cols(), m.modulus());
    for (std::size_t i = 0; i < k; ++i)
        m.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) {
            out.set(i * m.rows() + r, i * m.cols() + c, v);
        });
    return out;
}

// M (x) I_k
inline SparseMatrix kron_id_right(const SparseMatrix& m, std::size_t k) {
    SparseMatrix out(m.rows() * k, m.cols() * k, m.modulus());
    m.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) {
        for (std::size_t i = 0; i < k; ++i) out.set(r * k + i, c * k + i, v);
    });
    return out;
}

// Coordinates of target columns in the column span of `basis`
// (solves basis * X = targets; throws if some target falls outside).
inline SparseMatrix solve_in_span(const SparseMatrix& basis, const SparseMatrix& targets) {
    if (basis.rows() != targets.rows()) throw input_error("solve_in_span: ambient mismatch");
    if (basis.modulus() != targets.modulus()) throw input_error("solve_in_span: mixed moduli");
    SparseMatrix aug(basis.rows(), basis.cols() + targets.cols(), basis.modulus());
    basis.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) { aug.set(r, c, v); });
    targets.for_each(
        [&](std::size_t r, std::size_t c, const ExactScalar& v) { aug.set(r, basis.cols() + c, v); });
    Rref r = rref(aug);
    for (std::size_t p : r.pivot_cols)
        if (p >= basis.cols()) throw input_error("solve_in_span: target outside span");
    SparseMatrix coords(basis.cols(), targets.cols(), basis.modulus());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        for (const auto& [c, v] : r.rows[i]) {
            if (c >= basis.cols()) coords.set(r.pivot_cols[i], c - basis.cols(), v);
        }
    }
    return coords;
}

}  // namespace nichols
