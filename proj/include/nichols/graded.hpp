// Combinatorics of graded tensor words over a graded generator space,
// and dimensions of two-sided ideal components in the free algebra.
#pragma once

#include <map>
#include <vector>

#include "nichols/common.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/sparse.hpp"

namespace nichols {

// dims[i-1] = dimension of the generator space in degree i.
struct GradedGenerators {
    std::vector<std::size_t> dims;

    std::size_t max_degree() const { return dims.size(); }
    std::size_t dim_at(std::size_t degree) const {
        return (degree >= 1 && degree <= dims.size()) ? dims[degree - 1] : 0;
    }
};

// Basis of the degree-n component of the free graded algebra:
// compositions of n with parts in 1..max_degree (lexicographic), then
// product indices in lexicographic (leftmost-major) order.
class WordBasis {
public:
    struct Block {
        std::vector<std::size_t> comp;
        std::size_t offset = 0;
        std::size_t size = 0;
    };

    WordBasis(const GradedGenerators& gens, std::size_t degree) : degree_(degree) {
        std::vector<std::size_t> prefix;
        build(gens, degree, prefix);
        std::size_t off = 0;
        for (auto& b : blocks_) {
            b.offset = off;
            off += b.size;
        }
        total_ = off;
        for (std::size_t i = 0; i < blocks_.size(); ++i) block_of_comp_[blocks_[i].comp] = i;
    }

    std::size_t degree() const { return degree_; }
    std::size_t total() const { return total_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    std::size_t block_index(const std::vector<std::size_t>& comp) const {
        auto it = block_of_comp_.find(comp);
        if (it == block_of_comp_.end()) throw input_error("word basis: unknown composition");
        return it->second;
    }

    // (block, per-part letter indices) -> flat coordinate
    std::size_t encode(const GradedGenerators& gens, std::size_t block,
                       const std::vector<std::size_t>& letters) const {
        const Block& b = blocks_[block];
        if (letters.size() != b.comp.size()) throw input_error("word basis: letter count mismatch");
        std::size_t idx = 0;
        for (std::size_t k = 0; k < letters.size(); ++k) {
            std::size_t d = gens.dim_at(b.comp[k]);
            if (letters[k] >= d) throw input_error("word basis: letter index out of range");
            idx = idx * d + letters[k];
        }
        return b.offset + idx;
    }

    // flat coordinate -> (block, letters)
    std::pair<std::size_t, std::vector<std::size_t>> decode(const GradedGenerators& gens,
                                                            std::size_t coord) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const Block& b = blocks_[i];
            if (coord < b.offset || coord >= b.offset + b.size) continue;
            std::size_t rem = coord - b.offset;
            std::vector<std::size_t> letters(b.comp.size());
            for (std::size_t k = b.comp.size(); k-- > 0;) {
                std::size_t d = gens.dim_at(b.comp[k]);
                letters[k] = rem % d;
                rem /= d;
            }
            return {i, std::move(letters)};
        }
        throw input_error("word basis: coordinate out of range");
    }

private:
    void build(const GradedGenerators& gens, std::size_t remaining, std::vector<std::size_t>& prefix) {
        if (remaining == 0) {
            std::size_t size = 1;
            for (std::size_t p : prefix) size *= gens.dim_at(p);
            blocks_.push_back(Block{prefix, 0, size});
            return;
        }
        for (std::size_t p = 1; p <= gens.max_degree() && p <= remaining; ++p) {
            prefix.push_back(p);
            build(gens, remaining - p, prefix);
            prefix.pop_back();
        }
    }

    std::size_t degree_;
    std::size_t total_ = 0;
    std::vector<Block> blocks_;
    std::map<std::vector<std::size_t>, std::size_t> block_of_comp_;
};

inline WordBasis word_basis(const GradedGenerators& gens, std::size_t degree) {
    return WordBasis(gens, degree);
}

// Homogeneous relation vectors per degree, in word-basis coordinates.
struct RelationSet {
    unsigned modulus = 1;
    std::map<std::size_t, std::vector<SparseVec>> by_degree;

    void add(std::size_t degree, SparseVec v) {
        if (degree == 0) throw input_error("relations: degree must be positive");
        if (!v.empty()) by_degree[degree].push_back(std::move(v));
    }
    bool empty() const { return by_degree.empty(); }
};

// Dimension of the degree-n component of the two-sided ideal generated
// by the relations: the span of all placements u (x) r (x) v with
// deg u + deg r + deg v = n, u and v running over basis words. For a
// homogeneous generating subspace of a free algebra those placements
// span the ideal componentwise.
inline std::size_t ideal_component_dim(const GradedGenerators& gens, const RelationSet& rels,
                                       std::size_t n, const ComputeOptions& opts = {}) {
    WordBasis target(gens, n);
    opts.budget.check_ambient(target.total(), "ideal_component_dim");
    std::vector<WordBasis> wb;  // word bases for degrees 0..n
    wb.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) wb.emplace_back(gens, k);
    // decoded words per degree: (composition, letters)
    struct Word {
        std::vector<std::size_t> comp, letters;
    };
    std::vector<std::vector<Word>> words(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        words[k].reserve(wb[k].total());
        for (std::size_t coord = 0; coord < wb[k].total(); ++coord) {
            auto [blk, letters] = wb[k].decode(gens, coord);
            words[k].push_back(Word{wb[k].blocks()[blk].comp, std::move(letters)});
        }
    }
    std::vector<SparseVec> placed;
    for (const auto& [j, rvecs] : rels.by_degree) {
        if (j > n) continue;
        std::vector<std::vector<std::pair<Word, ExactScalar>>> decoded(rvecs.size());
        for (std::size_t ri = 0; ri < rvecs.size(); ++ri) {
            for (const auto& [idx, coeff] : rvecs[ri]) {
                auto [blk, letters] = wb[j].decode(gens, idx);
                decoded[ri].push_back({Word{wb[j].blocks()[blk].comp, std::move(letters)}, coeff});
            }
        }
        for (std::size_t a = 0; a + j <= n; ++a) {
            std::size_t b = n - j - a;
            for (const Word& u : words[a]) {
                for (const Word& v : words[b]) {
                    for (const auto& rel : decoded) {
                        SparseVec out;
                        for (const auto& [rw, coeff] : rel) {
                            std::vector<std::size_t> comp = u.comp;
                            comp.insert(comp.end(), rw.comp.begin(), rw.comp.end());
                            comp.insert(comp.end(), v.comp.begin(), v.comp.end());
                            std::vector<std::size_t> letters = u.letters;
                            letters.insert(letters.end(), rw.letters.begin(), rw.letters.end());
                            letters.insert(letters.end(), v.letters.begin(), v.letters.end());
                            vec_add_to(out, target.encode(gens, target.block_index(comp), letters),
                                       coeff);
                        }
                        if (!out.empty()) placed.push_back(std::move(out));
                    }
                }
            }
        }
    }
    return span_rank(placed, target.total(), rels.modulus);
}

// Graded dimensions of the quotient of the free algebra by the two-sided
// ideal the relations generate; degree 0 is always 1.
inline std::vector<std::size_t> quotient_dims(const GradedGenerators& gens, const RelationSet& rels,
                                              std::size_t N, const ComputeOptions& opts = {}) {
    std::vector<std::size_t> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        WordBasis wbn(gens, n);
        opts.budget.check_ambient(wbn.total(), "quotient_dims");
        out.push_back(wbn.total() - ideal_component_dim(gens, rels, n, opts));
    }
    return out;
}

}  // namespace nichols
