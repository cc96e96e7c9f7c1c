#include <doctest.h>

#include "nichols/braiding.hpp"
#include "nichols/common.hpp"
#include "nichols/graded.hpp"
#include "nichols/shuffle.hpp"
#include "test_util.hpp"

using nichols::Braiding;
using nichols::ExactScalar;
using nichols::GradedGenerators;
using nichols::quantum_symmetrizer;
using nichols::RelationSet;
using nichols::shuffle_product;
using nichols::SparseVec;
using nichols::WordBasis;

namespace {

Braiding flip(std::size_t dim) {
    return Braiding::diagonal(nichols::ScalarTable(dim, std::vector<ExactScalar>(dim, ExactScalar::one())));
}

Braiding sign_line() {
    return Braiding::diagonal(nichols::ScalarTable(1, {ExactScalar::integer(-1)}));
}

SparseVec unit(std::size_t idx, unsigned modulus = 1) {
    return SparseVec{{idx, ExactScalar::one(modulus)}};
}

}  // namespace

TEST_CASE("word basis enumeration and dimensions") {
    GradedGenerators degree1{{3}};
    CHECK(WordBasis(degree1, 3).total() == 27);
    GradedGenerators xs{{1, 1}};
    WordBasis wb3(xs, 3);
    CHECK(wb3.total() == 3);
    REQUIRE(wb3.blocks().size() == 3);
    CHECK(wb3.blocks()[0].comp == std::vector<std::size_t>{1, 1, 1});
    CHECK(wb3.blocks()[1].comp == std::vector<std::size_t>{1, 2});
    CHECK(wb3.blocks()[2].comp == std::vector<std::size_t>{2, 1});
    GradedGenerators big{{2, 4}};
    CHECK(WordBasis(big, 2).total() == 8);
    CHECK(WordBasis(big, 0).total() == 1);
    // encode/decode round-trip over every coordinate
    WordBasis wb(big, 3);
    for (std::size_t coord = 0; coord < wb.total(); ++coord) {
        auto [block, letters] = wb.decode(big, coord);
        CHECK(wb.encode(big, block, letters) == coord);
    }
}

TEST_CASE("ideal component dimensions") {
    GradedGenerators gens{{2}};
    RelationSet full2;
    full2.modulus = 1;
    WordBasis wb2(gens, 2);
    for (std::size_t k = 0; k < 4; ++k) full2.add(2, unit(k));
    CHECK(nichols::ideal_component_dim(gens, full2, 3) == 8);
    RelationSet none;
    for (std::size_t n = 0; n <= 4; ++n) CHECK(nichols::ideal_component_dim(gens, none, n) == 0);
    // x (x) x - 2t in degrees x: 1, t: 2
    GradedGenerators xt{{1, 1}};
    RelationSet rel;
    rel.modulus = 1;
    SparseVec r = unit(0);  // xx coordinate in degree 2
    nichols::vec_add_to(r, 1, ExactScalar::integer(-2));  // t coordinate
    rel.add(2, r);
    CHECK(nichols::ideal_component_dim(xt, rel, 3) == 2);
    auto dims = nichols::quotient_dims(xt, rel, 3);
    CHECK(dims == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("quotient dims of free and collapsed algebras") {
    GradedGenerators gens{{2}};
    RelationSet none;
    CHECK(nichols::quotient_dims(gens, none, 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});
    RelationSet full2;
    full2.modulus = 1;
    for (std::size_t k = 0; k < 4; ++k) full2.add(2, unit(k));
    CHECK(nichols::quotient_dims(gens, full2, 4) == std::vector<std::size_t>{1, 2, 0, 0, 0});
}

TEST_CASE("monotonicity: adding relations can only grow the ideal") {
    GradedGenerators gens{{2}};
    nichols::Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        RelationSet small, large;
        small.modulus = large.modulus = 1;
        for (int k = 0; k < 2; ++k) {
            SparseVec v = testutil::random_vector(rng, 4, 3, 1);
            if (v.empty()) continue;
            small.add(2, v);
            large.add(2, v);
        }
        large.add(2, testutil::random_vector(rng, 4, 3, 1));
        for (std::size_t n = 2; n <= 4; ++n)
            CHECK(nichols::ideal_component_dim(gens, small, n) <=
                  nichols::ideal_component_dim(gens, large, n));
    }
}

TEST_CASE("shuffle product base cases") {
    Braiding f1 = flip(1);
    SparseVec x = unit(0);
    SparseVec scalar = unit(0);
    CHECK(shuffle_product(f1, scalar, 0, x, 1) == x);
    SparseVec xx = shuffle_product(f1, x, 1, x, 1);
    CHECK(xx == SparseVec{{0, ExactScalar::integer(2)}});
    Braiding s = sign_line();
    CHECK(shuffle_product(s, x, 1, x, 1).empty());
}

TEST_CASE("omega components") {
    Braiding f = flip(2);
    CHECK(nichols::omega_component(f, 1) == nichols::SparseMatrix::identity(2, 1));
    nichols::SparseMatrix q2 = nichols::omega_component(f, 2);
    nichols::SparseMatrix expected = f.matrix();
    for (std::size_t i = 0; i < 4; ++i) expected.add_to(i, i, ExactScalar::one());
    CHECK(q2 == expected);
    CHECK(nichols::rank(nichols::omega_component(f, 3)) == 4);  // image dimension
}

TEST_CASE("omega is multiplicative: Q_{p+q}(u (x) v) = shuffle(Q_p u, Q_q v)") {
    std::vector<Braiding> fixtures;
    fixtures.push_back(flip(2));
    {
        auto er = nichols::conjugation_rack(nichols::symmetric_group(3), {1, 2, 5});
        fixtures.push_back(Braiding::from_rack(er.rack, nichols::RackCocycle::constant(3, ExactScalar::integer(-1))));
    }
    nichols::Rng rng(77);
    for (const Braiding& c : fixtures) {
        for (int trial = 0; trial < 8; ++trial) {
            std::size_t p = 1 + rng.below(3);
            std::size_t q = 1 + rng.below(std::min<std::size_t>(2, 4 - p));
            std::size_t dp = nichols::checked_pow(c.dim(), p), dq = nichols::checked_pow(c.dim(), q);
            SparseVec u = testutil::random_vector(rng, dp, 3, c.modulus());
            SparseVec v = testutil::random_vector(rng, dq, 3, c.modulus());
            nichols::SparseMatrix qp = quantum_symmetrizer(c, p);
            nichols::SparseMatrix qq = quantum_symmetrizer(c, q);
            nichols::SparseMatrix qpq = quantum_symmetrizer(c, p + q);
            SparseVec uv;
            for (const auto& [iu, cu] : u)
                for (const auto& [iv, cv] : v) nichols::vec_add_to(uv, iu * dq + iv, cu * cv);
            SparseVec lhs = testutil::matvec(qpq, uv);
            SparseVec rhs = shuffle_product(c, testutil::matvec(qp, u), p, testutil::matvec(qq, v), q);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("shuffle product is associative") {
    Braiding f = flip(2);
    nichols::Rng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        SparseVec a = testutil::random_vector(rng, 2, 2, 1);
        SparseVec b = testutil::random_vector(rng, 4, 2, 1);
        SparseVec c = testutil::random_vector(rng, 2, 2, 1);
        SparseVec left = shuffle_product(f, shuffle_product(f, a, 1, b, 2), 3, c, 1);
        SparseVec right = shuffle_product(f, a, 1, shuffle_product(f, b, 2, c, 1), 3);
        CHECK(left == right);
    }
}

TEST_CASE("flip shuffles match the classical riffle sum") {
    for (std::size_t dim : {2u, 3u}) {
        Braiding f = flip(dim);
        nichols::Rng rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t p = 1 + rng.below(2), q = 1 + rng.below(2);
            std::vector<std::size_t> uw(p), vw(q);
            for (auto& l : uw) l = rng.below(dim);
            for (auto& l : vw) l = rng.below(dim);
            std::size_t iu = 0, iv = 0;
            for (std::size_t k = 0; k < p; ++k) iu = iu * dim + uw[k];
            for (std::size_t k = 0; k < q; ++k) iv = iv * dim + vw[k];
            CHECK(shuffle_product(f, unit(iu), p, unit(iv), q) == testutil::classical_shuffle(dim, uw, vw));
        }
    }
}

TEST_CASE("e_0 (x) e_1 is not a shuffle of degree-1 elements (cotensor witness)") {
    Braiding f = flip(2);
    std::vector<SparseVec> products;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) products.push_back(shuffle_product(f, unit(a), 1, unit(b), 1));
    std::size_t base = nichols::span_rank(products, 4, 1);
    std::vector<SparseVec> with_witness = products;
    with_witness.push_back(unit(0 * 2 + 1));
    CHECK(nichols::span_rank(with_witness, 4, 1) == base + 1);
}

TEST_CASE("shuffle budget guard") {
    nichols::ComputeOptions opts;
    opts.budget.max_work = 3;
    Braiding f = flip(2);
    CHECK_THROWS_AS(shuffle_product(f, unit(0), 2, unit(0), 2, opts), nichols::budget_error);
}

namespace {

// Independent route to the ideal component dimensions: grow bases
// degree by degree via I_n = R_n + sum_k (e_k . I_{n-deg k} + I_{n-deg k} . e_k),
// instead of spanning all u (x) r (x) v placements at once.
std::vector<std::size_t> recursive_ideal_dims(const GradedGenerators& gens, const RelationSet& rels,
                                              std::size_t N) {
    std::vector<std::vector<SparseVec>> basis(N + 1);
    std::vector<std::size_t> dims(N + 1, 0);
    for (std::size_t n = 0; n <= N; ++n) {
        WordBasis wb(gens, n);
        std::vector<SparseVec> candidates;
        auto it = rels.by_degree.find(n);
        if (it != rels.by_degree.end())
            for (const auto& r : it->second) candidates.push_back(r);
        for (std::size_t part = 1; part <= gens.max_degree() && part <= n; ++part) {
            WordBasis inner(gens, n - part);
            for (std::size_t k = 0; k < gens.dim_at(part); ++k) {
                for (const SparseVec& b : basis[n - part]) {
                    SparseVec left, right;
                    for (const auto& [coord, val] : b) {
                        auto [blk, letters] = inner.decode(gens, coord);
                        auto comp = inner.blocks()[blk].comp;
                        std::vector<std::size_t> lcomp{part}, lletters{k};
                        lcomp.insert(lcomp.end(), comp.begin(), comp.end());
                        lletters.insert(lletters.end(), letters.begin(), letters.end());
                        nichols::vec_add_to(left, wb.encode(gens, wb.block_index(lcomp), lletters), val);
                        auto rcomp = comp;
                        rcomp.push_back(part);
                        auto rletters = letters;
                        rletters.push_back(k);
                        nichols::vec_add_to(right, wb.encode(gens, wb.block_index(rcomp), rletters), val);
                    }
                    if (!left.empty()) candidates.push_back(std::move(left));
                    if (!right.empty()) candidates.push_back(std::move(right));
                }
            }
        }
        nichols::SparseMatrix span(candidates.size(), wb.total(), rels.modulus);
        for (std::size_t i = 0; i < candidates.size(); ++i) span.set_row(i, candidates[i]);
        nichols::Rref r = nichols::rref(span);
        basis[n] = r.rows;
        dims[n] = r.rows.size();
    }
    return dims;
}

}  // namespace

TEST_CASE("placement spans agree with the recursive ideal construction") {
    nichols::Rng rng(271828);
    // degree-1 generators with random degree-2 relations
    for (int trial = 0; trial < 6; ++trial) {
        GradedGenerators gens{{2}};
        RelationSet rels;
        rels.modulus = 1;
        for (int k = 0; k < 2; ++k) {
            SparseVec v = testutil::random_vector(rng, 4, 3, 1);
            if (!v.empty()) rels.add(2, v);
        }
        auto recursive = recursive_ideal_dims(gens, rels, 4);
        for (std::size_t n = 0; n <= 4; ++n)
            CHECK(nichols::ideal_component_dim(gens, rels, n) == recursive[n]);
    }
    // mixed-degree generators: the x (x) x - 2t example
    GradedGenerators xt{{1, 1}};
    RelationSet rel;
    rel.modulus = 1;
    SparseVec r = unit(0);
    nichols::vec_add_to(r, 1, ExactScalar::integer(-2));
    rel.add(2, r);
    auto recursive = recursive_ideal_dims(xt, rel, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(nichols::ideal_component_dim(xt, rel, n) == recursive[n]);
}
