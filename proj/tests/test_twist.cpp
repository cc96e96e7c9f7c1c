#include <doctest.h>

#include "nichols/braiding.hpp"
#include "nichols/cocycle.hpp"
#include "nichols/common.hpp"
#include "nichols/fixtures.hpp"
#include "nichols/twist.hpp"
#include "test_util.hpp"

using nichols::Braiding;
using nichols::coboundary;
using nichols::EmbeddedRack;
using nichols::ExactScalar;
using nichols::GroupCocycle;
using nichols::Intertwiner;
using nichols::intertwiner_matrix;
using nichols::RackCocycle;
using nichols::verify_intertwining;

namespace {

EmbeddedRack s3_rack() { return nichols::conjugation_rack(nichols::symmetric_group(3), {1, 2, 5}); }

RackCocycle minus_one() { return RackCocycle::constant(3, ExactScalar::integer(-1)); }

}  // namespace

TEST_CASE("trivial sigma gives the identity intertwiner") {
    auto er = s3_rack();
    Intertwiner f = intertwiner_matrix(er, GroupCocycle::trivial(6), 3);
    CHECK(f.diag.size() == 27);
    for (const auto& v : f.diag) CHECK(v.is_one());
}

TEST_CASE("n = 2 intertwiner entries are sigma(x1, x2)") {
    auto er = s3_rack();
    GroupCocycle sigma = nichols::random_coboundary(er.group, 7);
    Intertwiner f = intertwiner_matrix(er, sigma, 2);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            CHECK(f.diag[x * 3 + y] == sigma.value(er.to_group[x], er.to_group[y]));
}

TEST_CASE("n = 3 entries are sigma(x, yz) sigma(y, z)") {
    auto er = s3_rack();
    GroupCocycle sigma = nichols::random_coboundary(er.group, 11);
    Intertwiner f = intertwiner_matrix(er, sigma, 3);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            for (std::size_t z = 0; z < 3; ++z) {
                std::size_t gx = er.to_group[x], gy = er.to_group[y], gz = er.to_group[z];
                ExactScalar expect = sigma.value(gx, er.group.mul(gy, gz)) * sigma.value(gy, gz);
                CHECK(f.diag[(x * 3 + y) * 3 + z] == expect);
            }
}

TEST_CASE("intertwining identity holds for coboundary twists") {
    auto er = s3_rack();
    RackCocycle q = minus_one();
    nichols::Rng seeds(2025);
    for (int trial = 0; trial < 5; ++trial) {
        GroupCocycle sigma = nichols::random_coboundary(er.group, seeds.next());
        auto tw = nichols::twist_rack_cocycle(er, q, sigma);
        REQUIRE(tw.validation.ok);
        for (std::size_t n = 2; n <= 4; ++n) {
            auto chk = verify_intertwining(er, q, tw.q_prime, sigma, n);
            CHECK(chk.ok);
        }
    }
}

TEST_CASE("a corrupted q' is caught with a located violation") {
    auto er = s3_rack();
    RackCocycle q = minus_one();
    GroupCocycle sigma = nichols::random_coboundary(er.group, 5);
    auto tw = nichols::twist_rack_cocycle(er, q, sigma);
    RackCocycle corrupted = tw.q_prime;
    corrupted.q[0][1] = corrupted.q[0][1] * ExactScalar::zeta(tw.q_prime.modulus);
    auto chk = verify_intertwining(er, q, corrupted, sigma, 3);
    REQUIRE_FALSE(chk.ok);
    CHECK(chk.generator >= 1);
    CHECK(chk.basis_index < 27);
}

TEST_CASE("conjugation identity on arbitrary braid words") {
    auto er = s3_rack();
    RackCocycle q = minus_one();
    GroupCocycle sigma = nichols::random_coboundary(er.group, 99);
    auto tw = nichols::twist_rack_cocycle(er, q, sigma);
    unsigned l = nichols::lcm_modulus(nichols::lcm_modulus(q.modulus, tw.q_prime.modulus), sigma.modulus);
    auto embed = [&](const RackCocycle& c) {
        nichols::ScalarTable t = c.q;
        for (auto& row : t)
            for (auto& v : row) v = v.embed_to(l);
        return RackCocycle::from_table(t);
    };
    Braiding c = Braiding::from_rack(er.rack, embed(q));
    Braiding cp = Braiding::from_rack(er.rack, embed(tw.q_prime));
    nichols::ScalarTable st = sigma.sigma;
    for (auto& row : st)
        for (auto& v : row) v = v.embed_to(l);
    Intertwiner f = intertwiner_matrix(er, GroupCocycle::from_table(st), 3);
    nichols::Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> letters;
        for (int k = 0; k < 4; ++k) {
            int letter = 1 + static_cast<int>(rng.below(2));
            letters.push_back(rng.below(2) ? letter : -letter);
        }
        nichols::BraidWord w{3, letters};
        for (std::size_t b = 0; b < 27; ++b) {
            nichols::SparseVec e{{b, ExactScalar::one(l)}};
            // rho(w) f e_b
            nichols::SparseVec lhs = nichols::braid_rep_apply(c, 3, w, e);
            for (auto& [idx, val] : lhs) val *= f.diag[b];
            // f rho'(w) e_b
            nichols::SparseVec rhs_raw = nichols::braid_rep_apply(cp, 3, w, e);
            nichols::SparseVec rhs;
            for (const auto& [idx, val] : rhs_raw) nichols::vec_add_to(rhs, idx, val * f.diag[idx]);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("twist invariance of ranks and cover verdicts") {
    auto er = s3_rack();
    RackCocycle q = minus_one();
    GroupCocycle sigma = nichols::random_coboundary(er.group, 123);
    auto rep = nichols::twist_invariance_check(er, q, sigma, 2, 4);
    CHECK(rep.q_prime_valid.ok);
    CHECK(rep.dims_equal);
    CHECK(rep.verdicts_equal);
    CHECK(rep.q_dims.dims() == rep.q_prime_dims.dims());
    CHECK(rep.intertwiner_verified_up_to == 4);
    CHECK(rep.q_cover.agree);
    CHECK(rep.q_prime_cover.agree);
}

TEST_CASE("twisting by sigma and back gives an identity intertwiner product") {
    auto er = s3_rack();
    GroupCocycle sigma = nichols::random_coboundary(er.group, 321);
    GroupCocycle inv = sigma.pointwise_inverse();
    Intertwiner f = intertwiner_matrix(er, sigma, 3);
    Intertwiner g = intertwiner_matrix(er, inv, 3);
    for (std::size_t k = 0; k < f.diag.size(); ++k) CHECK((f.diag[k] * g.diag[k]).is_one());
}

TEST_CASE("twist invariance report for the trivial cocycle") {
    auto er = s3_rack();
    auto rep = nichols::twist_invariance_check(er, minus_one(), GroupCocycle::trivial(6), 2, 3);
    CHECK(rep.all_equal());
    CHECK(rep.q_dims.dims() == rep.q_prime_dims.dims());
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            CHECK(rep.q_prime.value(x, y) == ExactScalar::integer(-1).embed_to(rep.q_prime.modulus));
}
