#include <doctest.h>

#include "nichols/approx.hpp"
#include "nichols/braiding.hpp"
#include "nichols/fixtures.hpp"
#include "nichols/serialize.hpp"
#include "test_util.hpp"

using nichols::Braiding;
using nichols::ExactScalar;
using nichols::Json;

TEST_CASE("rack and group JSON round-trip") {
    auto er = nichols::conjugation_rack(nichols::symmetric_group(3), {1, 2, 5});
    Json rj = nichols::rack_to_json(er.rack);
    nichols::Rack back = nichols::rack_from_json(rj);
    CHECK(back.table() == er.rack.table());
    CHECK(back.label(0) == er.rack.label(0));
    Json gj = nichols::group_to_json(er.group);
    nichols::GroupTable g = nichols::group_from_json(gj);
    CHECK(g.table() == er.group.table());
    CHECK(g.identity() == er.group.identity());
    Json broken = gj;
    broken["identity"] = 3;
    CHECK_THROWS_AS(nichols::group_from_json(broken), nichols::input_error);
}

TEST_CASE("scalar strings in tables round-trip exactly") {
    nichols::Rng rng(8);
    nichols::ScalarTable t(2, std::vector<ExactScalar>(2, ExactScalar::one(12)));
    for (auto& row : t)
        for (auto& v : row) v = testutil::random_root_scalar(rng) * testutil::random_rational(rng).embed_to(12);
    Json j = nichols::scalar_table_to_json(t);
    nichols::ScalarTable back = nichols::scalar_table_from_json(j);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) CHECK(back[i][k] == t[i][k]);
    CHECK(nichols::parse_scalar("-3/2") == ExactScalar(nichols::Rational(-3, 2), 1));
}

TEST_CASE("braiding JSON round-trip preserves the matrix") {
    auto er = nichols::conjugation_rack(nichols::symmetric_group(3), {1, 2, 5});
    Braiding b = Braiding::from_rack(er.rack, nichols::RackCocycle::constant(3, ExactScalar::integer(-1)));
    Json j = nichols::braiding_to_json(b);
    Braiding back = nichols::braiding_from_json(j);
    CHECK(back.matrix() == b.matrix());
    CHECK(back.provenance() == nichols::Provenance::explicit_matrix);
}

TEST_CASE("fixtures ship, validate, and include the required names") {
    auto names = nichols::fixture_names();
    CHECK(names.size() >= 6);
    for (const char* required : {"trivial-rack-dim1-minus1", "flip-dim2", "diagonal-minus1-dim3",
                                 "s3-transpositions-minus1", "shuffle-flip-dim1", "shuffle-flip-dim2"}) {
        bool found = false;
        for (const auto& n : names) found = found || n == required;
        CHECK_MESSAGE(found, required);
    }
    for (const auto& n : names) {
        Json f = nichols::fixture_json(n);
        std::string kind = f.at("kind").get<std::string>();
        if (kind == "rack_cocycle") {
            nichols::RackCocycleInput in = nichols::rack_cocycle_from_json(f);
            CHECK(nichols::validate_rack_cocycle(in.rack, in.q).ok);
        } else if (kind == "diagonal" || kind == "source") {
            CHECK(nichols::check_yang_baxter(nichols::braiding_from_json(f).matrix()).ok);
        } else if (kind == "presentation") {
            CHECK_NOTHROW(nichols::presentation_from_json(f));
        } else {
            FAIL("unknown fixture kind ", kind);
        }
    }
    CHECK_THROWS_AS(nichols::fixture_json("no-such-fixture"), nichols::input_error);
}

TEST_CASE("truncated bialgebra JSON round-trip") {
    Braiding f1 = Braiding::diagonal(nichols::ScalarTable(1, {ExactScalar::one()}));
    nichols::TruncatedBialgebra a = nichols::truncate_graded_algebra(f1, nichols::AlgebraTag::shuffle, 3);
    Json j = nichols::truncated_to_json(a);
    nichols::TruncatedBialgebra back = nichols::truncated_from_json(j);
    CHECK(back.d == a.d);
    CHECK(back.dims == a.dims);
    for (const auto& [ij, m] : a.tables) {
        const nichols::SparseMatrix& bm = back.table(ij.first, ij.second);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                CHECK(bm.get(r, c) == m.get(r, c).embed_to(back.modulus));
    }
    CHECK(nichols::extension_dims(back, 3).dims() == nichols::extension_dims(a, 3).dims());
}

TEST_CASE("hilbert rendering") {
    nichols::HilbertPrefix h;
    h.rows = {{0, 1, true}, {1, 3, true}, {2, 0, false}};
    h.truncated = true;
    CHECK(nichols::hilbert_to_tsv(h) == "degree\tdim\tflag\n0\t1\texact\n1\t3\texact\n2\t-\tbudget-truncated\n");
    Json j = nichols::hilbert_to_json(h);
    CHECK(j.at("truncated").get<bool>());
    CHECK(j.at("dims").size() == 3);
    CHECK(j.at("dims").at(2).at("dim").is_null());
}

TEST_CASE("vectors serialize against the word-basis enumeration") {
    auto [gens, rels] = nichols::presentation_from_json(nichols::fixture_json("f2-presented-dim1"));
    CHECK(gens.dims == std::vector<std::size_t>{1, 1});
    REQUIRE(rels.by_degree.count(2) == 1);
    // the degree-2 relation is xx - 2t in word coordinates (xx first)
    const nichols::SparseVec& r = rels.by_degree.at(2)[0];
    CHECK(r.at(0) == ExactScalar::integer(1));
    CHECK(r.at(1) == ExactScalar::integer(-2));
}
