// Named built-in inputs for the CLI and the test suites, plus the seeded
// generators property tests draw from.
#pragma once

#include <string>
#include <vector>

#include "nichols/cocycle.hpp"
#include "nichols/common.hpp"
#include "nichols/rack.hpp"
#include "nichols/serialize.hpp"

namespace nichols {

namespace detail {

inline Json constant_table(std::size_t n, const std::string& value) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(value);
    Json t = Json::array();
    for (std::size_t i = 0; i < n; ++i) t.push_back(row);
    return t;
}

inline Json s3_json() { return group_to_json(symmetric_group(3)); }

// The presented algebra of the second approximation of the shuffle
// algebra on an n-dimensional space, as listed: generators x_i (deg 1)
// and x_{ij} (deg 2), relations x_i x_j = x_{ij} + x_{ji} in degree 2
// and x_{ij} x_l = x_l x_{ij} = 0, x_{ij} x_{kl} = 0 above it. Shipped
// so its dimension table can be compared side by side with the
// extension of the truncated shuffle algebra.
inline Json f2_presented_json(std::size_t n) {
    GradedGenerators gens{{n, n * n}};
    Json rels = Json::array();
    WordBasis wb2(gens, 2);
    std::size_t pair11 = wb2.block_index({1, 1});
    std::size_t single2 = wb2.block_index({2});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Json terms = Json::array();
            terms.push_back(Json::array({wb2.encode(gens, pair11, {i, j}), "1"}));
            terms.push_back(Json::array({wb2.encode(gens, single2, {i * n + j}), "-1"}));
            if (i != j) terms.push_back(Json::array({wb2.encode(gens, single2, {j * n + i}), "-1"}));
            else terms.push_back(Json::array({wb2.encode(gens, single2, {i * n + i}), "-1"}));
            Json r;
            r["degree"] = 2;
            r["terms"] = std::move(terms);
            rels.push_back(std::move(r));
        }
    WordBasis wb3(gens, 3);
    std::size_t b12 = wb3.block_index({1, 2});
    std::size_t b21 = wb3.block_index({2, 1});
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t ij = 0; ij < n * n; ++ij) {
            for (auto [block, letters] : {std::make_pair(b12, std::vector<std::size_t>{l, ij}),
                                          std::make_pair(b21, std::vector<std::size_t>{ij, l})}) {
                Json r;
                r["degree"] = 3;
                r["terms"] = Json::array({Json::array({wb3.encode(gens, block, letters), "1"})});
                rels.push_back(std::move(r));
            }
        }
    WordBasis wb4(gens, 4);
    std::size_t b22 = wb4.block_index({2, 2});
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (std::size_t kl = 0; kl < n * n; ++kl) {
            Json r;
            r["degree"] = 4;
            r["terms"] = Json::array({Json::array({wb4.encode(gens, b22, {ij, kl}), "1"})});
            rels.push_back(std::move(r));
        }
    Json j;
    j["kind"] = "presentation";
    j["gens"] = Json::array({n, n * n});
    j["relations"] = std::move(rels);
    return j;
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
    return {
        "trivial-rack-dim1-minus1", "flip-dim2",          "diagonal-minus1-dim3",
        "s3-transpositions-minus1", "shuffle-flip-dim1",  "shuffle-flip-dim2",
        "f2-presented-dim1",        "f2-presented-dim2",
    };
}

inline Json fixture_json(const std::string& name) {
    if (name == "trivial-rack-dim1-minus1") {
        Json j;
        j["kind"] = "rack_cocycle";
        j["rack"] = Json{{"size", 1}, {"op", Json::array({Json::array({0})})}};
        j["q"] = detail::constant_table(1, "-1");
        return j;
    }
    if (name == "flip-dim2") {
        Json j;
        j["kind"] = "diagonal";
        j["Q"] = detail::constant_table(2, "1");
        return j;
    }
    if (name == "diagonal-minus1-dim3") {
        Json j;
        j["kind"] = "diagonal";
        j["Q"] = detail::constant_table(3, "-1");
        return j;
    }
    if (name == "s3-transpositions-minus1") {
        // transpositions of S_3 under the lexicographic enumeration:
        // indices 1 = (23), 2 = (12), 5 = (13)
        Json j;
        j["kind"] = "rack_cocycle";
        j["group"] = detail::s3_json();
        j["subset"] = Json::array({1, 2, 5});
        j["q"] = detail::constant_table(3, "-1");
        return j;
    }
    if (name == "shuffle-flip-dim1") {
        Json j;
        j["kind"] = "source";
        j["algebra"] = "shuffle";
        j["braiding"] = Json{{"kind", "diagonal"}, {"Q", detail::constant_table(1, "1")}};
        return j;
    }
    if (name == "shuffle-flip-dim2") {
        Json j;
        j["kind"] = "source";
        j["algebra"] = "shuffle";
        j["braiding"] = Json{{"kind", "diagonal"}, {"Q", detail::constant_table(2, "1")}};
        return j;
    }
    if (name == "f2-presented-dim1") return detail::f2_presented_json(1);
    if (name == "f2-presented-dim2") return detail::f2_presented_json(2);
    throw input_error("unknown fixture '" + name + "'");
}

inline bool is_fixture_name(const std::string& name) {
    for (const auto& n : fixture_names())
        if (n == name) return true;
    return false;
}

// mu with mu(identity) = 1 and the other values random roots of unity of
// the given order; feeds coboundary().
inline std::vector<ExactScalar> random_mu(const GroupTable& g, Rng& rng, unsigned order = 12) {
    std::vector<ExactScalar> mu;
    mu.reserve(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (a == g.identity()) mu.push_back(ExactScalar::one(order));
        else mu.push_back(ExactScalar::root_of_unity(order, rng.below(order)));
    }
    return mu;
}

inline GroupCocycle random_coboundary(const GroupTable& g, std::uint64_t seed, unsigned order = 12) {
    Rng rng(seed);
    std::vector<ExactScalar> mu = random_mu(g, rng, order);
    return coboundary(g, mu);
}

}  // namespace nichols
