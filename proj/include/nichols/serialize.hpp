// JSON schemas for racks, groups, cocycles, braidings, truncated
// bialgebras, presentations, and result reports; TSV for dimension
// tables. Scalars travel as strings with exact round-trip.
#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nichols/approx.hpp"
#include "nichols/braiding.hpp"
#include "nichols/cocycle.hpp"
#include "nichols/common.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/graded.hpp"
#include "nichols/rack.hpp"
#include "nichols/twist.hpp"

namespace nichols {

using Json = nlohmann::ordered_json;

// Accepts the full "c0 + c1*z ... (mod N)" form, or a bare rational as
// shorthand for a modulus-1 value.
inline ExactScalar parse_scalar(const std::string& text) {
    if (text.find(" (mod ") != std::string::npos) return ExactScalar::parse(text);
    Rational r;
    try {
        r = Rational(text);
        r.canonicalize();
    } catch (const std::exception&) {
        throw input_error("scalar parse: bad value '" + text + "'");
    }
    return ExactScalar(r, 1);
}

inline ScalarTable scalar_table_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("scalar table: expected an array of arrays");
    ScalarTable t;
    for (const auto& row : j) {
        if (!row.is_array()) throw input_error("scalar table: expected an array of arrays");
        t.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_string()) throw input_error("scalar table: entries must be strings");
            t.back().push_back(parse_scalar(cell.get<std::string>()));
        }
    }
    return t;
}

inline Json scalar_table_to_json(const ScalarTable& t) {
    Json j = Json::array();
    for (const auto& row : t) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        j.push_back(std::move(r));
    }
    return j;
}

namespace detail {

inline OpTable op_table_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + ": expected an array of arrays");
    OpTable t;
    for (const auto& row : j) {
        if (!row.is_array()) throw input_error(std::string(what) + ": expected an array of arrays");
        t.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_number_integer() || (cell.is_number_integer() && !cell.is_number_unsigned() &&
                                              cell.get<long long>() < 0))
                throw input_error(std::string(what) + ": entries must be non-negative integers");
            t.back().push_back(cell.get<std::size_t>());
        }
    }
    return t;
}

inline std::vector<std::string> labels_from_json(const Json& j) {
    std::vector<std::string> out;
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) out.push_back(l.get<std::string>());
    }
    return out;
}

}  // namespace detail

// {"size": n, "op": [[...]], "labels": [...]}
inline Json rack_to_json(const Rack& r) {
    Json j;
    j["size"] = r.size();
    j["op"] = r.table();
    if (!r.labels().empty()) j["labels"] = r.labels();
    return j;
}

inline Rack rack_from_json(const Json& j) {
    OpTable t = detail::op_table_from_json(j.at("op"), "rack");
    if (j.contains("size") && j.at("size").get<std::size_t>() != t.size())
        throw input_error("rack: declared size does not match table");
    return Rack::from_table(std::move(t), detail::labels_from_json(j));
}

// {"size": m, "mul": [[...]], "identity": e, "labels": [...]}
inline Json group_to_json(const GroupTable& g) {
    Json j;
    j["size"] = g.size();
    j["mul"] = g.table();
    j["identity"] = g.identity();
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

inline GroupTable group_from_json(const Json& j) {
    OpTable t = detail::op_table_from_json(j.at("mul"), "group");
    if (j.contains("size") && j.at("size").get<std::size_t>() != t.size())
        throw input_error("group: declared size does not match table");
    GroupTable g = GroupTable::from_table(std::move(t), detail::labels_from_json(j));
    if (j.contains("identity") && j.at("identity").get<std::size_t>() != g.identity())
        throw input_error("group: declared identity does not match table");
    return g;
}

// A rack-with-cocycle input: either {"rack": ..., "q": [[...]]} or the
// embedded form {"group": ..., "subset": [...], "q": [[...]]} whose rack
// is the conjugation rack of the subset.
struct RackCocycleInput {
    Rack rack;
    RackCocycle q;
    std::optional<EmbeddedRack> embedding;
};

inline RackCocycleInput rack_cocycle_from_json(const Json& j) {
    RackCocycleInput out{Rack::trivial(1), RackCocycle::constant(1, ExactScalar::one()), std::nullopt};
    if (j.contains("group")) {
        GroupTable g = group_from_json(j.at("group"));
        std::vector<std::size_t> subset;
        for (const auto& s : j.at("subset")) subset.push_back(s.get<std::size_t>());
        EmbeddedRack er = conjugation_rack(g, std::move(subset));
        out.rack = er.rack;
        out.embedding = std::move(er);
    } else {
        out.rack = rack_from_json(j.at("rack"));
    }
    unsigned degree = j.contains("degree") ? j.at("degree").get<unsigned>() : 1u;
    out.q = RackCocycle::from_table(scalar_table_from_json(j.at("q")), degree);
    if (out.q.size() != out.rack.size()) throw input_error("rack cocycle: table size does not match rack");
    return out;
}

// {"group": ..., "sigma": [[...]]}
inline GroupCocycle group_cocycle_table_from_json(const Json& j) {
    return GroupCocycle::from_table(scalar_table_from_json(j.at("sigma")));
}

// {"dim": d, "entries": [[row, col, scalar], ...], "provenance": ...}
inline Json braiding_to_json(const Braiding& b) {
    Json j;
    j["dim"] = b.dim();
    Json entries = Json::array();
    b.matrix().for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) {
        entries.push_back(Json::array({r, c, v.to_string()}));
    });
    j["entries"] = std::move(entries);
    j["provenance"] = provenance_name(b.provenance());
    return j;
}

inline SparseMatrix matrix_from_entries_json(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::tuple<std::size_t, std::size_t, ExactScalar>> entries;
    unsigned l = 1;
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw input_error("braiding: entries must be [row, col, scalar]");
        ExactScalar v = parse_scalar(e.at(2).get<std::string>());
        l = lcm_modulus(l, v.modulus());
        entries.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), std::move(v));
    }
    SparseMatrix m(dim * dim, dim * dim, l);
    for (auto& [r, c, v] : entries) m.add_to(r, c, v.embed_to(l));
    return m;
}

// Any braiding-shaped input: explicit entries, a diagonal table, a rack
// with cocycle, or a {"braiding": ...} wrapper from a source object.
inline Braiding braiding_from_json(const Json& j) {
    if (j.contains("braiding")) return braiding_from_json(j.at("braiding"));
    if (j.contains("entries")) return Braiding::from_matrix(matrix_from_entries_json(j));
    if (j.contains("Q")) return Braiding::diagonal(scalar_table_from_json(j.at("Q")));
    if (j.contains("q")) {
        RackCocycleInput in = rack_cocycle_from_json(j);
        return Braiding::from_rack(in.rack, in.q);
    }
    throw input_error("braiding: expected one of 'entries', 'Q', 'q', or 'braiding'");
}

// {"d":, "dims": [...], "tables": [{"i":, "j":, "matrix": [[...]]}]}
inline Json truncated_to_json(const TruncatedBialgebra& a) {
    Json j;
    j["d"] = a.d;
    j["dims"] = a.dims;
    Json tables = Json::array();
    for (const auto& [ij, m] : a.tables) {
        Json t;
        t["i"] = ij.first;
        t["j"] = ij.second;
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c).to_string());
            rows.push_back(std::move(row));
        }
        t["matrix"] = std::move(rows);
        tables.push_back(std::move(t));
    }
    j["tables"] = std::move(tables);
    return j;
}

inline TruncatedBialgebra truncated_from_json(const Json& j) {
    TruncatedBialgebra a;
    a.d = j.at("d").get<std::size_t>();
    for (const auto& v : j.at("dims")) a.dims.push_back(v.get<std::size_t>());
    unsigned l = 1;
    std::vector<std::tuple<std::size_t, std::size_t, ScalarTable>> raw;
    for (const auto& t : j.at("tables")) {
        ScalarTable m = scalar_table_from_json(t.at("matrix"));
        for (const auto& row : m)
            for (const auto& v : row) l = lcm_modulus(l, v.modulus());
        raw.emplace_back(t.at("i").get<std::size_t>(), t.at("j").get<std::size_t>(), std::move(m));
    }
    a.modulus = l;
    for (auto& [i, jj, m] : raw) {
        std::size_t rows = a.dim_at(i + jj), cols = a.dim_at(i) * a.dim_at(jj);
        if (m.size() != rows) throw input_error("truncated bialgebra: table row count mismatch");
        SparseMatrix sm(rows, cols, l);
        for (std::size_t r = 0; r < rows; ++r) {
            if (m[r].size() != cols) throw input_error("truncated bialgebra: table column count mismatch");
            for (std::size_t c = 0; c < cols; ++c) {
                ExactScalar v = m[r][c].embed_to(l);
                if (!v.is_zero()) sm.set(r, c, v);
            }
        }
        a.tables.emplace(std::make_pair(i, jj), std::move(sm));
    }
    a.validate();
    return a;
}

// {"gens": [...], "relations": [{"degree": j, "terms": [[coord, scalar], ...]}]}
inline std::pair<GradedGenerators, RelationSet> presentation_from_json(const Json& j) {
    GradedGenerators gens;
    for (const auto& v : j.at("gens")) gens.dims.push_back(v.get<std::size_t>());
    unsigned l = 1;
    std::vector<std::pair<std::size_t, SparseVec>> raw;
    for (const auto& r : j.at("relations")) {
        std::size_t degree = r.at("degree").get<std::size_t>();
        WordBasis wb(gens, degree);
        SparseVec v;
        for (const auto& term : r.at("terms")) {
            std::size_t coord = term.at(0).get<std::size_t>();
            if (coord >= wb.total())
                throw input_error("presentation: coordinate " + std::to_string(coord) +
                                  " exceeds the degree-" + std::to_string(degree) + " basis");
            ExactScalar s = parse_scalar(term.at(1).get<std::string>());
            l = lcm_modulus(l, s.modulus());
            vec_add_to(v, coord, s);
        }
        raw.emplace_back(degree, std::move(v));
    }
    RelationSet rels;
    rels.modulus = l;
    for (auto& [degree, v] : raw) {
        SparseVec e;
        for (auto& [coord, s] : v) e.emplace(coord, s.embed_to(l));
        rels.add(degree, std::move(e));
    }
    return {std::move(gens), std::move(rels)};
}

// --- result rendering ---

inline Json hilbert_to_json(const HilbertPrefix& h) {
    Json rows = Json::array();
    for (const auto& r : h.rows) {
        Json row;
        row["degree"] = r.degree;
        if (r.exact) row["dim"] = r.dim;
        else row["dim"] = nullptr;
        row["flag"] = r.exact ? "exact" : "budget-truncated";
        rows.push_back(std::move(row));
    }
    Json j;
    j["dims"] = std::move(rows);
    j["truncated"] = h.truncated;
    return j;
}

inline std::string hilbert_to_tsv(const HilbertPrefix& h) {
    std::ostringstream os;
    os << "degree\tdim\tflag\n";
    for (const auto& r : h.rows) {
        if (r.exact) os << r.degree << '\t' << r.dim << "\texact\n";
        else os << r.degree << "\t-\tbudget-truncated\n";
    }
    return os.str();
}

inline Json cover_check_to_json(const CoverCheck& c) {
    Json j;
    j["verdict"] = c.agree ? "agree" : "mismatch";
    if (!c.agree) {
        j["mismatch_degree"] = c.mismatch_degree;
        j["cover_dim"] = c.cover_dim;
        j["nichols_dim"] = c.nichols_dim;
    }
    j["checked_up_to"] = c.checked_up_to;
    j["truncated"] = c.truncated;
    j["cover"] = hilbert_to_json(c.cover);
    j["nichols"] = hilbert_to_json(c.nichols);
    return j;
}

inline Json dims_array(const HilbertPrefix& h) {
    Json a = Json::array();
    for (const auto& r : h.rows) {
        if (!r.exact) break;
        a.push_back(r.dim);
    }
    return a;
}

inline Json twist_report_to_json(const TwistInvarianceReport& r) {
    Json j;
    j["q_dims"] = dims_array(r.q_dims);
    j["qprime_dims"] = dims_array(r.q_prime_dims);
    Json verdicts;
    verdicts["q"] = r.q_cover.verdict();
    verdicts["qprime"] = r.q_prime_cover.verdict();
    verdicts["equal"] = r.verdicts_equal;
    j["cover_verdicts"] = std::move(verdicts);
    j["intertwiner_verified_up_to_n"] = r.intertwiner_verified_up_to;
    j["dims_equal"] = r.dims_equal;
    j["qprime"] = scalar_table_to_json(r.q_prime.q);
    return j;
}

}  // namespace nichols
