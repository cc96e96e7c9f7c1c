// Finite racks, finite groups as multiplication tables, and conjugation
// racks built from group subsets closed under conjugation.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/common.hpp"

namespace nichols {

struct RackCheck {
    enum class Kind { ok, not_bijective, not_self_distributive };
    Kind kind = Kind::ok;
    std::size_t x = 0, y = 0, z = 0;
    std::string message;

    bool ok() const { return kind == Kind::ok; }
};

using OpTable = std::vector<std::vector<std::size_t>>;

// Malformed tables (non-square, out of range) throw; axiom violations
// are reported with the first offending row or triple.
inline RackCheck validate_rack(const OpTable& op) {
    std::size_t n = op.size();
    if (n == 0) throw input_error("rack: empty table");
    for (std::size_t x = 0; x < n; ++x) {
        if (op[x].size() != n) throw input_error("rack: table row " + std::to_string(x) + " is not length " + std::to_string(n));
        for (std::size_t y = 0; y < n; ++y)
            if (op[x][y] >= n)
                throw input_error("rack: entry out of range at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") -> " + std::to_string(op[x][y]));
    }
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        for (std::size_t y = 0; y < n; ++y) {
            if (seen[op[x][y]]) {
                RackCheck c;
                c.kind = RackCheck::Kind::not_bijective;
                c.x = x;
                c.y = y;
                std::ostringstream os;
                os << "left translation of " << x << " is not a bijection (value " << op[x][y]
                   << " repeated at y=" << y << ")";
                c.message = os.str();
                return c;
            }
            seen[op[x][y]] = true;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (op[x][op[y][z]] != op[op[x][y]][op[x][z]]) {
                    RackCheck c;
                    c.kind = RackCheck::Kind::not_self_distributive;
                    c.x = x;
                    c.y = y;
                    c.z = z;
                    std::ostringstream os;
                    os << "self-distributivity fails at (" << x << "," << y << "," << z << "): x>(y>z)="
                       << op[x][op[y][z]] << " but (x>y)>(x>z)=" << op[op[x][y]][op[x][z]];
                    c.message = os.str();
                    return c;
                }
    return RackCheck{};
}

class Rack {
public:
    static Rack from_table(OpTable op, std::vector<std::string> labels = {}) {
        RackCheck c = validate_rack(op);
        if (!c.ok()) throw input_error("rack: " + c.message);
        Rack r;
        r.op_ = std::move(op);
        if (!labels.empty() && labels.size() != r.op_.size())
            throw input_error("rack: label count mismatch");
        r.labels_ = std::move(labels);
        return r;
    }

    // x > y = y for all x, y
    static Rack trivial(std::size_t n) {
        OpTable op(n, std::vector<std::size_t>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) op[x][y] = y;
        return from_table(std::move(op));
    }

    std::size_t size() const { return op_.size(); }
    std::size_t apply(std::size_t x, std::size_t y) const { return op_[x][y]; }
    const OpTable& table() const { return op_; }

    std::string label(std::size_t x) const {
        return labels_.empty() ? std::to_string(x) : labels_[x];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::size_t> left_translation(std::size_t x) const { return op_[x]; }

    // Orbit id per element under the group generated by all left
    // translations; ids numbered in order of least representative.
    std::vector<std::size_t> orbits() const {
        std::size_t n = size();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::size_t a = find(y), b = find(op_[x][y]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::vector<std::size_t> id(n, n);
        std::size_t next = 0;
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t root = find(x);
            if (id[root] == n) id[root] = next++;
            id[x] = id[root];
        }
        return id;
    }

private:
    OpTable op_;
    std::vector<std::string> labels_;
};

class GroupTable {
public:
    static GroupTable from_table(OpTable mul, std::vector<std::string> labels = {}) {
        std::size_t m = mul.size();
        if (m == 0) throw input_error("group: empty table");
        for (std::size_t a = 0; a < m; ++a) {
            if (mul[a].size() != m) throw input_error("group: table is not square");
            for (std::size_t b = 0; b < m; ++b)
                if (mul[a][b] >= m) throw input_error("group: entry out of range");
        }
        std::size_t e = m;
        for (std::size_t cand = 0; cand < m; ++cand) {
            bool is_id = true;
            for (std::size_t a = 0; a < m && is_id; ++a)
                is_id = mul[cand][a] == a && mul[a][cand] == a;
            if (is_id) {
                e = cand;
                break;
            }
        }
        if (e == m) throw input_error("group: no two-sided identity");
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < m; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        throw input_error("group: associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
        GroupTable g;
        g.mul_ = std::move(mul);
        g.identity_ = e;
        g.inverse_.assign(m, m);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b)
                if (g.mul_[a][b] == e && g.mul_[b][a] == e) {
                    g.inverse_[a] = b;
                    break;
                }
            if (g.inverse_[a] == m) throw input_error("group: element " + std::to_string(a) + " has no inverse");
        }
        if (!labels.empty() && labels.size() != m) throw input_error("group: label count mismatch");
        g.labels_ = std::move(labels);
        return g;
    }

    std::size_t size() const { return mul_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const OpTable& table() const { return mul_; }
    std::string label(std::size_t a) const {
        return labels_.empty() ? std::to_string(a) : labels_[a];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t conjugate(std::size_t x, std::size_t y) const {
        return mul_[mul_[x][y]][inverse_[x]];
    }

    // For tables produced by construction from a known group, where the
    // O(m^3) associativity sweep of from_table would be prohibitive.
    static GroupTable trusted(OpTable mul, std::size_t identity, std::vector<std::size_t> inverse,
                              std::vector<std::string> labels) {
        GroupTable g;
        g.mul_ = std::move(mul);
        g.identity_ = identity;
        g.inverse_ = std::move(inverse);
        g.labels_ = std::move(labels);
        return g;
    }

private:
    OpTable mul_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
};

// A rack realized as a subset of a group; the embedding is what the
// twisting operations consume.
struct EmbeddedRack {
    Rack rack;
    GroupTable group;
    std::vector<std::size_t> to_group;  // rack index -> group index
};

inline EmbeddedRack conjugation_rack(const GroupTable& g, std::vector<std::size_t> subset) {
    if (subset.empty()) throw input_error("conjugation rack: empty subset");
    std::vector<std::size_t> position(g.size(), g.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= g.size()) throw input_error("conjugation rack: subset index out of range");
        if (position[subset[i]] != g.size()) throw input_error("conjugation rack: duplicate subset element");
        position[subset[i]] = i;
    }
    std::size_t n = subset.size();
    OpTable op(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t c = g.conjugate(subset[i], subset[j]);
            if (position[c] == g.size())
                throw input_error("conjugation rack: subset not closed, " + g.label(subset[i]) + " > " +
                                  g.label(subset[j]) + " = " + g.label(c) + " escapes");
            op[i][j] = position[c];
        }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(g.label(subset[i]));
    }
    return EmbeddedRack{Rack::from_table(std::move(op), std::move(labels)), g, std::move(subset)};
}

namespace detail {

inline std::string cycle_label(const std::vector<std::size_t>& p) {
    std::size_t n = p.size();
    std::vector<bool> seen(n, false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start] || p[start] == start) continue;
        os << '(';
        std::size_t cur = start;
        do {
            os << cur + 1;
            seen[cur] = true;
            cur = p[cur];
        } while (cur != start);
        os << ')';
        any = true;
    }
    return any ? os.str() : "e";
}

}  // namespace detail

// Multiplication table of S_n with permutations enumerated in
// lexicographic one-line order (identity at index 0); mul(a, b) is the
// composite "apply b, then a".
inline GroupTable symmetric_group(std::size_t n) {
    if (n == 0 || n > 8) throw input_error("symmetric_group: n must be in 1..8 (table size guard)");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    std::size_t m = perms.size();
    OpTable mul(m, std::vector<std::size_t>(m));
    std::vector<std::size_t> comp(n), inv(n);
    std::vector<std::size_t> inverse(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            mul[a][b] = index.at(comp);
        }
        for (std::size_t i = 0; i < n; ++i) inv[perms[a][i]] = i;
        inverse[a] = index.at(inv);
    }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& q : perms) labels.push_back(detail::cycle_label(q));
    return GroupTable::trusted(std::move(mul), 0, std::move(inverse), std::move(labels));
}

// Cyclic group Z_n, indices as residues.
inline GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw input_error("cyclic_group: n must be positive");
    OpTable mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return GroupTable::from_table(std::move(mul));
}

}  // namespace nichols
