// Scalar-valued rack 2-cocycles and normalized group 2-cocycles, the
// coboundary construction, and the twist q'(x,y) = s(x,y) q(x,y) s(x>y,x)^-1.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nichols/common.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/rack.hpp"

namespace nichols {

using ScalarTable = std::vector<std::vector<ExactScalar>>;

namespace detail {

// Common modulus for a table; loading a table is an explicit embed site.
inline unsigned table_lcm(const ScalarTable& t) {
    unsigned l = 1;
    for (const auto& row : t)
        for (const auto& v : row) l = lcm_modulus(l, v.modulus());
    return l;
}

inline ScalarTable table_embedded(const ScalarTable& t, unsigned modulus) {
    ScalarTable out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        out[i].reserve(t[i].size());
        for (const auto& v : t[i]) out[i].push_back(v.embed_to(modulus));
    }
    return out;
}

inline void require_square_nonzero(const ScalarTable& t, std::size_t n, const char* what) {
    if (t.size() != n) throw input_error(std::string(what) + ": table size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) throw input_error(std::string(what) + ": table is not square");
        for (std::size_t j = 0; j < n; ++j)
            if (t[i][j].is_zero())
                throw input_error(std::string(what) + ": zero entry at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
}

}  // namespace detail

// Degree-n cocycles exist in the data model; every operation requires
// degree 1 (scalar values), matching the twist-equivalence setting.
struct RackCocycle {
    unsigned degree = 1;
    unsigned modulus = 1;
    ScalarTable q;

    static RackCocycle from_table(ScalarTable table, unsigned degree = 1) {
        if (degree != 1)
            throw input_error("rack cocycle: only degree-1 (scalar) cocycles are supported, got degree " +
                              std::to_string(degree));
        unsigned l = detail::table_lcm(table);
        RackCocycle c;
        c.modulus = l;
        c.q = detail::table_embedded(table, l);
        detail::require_square_nonzero(c.q, c.q.size(), "rack cocycle");
        return c;
    }

    static RackCocycle constant(std::size_t n, const ExactScalar& v) {
        return from_table(ScalarTable(n, std::vector<ExactScalar>(n, v)));
    }

    std::size_t size() const { return q.size(); }
    const ExactScalar& value(std::size_t x, std::size_t y) const { return q[x][y]; }
};

struct GroupCocycle {
    unsigned modulus = 1;
    ScalarTable sigma;

    static GroupCocycle from_table(ScalarTable table) {
        unsigned l = detail::table_lcm(table);
        GroupCocycle c;
        c.modulus = l;
        c.sigma = detail::table_embedded(table, l);
        detail::require_square_nonzero(c.sigma, c.sigma.size(), "group cocycle");
        return c;
    }

    static GroupCocycle trivial(std::size_t m, unsigned modulus = 1) {
        return from_table(ScalarTable(m, std::vector<ExactScalar>(m, ExactScalar::one(modulus))));
    }

    std::size_t size() const { return sigma.size(); }
    const ExactScalar& value(std::size_t x, std::size_t y) const { return sigma[x][y]; }

    GroupCocycle pointwise_inverse() const {
        GroupCocycle out = *this;
        for (auto& row : out.sigma)
            for (auto& v : row) v = v.inverse();
        return out;
    }

    GroupCocycle pointwise_product(const GroupCocycle& o) const {
        if (size() != o.size()) throw input_error("group cocycle: size mismatch in product");
        unsigned l = lcm_modulus(modulus, o.modulus);
        GroupCocycle out;
        out.modulus = l;
        out.sigma.assign(size(), std::vector<ExactScalar>());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                out.sigma[i].push_back(sigma[i][j].embed_to(l) * o.sigma[i][j].embed_to(l));
        return out;
    }
};

struct CocycleCheck {
    bool ok = true;
    std::size_t x = 0, y = 0, z = 0;
    std::string lhs, rhs;  // both side values at the first violation
    std::string message;
};

// q(x, y>z) q(y,z) = q(x>y, x>z) q(x,z) for all triples.
inline CocycleCheck validate_rack_cocycle(const Rack& rack, const RackCocycle& c) {
    if (c.size() != rack.size()) throw input_error("rack cocycle: size does not match rack");
    std::size_t n = rack.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                ExactScalar lhs = c.value(x, rack.apply(y, z)) * c.value(y, z);
                ExactScalar rhs = c.value(rack.apply(x, y), rack.apply(x, z)) * c.value(x, z);
                if (!(lhs == rhs)) {
                    CocycleCheck r;
                    r.ok = false;
                    r.x = x;
                    r.y = y;
                    r.z = z;
                    r.lhs = lhs.to_string();
                    r.rhs = rhs.to_string();
                    std::ostringstream os;
                    os << "rack cocycle identity fails at (" << x << "," << y << "," << z << "): " << r.lhs
                       << " != " << r.rhs;
                    r.message = os.str();
                    return r;
                }
            }
    return CocycleCheck{};
}

// sigma(x,y) sigma(xy,z) = sigma(y,z) sigma(x,yz), with sigma normalized
// on the identity.
inline CocycleCheck validate_group_cocycle(const GroupTable& g, const GroupCocycle& c) {
    if (c.size() != g.size()) throw input_error("group cocycle: size does not match group");
    std::size_t m = g.size(), e = g.identity();
    for (std::size_t x = 0; x < m; ++x) {
        if (!c.value(x, e).is_one() || !c.value(e, x).is_one()) {
            CocycleCheck r;
            r.ok = false;
            r.x = x;
            r.y = e;
            r.lhs = c.value(x, e).to_string();
            r.rhs = c.value(e, x).to_string();
            r.message = "group cocycle not normalized at element " + std::to_string(x);
            return r;
        }
    }
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                ExactScalar lhs = c.value(x, y) * c.value(g.mul(x, y), z);
                ExactScalar rhs = c.value(y, z) * c.value(x, g.mul(y, z));
                if (!(lhs == rhs)) {
                    CocycleCheck r;
                    r.ok = false;
                    r.x = x;
                    r.y = y;
                    r.z = z;
                    r.lhs = lhs.to_string();
                    r.rhs = rhs.to_string();
                    std::ostringstream os;
                    os << "group cocycle identity fails at (" << x << "," << y << "," << z << "): " << r.lhs
                       << " != " << r.rhs;
                    r.message = os.str();
                    return r;
                }
            }
    return CocycleCheck{};
}

// sigma(x,y) = mu(x) mu(y) mu(xy)^-1; a cocycle by the telescoping identity.
inline GroupCocycle coboundary(const GroupTable& g, const std::vector<ExactScalar>& mu) {
    if (mu.size() != g.size()) throw input_error("coboundary: mu size does not match group");
    unsigned l = 1;
    for (const auto& v : mu) {
        if (v.is_zero()) throw input_error("coboundary: mu has a zero value");
        l = lcm_modulus(l, v.modulus());
    }
    std::vector<ExactScalar> m;
    m.reserve(mu.size());
    for (const auto& v : mu) m.push_back(v.embed_to(l));
    if (!m[g.identity()].is_one()) throw input_error("coboundary: mu(identity) must be 1");
    std::size_t n = g.size();
    ScalarTable sigma(n, std::vector<ExactScalar>(n, ExactScalar::one(l)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) sigma[x][y] = m[x] * m[y] * m[g.mul(x, y)].inverse();
    return GroupCocycle::from_table(std::move(sigma));
}

struct TwistResult {
    RackCocycle q_prime;
    CocycleCheck validation;
};

// q'(x,y) = sigma(x,y) q(x,y) sigma(x>y, x)^-1, sigma read through the
// group embedding of the rack.
inline TwistResult twist_rack_cocycle(const EmbeddedRack& er, const RackCocycle& q,
                                      const GroupCocycle& sigma) {
    if (q.size() != er.rack.size()) throw input_error("twist: cocycle size does not match rack");
    if (sigma.size() != er.group.size()) throw input_error("twist: sigma size does not match group");
    unsigned l = lcm_modulus(q.modulus, sigma.modulus);
    std::size_t n = er.rack.size();
    ScalarTable table(n, std::vector<ExactScalar>(n, ExactScalar::one(l)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t gx = er.to_group[x], gy = er.to_group[y];
            std::size_t gxy = er.to_group[er.rack.apply(x, y)];
            table[x][y] = sigma.value(gx, gy).embed_to(l) * q.value(x, y).embed_to(l) *
                          sigma.value(gxy, gx).embed_to(l).inverse();
        }
    TwistResult out;
    out.q_prime = RackCocycle::from_table(std::move(table));
    out.validation = validate_rack_cocycle(er.rack, out.q_prime);
    return out;
}

}  // namespace nichols
