// Permutations in one-line notation and the Matsumoto section sending a
// permutation to a canonical reduced braid word.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nichols/common.hpp"

namespace nichols {

class Permutation {
public:
    static Permutation identity(std::size_t n) {
        Permutation p;
        p.map_.resize(n);
        std::iota(p.map_.begin(), p.map_.end(), 0);
        return p;
    }

    static Permutation from_one_line(std::vector<std::size_t> one_line) {
        std::size_t n = one_line.size();
        std::vector<bool> seen(n, false);
        for (std::size_t v : one_line) {
            if (v >= n || seen[v]) throw input_error("permutation: one-line notation is not a bijection");
            seen[v] = true;
        }
        Permutation p;
        p.map_ = std::move(one_line);
        return p;
    }

    std::size_t size() const { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::size_t>& one_line() const { return map_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < map_.size(); ++i)
            if (map_[i] != i) return false;
        return true;
    }

    // (a * b)(i) = a(b(i)): apply b first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw input_error("permutation: size mismatch");
        Permutation p;
        p.map_.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) p.map_[i] = a.map_[b.map_[i]];
        return p;
    }

    Permutation inverse() const {
        Permutation p;
        p.map_.resize(size());
        for (std::size_t i = 0; i < size(); ++i) p.map_[map_[i]] = i;
        return p;
    }

    std::size_t inversions() const {
        std::size_t count = 0;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (map_[i] > map_[j]) ++count;
        return count;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

private:
    std::vector<std::size_t> map_;
};

// Lexicographic one-line order; identity first.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(Permutation::from_one_line(p));
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// A word in the braid group B_n: letters +-1..+-(n-1), letter i standing
// for sigma_i acting on strands i, i+1. The product is read left to
// right, sigma_{l1} sigma_{l2} ... ; representations apply the rightmost
// letter to a vector first.
struct BraidWord {
    std::size_t strands = 0;
    std::vector<int> letters;

    void validate() const {
        for (int l : letters) {
            std::size_t a = static_cast<std::size_t>(l < 0 ? -l : l);
            if (l == 0 || a >= strands) throw input_error("braid word: letter out of range");
        }
    }
};

// Canonical reduced word for w: repeatedly take the smallest position i
// with w(i) > w(i+1) and strip s_i on the right; the collected letters,
// reversed, give w = s_{j1} ... s_{jl} with l = inversions(w).
inline BraidWord matsumoto_word(const Permutation& w) {
    std::vector<std::size_t> cur = w.one_line();
    std::size_t n = cur.size();
    std::vector<int> emitted;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (cur[i] > cur[i + 1]) {
                emitted.push_back(static_cast<int>(i + 1));
                std::swap(cur[i], cur[i + 1]);
                progress = true;
                break;
            }
        }
    }
    std::reverse(emitted.begin(), emitted.end());
    return BraidWord{n, std::move(emitted)};
}

inline std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        if (f > static_cast<std::size_t>(-1) / k) throw input_error("factorial overflow");
        f *= k;
    }
    return f;
}

inline std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (base != 0 && r > static_cast<std::size_t>(-1) / base) throw input_error("power overflow");
        r *= base;
    }
    return r;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Saturating variants for budget guards.
inline std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > static_cast<std::size_t>(-1) / a) return static_cast<std::size_t>(-1);
    return a * b;
}

inline std::size_t sat_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < exp; ++k) r = sat_mul(r, base);
    return r;
}

inline std::size_t sat_factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f = sat_mul(f, k);
    return f;
}

}  // namespace nichols
