#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nichols {

// Input-level failures: malformed tables, out-of-range indices, mixed
// moduli without an explicit embedding, division by zero, unsupported
// features. The CLI maps these to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation refused because it would exceed the configured budget.
// Carries the offending size. The CLI maps these to exit code 3.
struct budget_error : std::runtime_error {
    std::size_t offending_size;
    budget_error(const std::string& msg, std::size_t size)
        : std::runtime_error(msg + " (size " + std::to_string(size) + ")"), offending_size(size) {}
};

// Resource limits for the degree-indexed computations. `max_ambient`
// bounds the coordinate count of any single graded component;
// `max_work` bounds operator assembly (n! * dim^n for symmetrizers,
// C(p+q,p) * dim^(p+q) for shuffles).
struct Budget {
    std::size_t max_ambient = 500000;
    std::size_t max_work = 50000000;

    void check_ambient(std::size_t n, const char* what) const {
        if (n > max_ambient) throw budget_error(std::string("ambient budget exceeded in ") + what, n);
    }
    void check_work(std::size_t n, const char* what) const {
        if (n > max_work) throw budget_error(std::string("work budget exceeded in ") + what, n);
    }
};

struct ComputeOptions {
    Budget budget;
    unsigned threads = 1;       // worker threads for column assembly
    bool use_blocks = false;    // grading-block decomposition for ranks
};

// Deterministic, platform-independent PRNG (splitmix64). Used by the
// seeded fixture generators; never by the computations themselves.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

}  // namespace nichols
