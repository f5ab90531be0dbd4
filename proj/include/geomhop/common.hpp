#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geomhop {

// Raised when a formula step leaves its mathematical domain (sqrt of a
// negative, asin outside [-1,1], division by zero) or when a derived
// element violates its element-kind range. Signals an infeasible value
// assignment to the caller, which resamples or discards.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when deduction cannot reach the query (missing fact, unknown
// formula, unresolved input).
class UnsolvableError : public std::runtime_error {
public:
    explicit UnsolvableError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when rejection sampling exhausts its budget for one example.
class GenerationExhausted : public std::runtime_error {
public:
    explicit GenerationExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Raised when no non-overlapping placement is found within budget.
class LayoutExhausted : public std::runtime_error {
public:
    explicit LayoutExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a dataset build cannot reach the requested counts.
class InsufficientYield : public std::runtime_error {
public:
    explicit InsufficientYield(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic cross-platform RNG. std:: distributions are not pinned by
// the standard, so all sampling goes through these helpers.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {
        // burn-in so nearby seeds diverge
        next();
        next();
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi] inclusive
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next() % span);
    }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // derive an independent stream (used for per-example seeds)
    uint64_t fork(uint64_t salt) {
        uint64_t z = (state_ ^ (salt * 0xd1342543de82ef95ULL)) + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// FNV-1a, used for file and config checksums in manifests.
uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64(const std::string& s);
std::string checksum_hex(const std::string& s);

}  // namespace geomhop
