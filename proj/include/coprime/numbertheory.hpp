#pragma once

// Prime sieving, prime counting, and distinct-prime-factor tables.

#include <cstdint>
#include <span>
#include <vector>

namespace coprime::nt {

inline constexpr std::int64_t kDefaultSieveCap = 10'000'000;

// All primes in [2, n], ascending. Throws CapExceeded for n > cap,
// std::domain_error for n < 0.
std::vector<std::int64_t> sieve_primes(std::int64_t n,
                                       std::int64_t cap = kDefaultSieveCap);

// pi(n): number of primes <= n. pi(0) = pi(1) = 0.
std::int64_t prime_pi(std::int64_t n, std::int64_t cap = kDefaultSieveCap);

// Distinct-prime-factor table for every v in 2..n, built in one pass from a
// smallest-prime-factor sieve. Immutable once built; safe for concurrent reads.
class FactorTable {
public:
    // Throws std::domain_error for n < 2, CapExceeded for n > cap.
    static FactorTable build(std::int64_t n, std::int64_t cap = kDefaultSieveCap);

    std::int64_t limit() const { return n_; }

    // The k primes <= n, ascending.
    std::span<const std::int64_t> primes() const { return primes_; }
    int prime_count() const { return static_cast<int>(primes_.size()); }

    // 0-based position of p among the primes <= n; -1 when p is not one of them.
    int prime_index(std::int64_t p) const;

    // Ascending distinct prime factors of v, for v in 2..limit().
    std::span<const std::int64_t> factors_of(std::int64_t v) const;

    // l_v = number of distinct prime factors of v. Always >= 1.
    int l_of(std::int64_t v) const;

private:
    FactorTable() = default;

    std::int64_t n_ = 0;
    std::vector<std::int64_t> primes_;
    std::vector<std::int32_t> index_of_;   // value -> prime index, -1 otherwise
    std::vector<std::uint32_t> offsets_;   // CSR offsets, entry per v in 2..n
    std::vector<std::int64_t> factors_;    // flat factor storage
};

}  // namespace coprime::nt
