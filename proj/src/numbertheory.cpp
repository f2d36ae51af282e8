#include "coprime/numbertheory.hpp"

#include <stdexcept>
#include <string>

#include "coprime/errors.hpp"

namespace coprime::nt {

namespace {

void check_range(std::int64_t n, std::int64_t cap) {
    if (n < 0) throw std::domain_error("numbertheory: n must be >= 0, got " + std::to_string(n));
    if (n > cap)
        throw CapExceeded("numbertheory: n = " + std::to_string(n) +
                          " exceeds the configured sieve cap " + std::to_string(cap));
}

}  // namespace

std::vector<std::int64_t> sieve_primes(std::int64_t n, std::int64_t cap) {
    check_range(n, cap);
    std::vector<std::int64_t> primes;
    if (n < 2) return primes;

    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (composite[p]) continue;
        for (std::int64_t m = p * p; m <= n; m += p) composite[m] = true;
    }
    for (std::int64_t v = 2; v <= n; ++v)
        if (!composite[v]) primes.push_back(v);
    return primes;
}

std::int64_t prime_pi(std::int64_t n, std::int64_t cap) {
    return static_cast<std::int64_t>(sieve_primes(n, cap).size());
}

FactorTable FactorTable::build(std::int64_t n, std::int64_t cap) {
    if (n < 2) throw std::domain_error("numbertheory: factor table needs n >= 2, got " + std::to_string(n));
    check_range(n, cap);

    // Smallest prime factor for every value in [2, n].
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (spf[p] != 0) continue;
        for (std::int64_t m = p; m <= n; m += p)
            if (spf[m] == 0) spf[m] = static_cast<std::int32_t>(p);
    }

    FactorTable t;
    t.n_ = n;
    t.index_of_.assign(static_cast<std::size_t>(n) + 1, -1);
    for (std::int64_t v = 2; v <= n; ++v) {
        if (spf[v] == v) {
            t.index_of_[v] = static_cast<std::int32_t>(t.primes_.size());
            t.primes_.push_back(v);
        }
    }

    t.offsets_.reserve(static_cast<std::size_t>(n));
    t.offsets_.push_back(0);
    for (std::int64_t v = 2; v <= n; ++v) {
        std::int64_t m = v;
        while (m > 1) {
            std::int64_t p = spf[m];
            t.factors_.push_back(p);
            while (m % p == 0) m /= p;
        }
        t.offsets_.push_back(static_cast<std::uint32_t>(t.factors_.size()));
    }
    return t;
}

int FactorTable::prime_index(std::int64_t p) const {
    if (p < 2 || p > n_) return -1;
    return index_of_[static_cast<std::size_t>(p)];
}

std::span<const std::int64_t> FactorTable::factors_of(std::int64_t v) const {
    if (v < 2 || v > n_)
        throw std::domain_error("numbertheory: value " + std::to_string(v) +
                                " outside factor table range 2.." + std::to_string(n_));
    auto lo = offsets_[static_cast<std::size_t>(v) - 2];
    auto hi = offsets_[static_cast<std::size_t>(v) - 1];
    return {factors_.data() + lo, static_cast<std::size_t>(hi - lo)};
}

int FactorTable::l_of(std::int64_t v) const {
    return static_cast<int>(factors_of(v).size());
}

}  // namespace coprime::nt
