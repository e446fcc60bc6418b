// SPDX-License-Identifier: Apache-2.0
//
// Prime sieving, factorization via smallest-prime-factor tables, and the
// forced-zero prime sets used to inject vanishing coefficients into synthetic
// forms.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace satstat {

std::vector<std::uint32_t> sieve_primes(std::uint64_t bound);

class SpfTable {
public:
    explicit SpfTable(std::uint64_t bound);

    std::uint64_t bound() const { return spf_.size() - 1; }

    // (prime, multiplicity) pairs, ascending primes; m must be <= bound
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint64_t m) const;

private:
    std::vector<std::uint32_t> spf_;
};

// Grammar: "none" | "all" | "p1,p2,..." (explicit primes)
//        | "<r>mod<m>" (primes in a residue class, e.g. "3mod4")
//        | "gt<N>" (primes above a threshold, e.g. "gt1000")
class ForcedZeroSpec {
public:
    ForcedZeroSpec();  // none
    static ForcedZeroSpec parse(const std::string& text);

    bool contains(std::uint64_t p) const;
    bool empty() const;
    const std::string& text() const { return text_; }

private:
    enum class Kind { None, All, List, Residue, Greater };
    Kind kind_ = Kind::None;
    std::vector<std::uint64_t> list_;
    std::uint64_t residue_ = 0, modulus_ = 0, threshold_ = 0;
    std::string text_ = "none";
};

}  // namespace satstat
