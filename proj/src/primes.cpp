// SPDX-License-Identifier: Apache-2.0

#include "satstat/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace satstat {

std::vector<std::uint32_t> sieve_primes(std::uint64_t bound) {
    std::vector<std::uint32_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
    }
    return primes;
}

SpfTable::SpfTable(std::uint64_t bound) : spf_(bound + 1, 0) {
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= bound; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SpfTable::factor(std::uint64_t m) const {
    if (m == 0 || m >= spf_.size())
        throw std::out_of_range("SpfTable::factor: argument out of range");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    while (m > 1) {
        const std::uint32_t p = spf_[m];
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

ForcedZeroSpec::ForcedZeroSpec() = default;

ForcedZeroSpec ForcedZeroSpec::parse(const std::string& text) {
    ForcedZeroSpec s;
    s.text_ = text;
    if (text.empty() || text == "none") {
        s.kind_ = Kind::None;
        s.text_ = "none";
        return s;
    }
    if (text == "all") {
        s.kind_ = Kind::All;
        return s;
    }
    if (auto pos = text.find("mod"); pos != std::string::npos) {
        s.kind_ = Kind::Residue;
        s.residue_ = std::stoull(text.substr(0, pos));
        s.modulus_ = std::stoull(text.substr(pos + 3));
        if (s.modulus_ < 2 || s.residue_ >= s.modulus_)
            throw std::invalid_argument("ForcedZeroSpec: bad residue class '" + text + "'");
        return s;
    }
    if (text.rfind("gt", 0) == 0) {
        s.kind_ = Kind::Greater;
        s.threshold_ = std::stoull(text.substr(2));
        return s;
    }
    s.kind_ = Kind::List;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(start, comma - start);
        if (tok.empty()) throw std::invalid_argument("ForcedZeroSpec: empty list entry");
        s.list_.push_back(std::stoull(tok));
        start = comma + 1;
    }
    std::sort(s.list_.begin(), s.list_.end());
    return s;
}

bool ForcedZeroSpec::contains(std::uint64_t p) const {
    switch (kind_) {
        case Kind::None: return false;
        case Kind::All: return true;
        case Kind::List: return std::binary_search(list_.begin(), list_.end(), p);
        case Kind::Residue: return p % modulus_ == residue_;
        case Kind::Greater: return p > threshold_;
    }
    return false;
}

bool ForcedZeroSpec::empty() const { return kind_ == Kind::None; }

}  // namespace satstat
