// SPDX-License-Identifier: Apache-2.0

#include "satstat/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace satstat {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::uint64_t Partition::weight() const {
    std::uint64_t w = 0;
    for (auto p : parts_) w += p;
    return w;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

KappaIndex::KappaIndex(int n, std::vector<std::uint32_t> kappa)
    : n_(n), kappa_(std::move(kappa)) {
    if (n_ < 2) throw std::invalid_argument("KappaIndex: rank must be >= 2");
    if (kappa_.size() != static_cast<std::size_t>(n_ - 1))
        throw std::invalid_argument("KappaIndex: tuple length must be n-1");
}

std::uint64_t KappaIndex::weighted_norm() const {
    std::uint64_t norm = 0;
    for (std::size_t j = 0; j < kappa_.size(); ++j)
        norm += static_cast<std::uint64_t>(n_ - 1 - j) * kappa_[j];
    return norm;
}

std::uint64_t KappaIndex::degree() const {
    std::uint64_t d = 0;
    for (auto k : kappa_) d += k;
    return d;
}

KappaIndex KappaIndex::dual() const {
    std::vector<std::uint32_t> rev(kappa_.rbegin(), kappa_.rend());
    return KappaIndex(n_, std::move(rev));
}

bool KappaIndex::is_palindromic() const {
    return std::equal(kappa_.begin(), kappa_.end(), kappa_.rbegin());
}

bool KappaIndex::is_zero() const {
    return std::all_of(kappa_.begin(), kappa_.end(), [](std::uint32_t k) { return k == 0; });
}

KappaIndex KappaIndex::scaled(std::uint32_t e) const {
    std::vector<std::uint32_t> out(kappa_.size());
    for (std::size_t j = 0; j < kappa_.size(); ++j) out[j] = kappa_[j] * e;
    return KappaIndex(n_, std::move(out));
}

bool KappaIndex::operator<(const KappaIndex& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return kappa_ < rhs.kappa_;
}

std::string KappaIndex::dash_string() const {
    std::string s;
    for (std::size_t j = 0; j < kappa_.size(); ++j) {
        if (j) s += '-';
        s += std::to_string(kappa_[j]);
    }
    return s;
}

Partition partition_from_kappa(const KappaIndex& kappa) {
    const int n = kappa.rank();
    std::vector<std::uint32_t> parts(n, 0);
    // lambda_i = sum_{l=1}^{n-i} kappa_l
    for (int i = 1; i <= n; ++i) {
        std::uint32_t s = 0;
        for (int l = 1; l <= n - i; ++l) s += kappa.entry(l - 1);
        parts[i - 1] = s;
    }
    return Partition(std::move(parts));
}

KappaIndex partition_to_kappa(const Partition& lambda, int n) {
    if (lambda.rows() > static_cast<std::size_t>(n))
        throw std::invalid_argument("partition_to_kappa: more than n parts");
    const std::uint32_t strip = lambda.part(n - 1);
    std::vector<std::uint32_t> kappa(n - 1, 0);
    // kappa_j = lambda_{n-j} - lambda_{n-j+1}; the strip cancels in the
    // difference but keeps the convention explicit
    for (int j = 1; j <= n - 1; ++j)
        kappa[j - 1] = (lambda.part(n - j - 1) - strip) - (lambda.part(n - j) - strip);
    return KappaIndex(n, std::move(kappa));
}

void SchurExpansion::add(const Partition& shape, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(shape);
    if (it == terms_.end()) {
        terms_.emplace(shape, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const BigInt* SchurExpansion::find(const Partition& shape) const {
    auto it = terms_.find(shape);
    return it == terms_.end() ? nullptr : &it->second;
}

BigInt SchurExpansion::constant_term() const {
    const BigInt* c = find(Partition());
    return c ? *c : BigInt();
}

std::string SchurExpansion::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [shape, coeff] : terms_) {
        if (!first) s += ", ";
        first = false;
        s += shape.to_string() + ":" + coeff.to_string();
    }
    s += '}';
    return s;
}

}  // namespace satstat
