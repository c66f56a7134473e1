#include "invgen/partition.hpp"

#include <algorithm>
#include <sstream>

#include "invgen/errors.hpp"

namespace invgen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        n_ += p;
    }
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition '" + text + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad partition '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    std::size_t k = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < k; ++i)
        if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
    return a.parts_.size() <=> b.parts_.size();
}

SignedPartition::SignedPartition(std::vector<SignedPart> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), signed_part_before);
    for (const auto& p : parts_) {
        if (p.length == 0) throw std::invalid_argument("signed partition parts must be positive");
        if (p.sign != 1 && p.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        m_ += p.length;
    }
}

SignedPartition::SignedPartition(std::initializer_list<std::pair<int, int>> parts) {
    std::vector<SignedPart> v;
    for (auto [len, sign] : parts) {
        if (len <= 0 || len > 255) throw std::invalid_argument("part length out of range");
        v.push_back({static_cast<std::uint8_t>(len), static_cast<std::int8_t>(sign)});
    }
    *this = SignedPartition(std::move(v));
}

int SignedPartition::sign_product() const { return invgen::sign_product(parts_); }

std::string SignedPartition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i].length);
        s += parts_[i].sign > 0 ? '+' : '-';
    }
    return s;
}

SignedPartition SignedPartition::parse(const std::string& text) {
    std::vector<SignedPart> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() < 2 || (item.back() != '+' && item.back() != '-'))
            throw std::invalid_argument("bad signed partition '" + text + "'");
        int sign = item.back() == '+' ? 1 : -1;
        item.pop_back();
        std::size_t used = 0;
        int len = 0;
        try {
            len = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad signed partition '" + text + "'");
        }
        if (used != item.size() || len <= 0 || len > 255)
            throw std::invalid_argument("bad signed partition '" + text + "'");
        parts.push_back({static_cast<std::uint8_t>(len), static_cast<std::int8_t>(sign)});
    }
    if (parts.empty()) throw std::invalid_argument("empty signed partition");
    return SignedPartition(std::move(parts));
}

// Underlying partition first (reverse lexicographic on lengths), then signs with + first.
std::strong_ordering operator<=>(const SignedPartition& a, const SignedPartition& b) {
    if (a.m_ != b.m_) return a.m_ <=> b.m_;
    std::size_t k = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < k; ++i)
        if (a.parts_[i].length != b.parts_[i].length) return b.parts_[i].length <=> a.parts_[i].length;
    if (a.parts_.size() != b.parts_.size()) return a.parts_.size() <=> b.parts_.size();
    for (std::size_t i = 0; i < k; ++i)
        if (a.parts_[i].sign != b.parts_[i].sign) return b.parts_[i].sign <=> a.parts_[i].sign;
    return std::strong_ordering::equal;
}

int sign_product(std::span<const SignedPart> parts) {
    int s = 1;
    for (const auto& p : parts) s *= p.sign;
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& buf,
                    const std::function<void(std::span<const int>)>& fn) {
    if (remaining == 0) {
        fn(buf);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        buf.push_back(k);
        partitions_rec(remaining - k, k, buf, fn);
        buf.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(std::span<const int>)>& fn) {
    if (n < 1) throw RangeError("partition size must be positive");
    std::vector<int> buf;
    buf.reserve(n);
    partitions_rec(n, n, buf, fn);
}

void for_each_signed_partition(int m, const std::function<void(std::span<const SignedPart>)>& fn) {
    if (m < 1 || m > 255) throw RangeError("signed partition size out of range");
    std::vector<SignedPart> out;
    std::vector<std::pair<int, int>> groups;  // (length, multiplicity)
    std::vector<int> plus;                    // number of + parts per group
    for_each_partition(m, [&](std::span<const int> lam) {
        groups.clear();
        for (int p : lam) {
            if (!groups.empty() && groups.back().first == p)
                ++groups.back().second;
            else
                groups.emplace_back(p, 1);
        }
        plus.assign(groups.size(), 0);
        for (std::size_t g = 0; g < groups.size(); ++g) plus[g] = groups[g].second;
        while (true) {
            out.clear();
            for (std::size_t g = 0; g < groups.size(); ++g) {
                auto len = static_cast<std::uint8_t>(groups[g].first);
                for (int i = 0; i < plus[g]; ++i) out.push_back({len, 1});
                for (int i = plus[g]; i < groups[g].second; ++i) out.push_back({len, -1});
            }
            fn(out);
            // odometer: last group varies fastest, plus count runs mult..0
            std::size_t g = groups.size();
            while (g > 0) {
                --g;
                if (plus[g] > 0) {
                    --plus[g];
                    break;
                }
                plus[g] = groups[g].second;
                if (g == 0) return;
            }
        }
    });
}

std::vector<Partition> partitions(int n) {
    if (n < 1 || n > kMaxPartitionN)
        throw RangeError("partitions: n must be in [1, " + std::to_string(kMaxPartitionN) + "]");
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); });
    return out;
}

std::vector<SignedPartition> signed_partitions(int m) {
    if (m < 1 || m > kMaxSignedPartitionM)
        throw RangeError("signed_partitions: m must be in [1, " + std::to_string(kMaxSignedPartitionM) + "]");
    std::vector<SignedPartition> out;
    for_each_signed_partition(m, [&](std::span<const SignedPart> p) {
        out.emplace_back(std::vector<SignedPart>(p.begin(), p.end()));
    });
    return out;
}

}  // namespace invgen
