#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace invgen {

inline constexpr int kMaxPartitionN = 60;
inline constexpr int kMaxSignedPartitionM = 40;

/// Integer partition, parts in descending order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // sorts; throws on non-positive parts

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t size() const { return parts_.size(); }

    // "3,2,1"
    std::string str() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Canonical order: reverse lexicographic, so (3) < (2,1) < (1,1,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct SignedPart {
    std::uint8_t length = 0;
    std::int8_t sign = 1;  // +1 or -1

    friend bool operator==(const SignedPart&, const SignedPart&) = default;
};

// Part order used inside a signed partition and for sequence ordering:
// longer first, and for equal length + before -.
inline bool signed_part_before(const SignedPart& a, const SignedPart& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.sign > b.sign;
}

/// Signed partition of m: a multiset of (length, sign) pairs.
class SignedPartition {
public:
    SignedPartition() = default;
    explicit SignedPartition(std::vector<SignedPart> parts);
    // Convenience: {{3,-1},{1,+1}}.
    SignedPartition(std::initializer_list<std::pair<int, int>> parts);

    const std::vector<SignedPart>& parts() const { return parts_; }
    int m() const { return m_; }
    std::size_t size() const { return parts_.size(); }
    int sign_product() const;

    // "3-,1+"
    std::string str() const;
    static SignedPartition parse(const std::string& text);

    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
    friend std::strong_ordering operator<=>(const SignedPartition& a, const SignedPartition& b);

private:
    std::vector<SignedPart> parts_;
    int m_ = 0;
};

std::vector<Partition> partitions(int n);
std::vector<SignedPartition> signed_partitions(int m);

// Streaming enumeration in canonical order; the span is only valid during the call.
// No range cap beyond what fits in the part types; callers pick their own limits.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& fn);
void for_each_signed_partition(int m, const std::function<void(std::span<const SignedPart>)>& fn);

int sign_product(std::span<const SignedPart> parts);

}  // namespace invgen
