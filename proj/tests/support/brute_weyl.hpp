#pragma once

// Brute-force class counts for S_n and W(B_m), built from explicit group elements.
// Used as an oracle against the closed formulas.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "invgen/partition.hpp"

namespace brute {

inline std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(s); !seen[x]; x = perm[x]) {
            seen[x] = true;
            c.push_back(x);
        }
        out.push_back(c);
    }
    return out;
}

inline std::map<invgen::Partition, long> symmetric_cycle_types(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<invgen::Partition, long> counts;
    do {
        std::vector<int> lens;
        for (const auto& c : cycles_of(perm)) lens.push_back(static_cast<int>(c.size()));
        ++counts[invgen::Partition(lens)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

struct SignedCounts {
    std::map<invgen::SignedPartition, long> all;       // W(B_m)
    std::map<invgen::SignedPartition, long> even_neg;  // W(D_m): even number of sign changes
    std::map<invgen::SignedPartition, long> odd_neg;   // the other coset
    long order = 0;
};

// Every signed permutation i -> signs[i] * perm(i); a cycle is negative when it carries an odd number of sign changes.
inline SignedCounts hyperoctahedral_types(int m) {
    SignedCounts out;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned signs = 0; signs < (1U << m); ++signs) {
            std::vector<invgen::SignedPart> parts;
            for (const auto& c : cycles_of(perm)) {
                int neg = 0;
                for (int x : c) neg += (signs >> x) & 1U;
                parts.push_back({static_cast<std::uint8_t>(c.size()), static_cast<std::int8_t>(neg % 2 ? -1 : 1)});
            }
            invgen::SignedPartition sp(parts);
            ++out.all[sp];
            (__builtin_popcount(signs) % 2 ? out.odd_neg : out.even_neg)[sp]++;
            ++out.order;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace brute
