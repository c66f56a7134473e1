#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "invgen/weyl_stats.hpp"

namespace invgen {

enum class SubgroupKind {
    ParabolicStab,   // type A, k-space stabilizer
    NondegStabA,     // unitary, nondegenerate {k, n-k}
    TotSingStab,     // totally singular k-space
    NondegStabSp,    // symplectic {a, m-a}
    NondegStabO,     // orthogonal nondegenerate 2a-space of type sign
    HyperplaneSO,    // SO^sign inside Sp, q even
    Imprimitive,     // t blocks of size l; orthogonal blocks carry a type
    TotSingPairGL,   // alias of the top totally singular stabilizer, not emitted by the catalog
    ExtField,        // prime degree b
    GUOverQ,         // GU_m(q)
    TorusNormalizer  // the class itself
};

/// One class of maximal subgroups of maximal rank, described symbolically.
struct SubgroupFamily {
    GroupFamily family;
    SubgroupKind kind;
    int a = 0;     // k, a, l or b depending on kind
    int b = 0;     // t for Imprimitive
    int sign = 0;  // +-1 for NondegStabO, HyperplaneSO, orthogonal Imprimitive
    TorusData normalized{};  // TorusNormalizer only

    // "P(2)", "N(1,-)", "EF(3)", "GU", "SO(+)", "Imp(2,3)", "Imp(2,2,-)", "Norm(3-,1+)"
    std::string tag() const;
};

// Full catalog for a classical family: structural families, then one normalizer per torus class.
std::vector<SubgroupFamily> subgroup_families(const GroupFamily& family);
// Same without the normalizers.
std::vector<SubgroupFamily> structural_families(const GroupFamily& family);

bool contains(const SubgroupFamily& f, const TorusClass& t);
// Unchecked predicates on raw part lists (descending), used by the bulk scans.
bool contains_parts(const SubgroupFamily& f, std::span<const int> parts);
bool contains_parts(const SubgroupFamily& f, std::span<const SignedPart> parts);

bool shares_overgroup(const TorusClass& t1, const TorusClass& t2);

// Subset-sum helpers. Bit s is set when some sub-multiset sums to s.
std::uint64_t subset_sums(std::span<const int> parts);
struct SignedSums {
    std::uint64_t plus = 0;   // sums reachable with sign product +
    std::uint64_t minus = 0;  // sums reachable with sign product -
};
SignedSums signed_subset_sums(std::span<const SignedPart> parts);
// Can the lengths be split into t groups of sum l each (and, if sign != 0, each of sign product sign)?
bool splits_into_blocks(std::span<const int> lengths, std::span<const int> signs, int l, int t, int sign);

/// Rows = torus classes, columns = catalog families.
struct IncidenceMatrix {
    GroupFamily family;
    std::vector<TorusClass> classes;
    std::vector<std::string> columns;
    std::vector<std::vector<bool>> cells;  // cells[row][col]
};

// Classical families use the catalog; G2 uses the root-system derivation.
IncidenceMatrix incidence(const GroupFamily& family, bool include_normalizers = true);

}  // namespace invgen
