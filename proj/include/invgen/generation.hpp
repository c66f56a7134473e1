#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invgen/torus_lattice.hpp"

namespace invgen {

/// One distinguished element: its torus class plus descriptive metadata.
struct ElementSpec {
    GroupFamily family;
    TorusClass torus;
    std::string label;       // x1..x4
    std::string order_rule;  // metadata only
    std::optional<std::string> refinement;
};

struct ABSet {
    GroupFamily family;
    std::vector<ElementSpec> elements;
};

ABSet ab_set(const GroupFamily& family);

// Element spec for an arbitrary torus class (label "t").
ElementSpec element_for(const TorusClass& t, std::string label = "t");

// Structural families containing the torus of x (its normalizer is implied).
std::vector<SubgroupFamily> overgroup_families(const ElementSpec& x);

std::vector<TorusClass> torus_set(const ElementSpec& x);
std::vector<TorusClass> residual_classes(const std::vector<ElementSpec>& A);
Rational residual_leading(const std::vector<ElementSpec>& A);

using TorusPair = std::pair<TorusClass, TorusClass>;

// Largest class count for which the quadratic relation computations are attempted.
inline constexpr std::size_t kMaxRelationClasses = 6000;

std::vector<TorusPair> relation_sim(const GroupFamily& family);
Rational leading_term_two_random(const GroupFamily& family);
Rational pinv_leading(const TorusClass& t);

struct SubsetResidual {
    unsigned mask = 0;  // bit i set when element i is in the subset
    std::vector<std::string> labels;
    std::size_t count = 0;
    Rational mass;
    std::vector<TorusClass> sample;  // first classes in canonical order
};

struct AbVerification {
    GroupFamily family;
    ABSet ab;
    bool empty = false;
    std::vector<TorusClass> residual;  // full intersection, truncated at kResidualListCap
    std::map<std::string, std::vector<std::string>> per_element_families;
    std::vector<SubsetResidual> subset_residuals;  // every nonempty proper subset
    bool proper_subsets_nonempty = false;
};

inline constexpr std::size_t kResidualListCap = 10000;
inline constexpr std::size_t kResidualSampleCap = 8;

AbVerification verify_ab(const GroupFamily& family);

struct SharpnessWitness {
    std::vector<TorusClass> triple;
    TorusClass witness;         // a class in the residual
    std::string proof_witness;  // which of the three proof patterns applies
    bool proof_witness_valid = false;
    Rational residual_mass;
};

struct SharpnessReport {
    int m = 0;
    bool all_triples_blocked = false;
    bool proof_witnesses_valid = false;
    Rational min_residual_mass;
    Rational bound;  // 1/(2^m m!)
    std::size_t triples = 0;
    std::vector<SharpnessWitness> witnesses;
};

// Symplectic groups in even characteristic, 2 <= m <= 6.
SharpnessReport sharpness_triples(int m);

struct AlphaEntry {
    GroupFamily family;
    TorusClass argmin;
    Rational value;
    Rational bound;  // 1/(4m)
};

struct AlphaReport {
    int m_max = 0;
    bool bound_holds = false;
    bool d4_equality = false;              // (2-,2-) in D+(4) attains 1/16
    std::vector<AlphaEntry> entries;
    std::vector<AlphaEntry> equality_cases;  // every family where the minimum equals the bound
    bool ok() const { return bound_holds && d4_equality; }
};

// Families B, C (both parities), D+, D- for 2 <= m <= m_max wherever the row exists.
AlphaReport alpha_check(int m_max);

}  // namespace invgen
