#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "invgen/group_family.hpp"
#include "invgen/partition.hpp"
#include "invgen/rational.hpp"

namespace invgen {

struct G2ClassId {
    int id = 0;  // 1..6
    friend bool operator==(const G2ClassId&, const G2ClassId&) = default;
    friend auto operator<=>(const G2ClassId&, const G2ClassId&) = default;
};

using TorusData = std::variant<Partition, SignedPartition, G2ClassId>;

/// A class of maximal tori, identified with a Weyl group (coset) class.
struct TorusClass {
    GroupFamily family;
    TorusData data;
    bool split = false;  // D+ type with all parts even and positive: two classes merged
    Rational probability;

    const Partition& partition() const { return std::get<Partition>(data); }
    const SignedPartition& signed_partition() const { return std::get<SignedPartition>(data); }
    int g2_id() const { return std::get<G2ClassId>(data).id; }

    // "3,1" / "3-,1+" / "w5"
    std::string str() const;

    // Same family and same data; probability is derived.
    friend bool operator==(const TorusClass& a, const TorusClass& b) { return a.family == b.family && a.data == b.data; }
    friend bool operator<(const TorusClass& a, const TorusClass& b) { return a.data < b.data; }
};

TorusClass make_torus_class(const GroupFamily& family, TorusData data);
// Parses "3-,1+", "2,1" or "w5"/"5" according to the family.
TorusClass parse_torus_class(const GroupFamily& family, const std::string& text);
bool belongs_to(const GroupFamily& family, const TorusData& data);

std::vector<TorusClass> torus_classes(const GroupFamily& family);
Rational class_probability(const GroupFamily& family, const TorusClass& t);

// Centralizer-order style weights, exact integers.
// |S_n| / z_lambda
mpz_class cycle_type_class_size(std::span<const int> parts);
// |W(B_m)| / z for the signed type
mpz_class signed_type_class_size(std::span<const SignedPart> parts);
// 1/z_lambda and the B-type analogue
Rational cycle_type_probability(std::span<const int> parts);
Rational signed_type_probability(std::span<const SignedPart> parts);
mpz_class hyperoctahedral_order(int m);

bool is_split_d_type(std::span<const SignedPart> parts);

// Torus classes of the distinguished elements of the family.
// Throws RangeError when the rank is below the row's condition.
std::vector<TorusData> distinguished_torus_types(const GroupFamily& family);

// Minimum class probability over the torus classes of the distinguished elements; ties go to
// the first in canonical class order.
std::pair<TorusClass, Rational> min_class_probability(const GroupFamily& family);
// Minimum over every torus class of the family (for comparison; not the bounded quantity).
std::pair<TorusClass, Rational> min_class_probability_all_classes(const GroupFamily& family);

Rational prob_sign_product(int m, int sign);
Rational prob_positive_fixed_part(int m);

}  // namespace invgen
