#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "invgen/rational.hpp"

namespace invgen::g2 {

/// a + b*sqrt(3) with rational a, b.
struct Sqrt3Number {
    Rational a;
    Rational b;

    friend Sqrt3Number operator+(const Sqrt3Number& x, const Sqrt3Number& y) { return {x.a + y.a, x.b + y.b}; }
    friend Sqrt3Number operator-(const Sqrt3Number& x, const Sqrt3Number& y) { return {x.a - y.a, x.b - y.b}; }
    friend Sqrt3Number operator*(const Sqrt3Number& x, const Sqrt3Number& y) {
        return {x.a * y.a + Rational(3) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const Sqrt3Number&, const Sqrt3Number&) = default;
};

struct Vec2 {
    Sqrt3Number x;
    Sqrt3Number y;

    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

Sqrt3Number dot(const Vec2& u, const Vec2& v);
Vec2 scale(const Rational& c, const Vec2& v);

inline constexpr int kRootCount = 12;
using RootMask = std::uint16_t;
using Perm = std::array<std::uint8_t, kRootCount>;

class RootSystem {
public:
    RootSystem();

    const std::vector<Vec2>& roots() const { return roots_; }
    bool is_long(int i) const { return long_[i]; }
    int negative(int i) const { return neg_[i]; }
    // Index of roots[i] + roots[j], or -1 if the sum is not a root.
    int sum(int i, int j) const { return sum_[i][j]; }
    // Index of the image of roots[j] under the reflection in roots[i].
    int reflect(int i, int j) const { return refl_[i][j]; }
    int simple_short() const { return 0; }
    int simple_long() const { return 1; }
    int index_of(const Vec2& v) const;  // -1 if not a root

private:
    std::vector<Vec2> roots_;
    std::vector<bool> long_;
    std::vector<int> neg_;
    std::vector<std::vector<int>> sum_;
    std::vector<std::vector<int>> refl_;
};

const RootSystem& root_system();

/// Weyl group element, stored as the permutation it induces on the 12 roots.
struct WeylElement {
    Perm perm{};

    int operator()(int root) const { return perm[root]; }
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm < b.perm; }
};

WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);
WeylElement identity_element();
WeylElement reflection(int root);
int element_order(const WeylElement& w);

// All 12 elements; index 0 is the identity.
const std::vector<WeylElement>& weyl_group();
int element_index(const WeylElement& w);

struct ConjugacyClass {
    int id = 0;  // 1..6: short reflection, long reflection, identity, -1, order 3, order 6
    std::string name;
    std::string torus_order;
    WeylElement representative;
    int size = 0;
    std::vector<int> members;  // indices into weyl_group()
};

const std::vector<ConjugacyClass>& conjugacy_classes_g2();
int class_id_of(const WeylElement& w);

enum class SubsystemType { A2Long, A2Short, A1xA1Short, A1Long, A1Short, Other };
std::string to_string(SubsystemType t);

struct Subsystem {
    RootMask roots = 0;
    SubsystemType type = SubsystemType::Other;
    // true when the set is 3-closed but not closed (only admitted when 3 | q)
    bool needs_p3 = false;

    friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.roots == b.roots; }
};

/// W-orbit of subsystems together with the normalizer quotient N_W(W(Psi))/W(Psi).
struct SubsystemClass {
    SubsystemType type = SubsystemType::Other;
    std::vector<Subsystem> members;
    int quotient_order = 1;
    int quotient_class_count = 1;
    bool needs_p3 = false;
    bool maximal = false;  // not contained in a larger admitted proper subsystem
};

// Proper nonempty symmetric closed subsets (3-closed when p3 is set).
std::vector<Subsystem> all_subsystems(bool p3);
std::vector<SubsystemClass> subsystem_classes(bool p3);
std::vector<Subsystem> stable_subsystems(const WeylElement& w, bool p3);
bool is_stable(const WeylElement& w, RootMask roots);

// Subgroup generated by the reflections in the roots of the mask, as element indices.
std::vector<int> reflection_subgroup(RootMask roots);

struct QuotientClass {
    int index = 0;  // 0 is the class of the trivial coset
    bool trivial = true;
    int quotient_order = 1;
    int class_count = 1;
};

// Conjugacy class of the image of w in N_W(W(Psi))/W(Psi). Throws ContractError if w does not stabilize Psi.
QuotientClass subgroup_class_of(const WeylElement& w, const Subsystem& psi);

/// Torus class x subgroup family incidence.
struct G2Incidence {
    bool p3 = false;
    std::vector<std::string> columns;
    // rows[j-1][c]: torus class j lies in a member of family c
    std::array<std::vector<bool>, 6> rows;
    // Centralizer cross-check: the classes derived for "C" against the even-order rule (q odd).
    std::vector<int> centralizer_derived;
    std::vector<int> centralizer_even_order;
    bool centralizer_agrees = true;

    bool contains(int column, int torus_class) const { return rows[torus_class - 1][column]; }
    int column_index(const std::string& tag) const;  // -1 if absent
};

G2Incidence g2_incidence(bool p3);

}  // namespace invgen::g2
