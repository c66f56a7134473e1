#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "invgen/errors.hpp"
#include "invgen/rootsys_g2.hpp"

using namespace invgen::g2;

namespace {

// Roots of G2 sit at the twelve multiples of 30 degrees; short ones at even multiples.
int angle_slot(const Vec2& v) {
    const double s3 = std::sqrt(3.0);
    double x = v.x.a.to_double() + v.x.b.to_double() * s3;
    double y = v.y.a.to_double() + v.y.b.to_double() * s3;
    double deg = std::atan2(y, x) * 180.0 / std::numbers::pi;
    return (static_cast<int>(std::lround(deg / 30.0)) + 12) % 12;
}

// The dihedral group of order 12 acting on the slots, with the expected class id of each element.
// Rotation by 60k degrees: j -> j + 2k. Reflection in the mirror at 30i degrees: j -> 2i - j.
// The mirror of a short root is perpendicular to it, so short reflections have odd i.
std::map<std::array<int, 12>, int> dihedral_oracle() {
    std::map<std::array<int, 12>, int> out;
    for (int k = 0; k < 6; ++k) {
        std::array<int, 12> p{};
        for (int j = 0; j < 12; ++j) p[j] = (j + 2 * k) % 12;
        int cls = k == 0 ? 3 : k == 3 ? 4 : (k == 2 || k == 4) ? 5 : 6;
        out[p] = cls;
    }
    for (int i = 0; i < 6; ++i) {
        std::array<int, 12> p{};
        for (int j = 0; j < 12; ++j) p[j] = ((2 * i - j) % 12 + 12) % 12;
        out[p] = i % 2 ? 1 : 2;
    }
    return out;
}

std::string members(const G2Incidence& inc, const std::string& column) {
    int c = inc.column_index(column);
    if (c < 0) return "absent";
    std::string s;
    for (int j = 1; j <= 6; ++j)
        if (inc.contains(c, j)) s += std::to_string(j);
    return s;
}

}  // namespace

TEST_CASE("root system shape") {
    const auto& rs = root_system();
    REQUIRE(rs.roots().size() == 12);
    int nlong = 0;
    std::set<int> slots;
    for (int i = 0; i < kRootCount; ++i) {
        int slot = angle_slot(rs.roots()[i]);
        slots.insert(slot);
        CHECK(rs.is_long(i) == (slot % 2 == 1));
        nlong += rs.is_long(i);
        CHECK(rs.negative(rs.negative(i)) == i);
        auto len = dot(rs.roots()[i], rs.roots()[i]);
        CHECK(len.b == invgen::Rational(0));
        CHECK(len.a == invgen::Rational(rs.is_long(i) ? 3 : 1));
    }
    CHECK(slots.size() == 12);
    CHECK(nlong == 6);
    CHECK(rs.index_of(rs.roots()[0] + rs.roots()[1]) >= 0);
}

TEST_CASE("Weyl group matches the dihedral oracle") {
    const auto& rs = root_system();
    std::array<int, 12> slot_of{};
    std::array<int, 12> root_at{};
    for (int i = 0; i < kRootCount; ++i) {
        slot_of[i] = angle_slot(rs.roots()[i]);
        root_at[slot_of[i]] = i;
    }
    auto oracle = dihedral_oracle();
    const auto& w = weyl_group();
    REQUIRE(w.size() == 12);
    CHECK(w[0] == identity_element());
    std::set<std::array<int, 12>> seen;
    for (const auto& g : w) {
        std::array<int, 12> p{};
        for (int j = 0; j < 12; ++j) p[j] = slot_of[g(root_at[j])];
        REQUIRE(oracle.count(p) == 1);
        CHECK(class_id_of(g) == oracle.at(p));
        seen.insert(p);
    }
    CHECK(seen.size() == 12);
}

TEST_CASE("conjugacy classes") {
    const auto& cs = conjugacy_classes_g2();
    REQUIRE(cs.size() == 6);
    std::vector<int> sizes, orders;
    for (const auto& c : cs) {
        sizes.push_back(c.size);
        orders.push_back(element_order(c.representative));
        CHECK(static_cast<int>(c.members.size()) == c.size);
    }
    CHECK(sizes == std::vector<int>{3, 3, 1, 1, 2, 2});
    CHECK(orders == std::vector<int>{2, 2, 1, 2, 3, 6});
    CHECK(class_id_of(reflection(root_system().simple_short())) == 1);
    CHECK(class_id_of(reflection(root_system().simple_long())) == 2);
}

TEST_CASE("group operations") {
    const auto& w = weyl_group();
    for (const auto& a : w) {
        CHECK(compose(a, inverse(a)) == identity_element());
        for (const auto& b : w) CHECK(element_index(compose(a, b)) >= 0);
    }
}

TEST_CASE("closed subsystems") {
    auto plain = all_subsystems(false);
    auto with3 = all_subsystems(true);
    CHECK(plain.size() == 10);
    CHECK(with3.size() == 11);
    int extra = 0;
    for (const auto& s : with3)
        if (s.needs_p3) {
            ++extra;
            CHECK(s.type == SubsystemType::A2Short);
        }
    CHECK(extra == 1);

    for (const auto& sc : subsystem_classes(true)) {
        if (sc.type == SubsystemType::A2Long || sc.type == SubsystemType::A2Short) {
            CHECK(sc.members.size() == 1);
            CHECK(sc.quotient_order == 2);
            CHECK(sc.quotient_class_count == 2);
            CHECK(sc.maximal);
        }
        if (sc.type == SubsystemType::A1xA1Short) {
            CHECK(sc.members.size() == 3);
            CHECK(sc.quotient_order == 1);
            CHECK(sc.maximal);
        }
        if (sc.type == SubsystemType::A1Long || sc.type == SubsystemType::A1Short) CHECK_FALSE(sc.maximal);
    }
    CHECK(reflection_subgroup(plain.back().roots).size() >= 2);
}

TEST_CASE("quotient class of a non-stabilizing element is rejected") {
    const auto& rs = root_system();
    Subsystem a1{static_cast<RootMask>((1U << rs.simple_short()) | (1U << rs.negative(rs.simple_short()))),
                 SubsystemType::A1Short, false};
    bool rejected = false;
    for (const auto& g : weyl_group()) {
        if (is_stable(g, a1.roots)) continue;
        CHECK_THROWS_AS(subgroup_class_of(g, a1), invgen::ContractError);
        rejected = true;
    }
    CHECK(rejected);
}

TEST_CASE("incidence with 3 | q") {
    auto inc = g2_incidence(true);
    CHECK(members(inc, "P(short)") == "13");
    CHECK(members(inc, "P(long)") == "23");
    CHECK(members(inc, "C") == "1234");
    CHECK(members(inc, "SL3(long)") == "235");
    CHECK(members(inc, "SU3(long)") == "146");
    CHECK(members(inc, "SL3(short)") == "135");
    CHECK(members(inc, "SU3(short)") == "246");
    for (int j = 1; j <= 6; ++j) CHECK(members(inc, "Norm(w" + std::to_string(j) + ")") == std::to_string(j));
    CHECK(inc.columns.size() == 13);
    CHECK(inc.centralizer_agrees);
    CHECK(inc.centralizer_derived == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("incidence without 3 | q") {
    auto inc = g2_incidence(false);
    CHECK(members(inc, "SL3(short)") == "absent");
    CHECK(members(inc, "SU3(short)") == "absent");
    CHECK(members(inc, "SL3(long)") == "235");
    CHECK(inc.columns.size() == 11);
}
