#pragma once

#include <string>

namespace invgen {

// Subset sums are tracked in 64-bit masks, so ranks stay below 64.
inline constexpr int kMaxFamilyRank = 63;

enum class Series { LinearA, UnitaryA, SymplecticC, OrthogonalB, OrthogonalDPlus, OrthogonalDMinus, G2 };

enum class QParity { Odd, Even };

/// Ambient group schema. q is symbolic: only its parity and whether 3 divides it matter.
class GroupFamily {
public:
    static GroupFamily linear(int n);
    static GroupFamily unitary(int n);
    static GroupFamily symplectic(int m, QParity parity);
    static GroupFamily orthogonal_odd(int m);
    static GroupFamily orthogonal_plus(int m);
    static GroupFamily orthogonal_minus(int m);
    static GroupFamily g2(bool three_divides_q);

    Series series() const { return series_; }
    // n for the A series, m otherwise, 2 for G2.
    int rank() const { return rank_; }
    QParity parity() const { return parity_; }
    bool three_divides_q() const { return p3_; }

    bool is_type_a() const { return series_ == Series::LinearA || series_ == Series::UnitaryA; }
    bool is_signed() const {
        return series_ == Series::SymplecticC || series_ == Series::OrthogonalB ||
               series_ == Series::OrthogonalDPlus || series_ == Series::OrthogonalDMinus;
    }
    bool is_type_d() const { return series_ == Series::OrthogonalDPlus || series_ == Series::OrthogonalDMinus; }
    bool is_classical() const { return series_ != Series::G2; }
    // Required sign product of torus classes for D types, 0 otherwise.
    int d_sign() const;

    // "A(3)", "2A(4)", "C(4,q even)", "B(3)", "D+(6)", "D-(5)", "G2(3|q)"
    std::string str() const;

    friend bool operator==(const GroupFamily&, const GroupFamily&) = default;

private:
    GroupFamily(Series s, int rank, QParity parity, bool p3) : series_(s), rank_(rank), parity_(parity), p3_(p3) {}

    Series series_;
    int rank_;
    QParity parity_;
    bool p3_;
};

// Parses the CLI spellings A, 2A, C (also Sp), B, D+, D-, G2.
Series parse_series(const std::string& text);
GroupFamily make_family(Series s, int rank, QParity parity, bool p3);

}  // namespace invgen
