#include "invgen/group_family.hpp"

#include "invgen/errors.hpp"

namespace invgen {

namespace {

void require_rank(int rank, int lo, const char* what) {
    if (rank < lo) throw RangeError(std::string(what) + ": rank " + std::to_string(rank) + " below minimum " + std::to_string(lo));
    if (rank > kMaxFamilyRank) throw RangeError(std::string(what) + ": rank above cap " + std::to_string(kMaxFamilyRank));
}

}  // namespace

GroupFamily GroupFamily::linear(int n) {
    require_rank(n, 2, "LinearA");
    return {Series::LinearA, n, QParity::Odd, false};
}

GroupFamily GroupFamily::unitary(int n) {
    require_rank(n, 3, "UnitaryA");
    return {Series::UnitaryA, n, QParity::Odd, false};
}

GroupFamily GroupFamily::symplectic(int m, QParity parity) {
    require_rank(m, 2, "SymplecticC");
    return {Series::SymplecticC, m, parity, false};
}

GroupFamily GroupFamily::orthogonal_odd(int m) {
    require_rank(m, 3, "OrthogonalB");
    return {Series::OrthogonalB, m, QParity::Odd, false};
}

GroupFamily GroupFamily::orthogonal_plus(int m) {
    require_rank(m, 4, "OrthogonalD+");
    return {Series::OrthogonalDPlus, m, QParity::Odd, false};
}

GroupFamily GroupFamily::orthogonal_minus(int m) {
    require_rank(m, 4, "OrthogonalD-");
    return {Series::OrthogonalDMinus, m, QParity::Odd, false};
}

GroupFamily GroupFamily::g2(bool three_divides_q) { return {Series::G2, 2, QParity::Odd, three_divides_q}; }

int GroupFamily::d_sign() const {
    if (series_ == Series::OrthogonalDPlus) return 1;
    if (series_ == Series::OrthogonalDMinus) return -1;
    return 0;
}

std::string GroupFamily::str() const {
    std::string r = "(" + std::to_string(rank_) + ")";
    switch (series_) {
        case Series::LinearA: return "A" + r;
        case Series::UnitaryA: return "2A" + r;
        case Series::SymplecticC:
            return "C(" + std::to_string(rank_) + (parity_ == QParity::Even ? ",q even)" : ",q odd)");
        case Series::OrthogonalB: return "B" + r;
        case Series::OrthogonalDPlus: return "D+" + r;
        case Series::OrthogonalDMinus: return "D-" + r;
        case Series::G2: return p3_ ? "G2(3|q)" : "G2(3!|q)";
    }
    return "?";
}

Series parse_series(const std::string& text) {
    if (text == "A") return Series::LinearA;
    if (text == "2A") return Series::UnitaryA;
    if (text == "C" || text == "Sp") return Series::SymplecticC;
    if (text == "B") return Series::OrthogonalB;
    if (text == "D+") return Series::OrthogonalDPlus;
    if (text == "D-") return Series::OrthogonalDMinus;
    if (text == "G2") return Series::G2;
    throw std::invalid_argument("unknown family '" + text + "'");
}

GroupFamily make_family(Series s, int rank, QParity parity, bool p3) {
    switch (s) {
        case Series::LinearA: return GroupFamily::linear(rank);
        case Series::UnitaryA: return GroupFamily::unitary(rank);
        case Series::SymplecticC: return GroupFamily::symplectic(rank, parity);
        case Series::OrthogonalB: return GroupFamily::orthogonal_odd(rank);
        case Series::OrthogonalDPlus: return GroupFamily::orthogonal_plus(rank);
        case Series::OrthogonalDMinus: return GroupFamily::orthogonal_minus(rank);
        case Series::G2: return GroupFamily::g2(p3);
    }
    throw std::invalid_argument("unknown series");
}

}  // namespace invgen
