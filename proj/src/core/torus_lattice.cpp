#include "invgen/torus_lattice.hpp"

#include <algorithm>

#include "invgen/errors.hpp"
#include "invgen/rootsys_g2.hpp"

namespace invgen {

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) out.push_back(p);
    }
    return out;
}

char sign_char(int s) { return s > 0 ? '+' : '-'; }

bool bit(std::uint64_t mask, int s) { return s >= 0 && s < 64 && ((mask >> s) & 1U); }

SubgroupFamily make(const GroupFamily& g, SubgroupKind k, int a = 0, int b = 0, int sign = 0) {
    return SubgroupFamily{g, k, a, b, sign, {}};
}

}  // namespace

std::string SubgroupFamily::tag() const {
    auto n = [](int v) { return std::to_string(v); };
    switch (kind) {
        case SubgroupKind::ParabolicStab:
        case SubgroupKind::TotSingStab: return "P(" + n(a) + ")";
        case SubgroupKind::NondegStabA:
        case SubgroupKind::NondegStabSp: return "N(" + n(a) + ")";
        case SubgroupKind::NondegStabO: return "N(" + n(a) + "," + sign_char(sign) + ")";
        case SubgroupKind::HyperplaneSO: return std::string("SO(") + sign_char(sign) + ")";
        case SubgroupKind::Imprimitive:
            if (sign != 0) return "Imp(" + n(a) + "," + n(b) + "," + sign_char(sign) + ")";
            return "Imp(" + n(a) + "," + n(b) + ")";
        case SubgroupKind::TotSingPairGL: return "GL";
        case SubgroupKind::ExtField: return "EF(" + n(a) + ")";
        case SubgroupKind::GUOverQ: return "GU";
        case SubgroupKind::TorusNormalizer: {
            TorusClass t{family, normalized, false, Rational(0)};
            return "Norm(" + t.str() + ")";
        }
    }
    return "?";
}

std::vector<SubgroupFamily> structural_families(const GroupFamily& g) {
    using K = SubgroupKind;
    const int r = g.rank();
    std::vector<SubgroupFamily> out;
    auto imprimitive = [&](bool orthogonal) {
        for (int l = 1; l < r; ++l) {
            if (r % l) continue;
            int t = r / l;
            if (!orthogonal) {
                out.push_back(make(g, K::Imprimitive, l, t));
                continue;
            }
            // blocks of type eps; the sum of t blocks has type eps^t
            for (int eps : {1, -1}) {
                int total = (t % 2 == 0) ? 1 : eps;
                if (total == g.d_sign()) out.push_back(make(g, K::Imprimitive, l, t, eps));
            }
        }
    };
    switch (g.series()) {
        case Series::LinearA:
            for (int k = 1; k < r; ++k) out.push_back(make(g, K::ParabolicStab, k));
            imprimitive(false);
            for (int b : prime_divisors(r)) out.push_back(make(g, K::ExtField, b));
            break;
        case Series::UnitaryA:
            for (int k = 1; k <= r / 2; ++k) out.push_back(make(g, K::NondegStabA, k));
            for (int k = 1; k <= r / 2; ++k) out.push_back(make(g, K::TotSingStab, k));
            imprimitive(false);
            for (int b : prime_divisors(r))
                if (b % 2) out.push_back(make(g, K::ExtField, b));
            break;
        case Series::SymplecticC:
            for (int a = 1; a <= r / 2; ++a) out.push_back(make(g, K::NondegStabSp, a));
            for (int k = 1; k <= r; ++k) out.push_back(make(g, K::TotSingStab, k));
            if (g.parity() == QParity::Even) {
                out.push_back(make(g, K::HyperplaneSO, 0, 0, 1));
                out.push_back(make(g, K::HyperplaneSO, 0, 0, -1));
            }
            imprimitive(false);
            for (int b : prime_divisors(r)) out.push_back(make(g, K::ExtField, b));
            out.push_back(make(g, K::GUOverQ));
            break;
        case Series::OrthogonalB:
            for (int a = 1; a <= r; ++a)
                for (int eps : {1, -1}) out.push_back(make(g, K::NondegStabO, a, 0, eps));
            for (int k = 1; k <= r; ++k) out.push_back(make(g, K::TotSingStab, k));
            break;
        case Series::OrthogonalDPlus:
        case Series::OrthogonalDMinus: {
            const int s = g.d_sign();
            // {2a-space of type eps} and its complement {2(m-a)-space of type eps*s} are one family
            std::vector<std::pair<int, int>> seen;
            for (int a = 1; a < r; ++a) {
                for (int eps : {1, -1}) {
                    std::pair<int, int> key = std::min(std::pair{a, -eps}, std::pair{r - a, -eps * s});
                    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                    seen.push_back(key);
                    out.push_back(make(g, K::NondegStabO, key.first, 0, -key.second));
                }
            }
            int top = s > 0 ? r : r - 1;
            for (int k = 1; k <= top; ++k) out.push_back(make(g, K::TotSingStab, k));
            imprimitive(true);
            for (int b : prime_divisors(r)) out.push_back(make(g, K::ExtField, b));
            if ((r % 2 == 0) == (s > 0)) out.push_back(make(g, K::GUOverQ));
            break;
        }
        case Series::G2: throw ContractError("subgroup_families: G2 families come from g2_incidence");
    }
    return out;
}

std::vector<SubgroupFamily> subgroup_families(const GroupFamily& g) {
    auto out = structural_families(g);
    for (auto& t : torus_classes(g)) {
        SubgroupFamily f = make(g, SubgroupKind::TorusNormalizer);
        f.normalized = std::move(t.data);
        out.push_back(std::move(f));
    }
    return out;
}

std::uint64_t subset_sums(std::span<const int> parts) {
    std::uint64_t reach = 1;
    for (int p : parts) reach |= reach << p;
    return reach;
}

SignedSums signed_subset_sums(std::span<const SignedPart> parts) {
    SignedSums s{1, 0};
    for (const auto& p : parts) {
        std::uint64_t plus = s.plus, minus = s.minus;
        if (p.sign > 0) {
            s.plus = plus | (plus << p.length);
            s.minus = minus | (minus << p.length);
        } else {
            s.plus = plus | (minus << p.length);
            s.minus = minus | (plus << p.length);
        }
    }
    return s;
}

namespace {

struct BlockSearch {
    std::span<const int> lengths;
    std::span<const int> signs;
    int l;
    int t;
    int sign;
    std::vector<int> sums;
    std::vector<int> prods;

    bool run(std::size_t i) {
        if (i == lengths.size()) {
            for (int g = 0; g < t; ++g)
                if (sums[g] != l || (sign != 0 && prods[g] != sign)) return false;
            return true;
        }
        const int len = lengths[i];
        const int sg = signs.empty() ? 1 : signs[i];
        for (int g = 0; g < t; ++g) {
            // groups in the same state are interchangeable
            bool dup = false;
            for (int h = 0; h < g && !dup; ++h) dup = sums[h] == sums[g] && prods[h] == prods[g];
            if (dup || sums[g] + len > l) continue;
            sums[g] += len;
            prods[g] *= sg;
            if (run(i + 1)) return true;
            sums[g] -= len;
            prods[g] *= sg;
        }
        return false;
    }
};

}  // namespace

bool splits_into_blocks(std::span<const int> lengths, std::span<const int> signs, int l, int t, int sign) {
    int total = 0;
    for (int x : lengths) {
        if (x > l) return false;
        total += x;
    }
    if (total != l * t || static_cast<int>(lengths.size()) < t) return false;
    // lengths arrive in descending order, which keeps the search shallow
    BlockSearch s{lengths, signs, l, t, sign, std::vector<int>(t, 0), std::vector<int>(t, 1)};
    return s.run(0);
}

bool contains_parts(const SubgroupFamily& f, std::span<const int> parts) {
    using K = SubgroupKind;
    const bool unitary = f.family.series() == Series::UnitaryA;
    switch (f.kind) {
        case K::ParabolicStab:
        case K::NondegStabA: return bit(subset_sums(parts), f.a);
        case K::TotSingStab: {
            if (!unitary) return bit(subset_sums(parts), f.a);
            std::uint64_t reach = 1;
            for (int p : parts)
                if (p % 2 == 0) reach |= reach << p;
            return bit(reach, 2 * f.a);
        }
        case K::TotSingPairGL:
            return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
        case K::Imprimitive: return splits_into_blocks(parts, {}, f.a, f.b, 0);
        case K::ExtField:
            return std::all_of(parts.begin(), parts.end(), [&](int p) { return p % f.a == 0; });
        case K::TorusNormalizer: {
            auto q = std::get_if<Partition>(&f.normalized);
            return q && std::equal(parts.begin(), parts.end(), q->parts().begin(), q->parts().end());
        }
        default: break;
    }
    throw ContractError("family " + f.tag() + " does not apply to partitions");
}

bool contains_parts(const SubgroupFamily& f, std::span<const SignedPart> parts) {
    using K = SubgroupKind;
    switch (f.kind) {
        case K::NondegStabSp: {
            std::uint64_t reach = 1;
            for (const auto& p : parts) reach |= reach << p.length;
            return bit(reach, f.a);
        }
        case K::NondegStabO: {
            auto s = signed_subset_sums(parts);
            return bit(f.sign > 0 ? s.plus : s.minus, f.a);
        }
        case K::TotSingStab: {
            std::uint64_t reach = 1;
            for (const auto& p : parts)
                if (p.sign > 0) reach |= reach << p.length;
            return bit(reach, f.a);
        }
        case K::TotSingPairGL:
            return std::all_of(parts.begin(), parts.end(), [](const SignedPart& p) { return p.sign > 0; });
        case K::HyperplaneSO: return sign_product(parts) == f.sign;
        case K::Imprimitive: {
            int lengths[64], signs[64];
            std::size_t n = std::min<std::size_t>(parts.size(), 64);
            for (std::size_t i = 0; i < n; ++i) lengths[i] = parts[i].length, signs[i] = parts[i].sign;
            return splits_into_blocks({lengths, n}, f.sign != 0 ? std::span<const int>(signs, n) : std::span<const int>(),
                                      f.a, f.b, f.sign);
        }
        case K::ExtField:
            return std::all_of(parts.begin(), parts.end(), [&](const SignedPart& p) { return p.length % f.a == 0; });
        case K::GUOverQ:
            return std::all_of(parts.begin(), parts.end(),
                               [](const SignedPart& p) { return p.length % 2 == 1 ? p.sign < 0 : p.sign > 0; });
        case K::TorusNormalizer: {
            auto q = std::get_if<SignedPartition>(&f.normalized);
            return q && std::equal(parts.begin(), parts.end(), q->parts().begin(), q->parts().end());
        }
        default: break;
    }
    throw ContractError("family " + f.tag() + " does not apply to signed partitions");
}

bool contains(const SubgroupFamily& f, const TorusClass& t) {
    if (!(f.family == t.family)) throw ContractError("family mismatch: " + f.family.str() + " vs " + t.family.str());
    if (auto p = std::get_if<Partition>(&t.data)) return contains_parts(f, std::span<const int>(p->parts()));
    if (auto s = std::get_if<SignedPartition>(&t.data)) return contains_parts(f, std::span<const SignedPart>(s->parts()));
    throw ContractError("G2 containment is given by g2_incidence");
}

bool shares_overgroup(const TorusClass& t1, const TorusClass& t2) {
    if (!(t1.family == t2.family)) throw ContractError("family mismatch");
    if (t1 == t2) return true;
    if (!t1.family.is_classical()) {
        auto inc = g2::g2_incidence(t1.family.three_divides_q());
        for (std::size_t c = 0; c < inc.columns.size(); ++c)
            if (inc.contains(static_cast<int>(c), t1.g2_id()) && inc.contains(static_cast<int>(c), t2.g2_id())) return true;
        return false;
    }
    for (const auto& f : structural_families(t1.family))
        if (contains(f, t1) && contains(f, t2)) return true;
    return false;
}

IncidenceMatrix incidence(const GroupFamily& family, bool include_normalizers) {
    IncidenceMatrix m{family, torus_classes(family), {}, {}};
    if (!family.is_classical()) {
        auto inc = g2::g2_incidence(family.three_divides_q());
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < inc.columns.size(); ++c)
            if (include_normalizers || inc.columns[c].rfind("Norm", 0) != 0) keep.push_back(c);
        for (auto c : keep) m.columns.push_back(inc.columns[c]);
        for (const auto& t : m.classes) {
            std::vector<bool> row;
            for (auto c : keep) row.push_back(inc.contains(static_cast<int>(c), t.g2_id()));
            m.cells.push_back(std::move(row));
        }
        return m;
    }
    auto fams = include_normalizers ? subgroup_families(family) : structural_families(family);
    for (const auto& f : fams) m.columns.push_back(f.tag());
    for (const auto& t : m.classes) {
        std::vector<bool> row;
        row.reserve(fams.size());
        for (const auto& f : fams) row.push_back(contains(f, t));
        m.cells.push_back(std::move(row));
    }
    return m;
}

}  // namespace invgen
