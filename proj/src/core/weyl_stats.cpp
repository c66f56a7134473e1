#include "invgen/weyl_stats.hpp"

#include <algorithm>

#include "invgen/errors.hpp"
#include "invgen/rootsys_g2.hpp"

namespace invgen {

namespace {

constexpr int kMaxSignProductM = 40;
constexpr int kMaxFixedPartM = 80;

SignedPartition sp(std::initializer_list<std::pair<int, int>> parts) { return SignedPartition(parts); }

void require_family_match(const GroupFamily& family, const TorusClass& t) {
    if (!(family == t.family) || !belongs_to(family, t.data))
        throw ContractError("torus class " + t.str() + " does not belong to " + family.str());
}

}  // namespace

std::string TorusClass::str() const {
    if (auto p = std::get_if<Partition>(&data)) return p->str();
    if (auto s = std::get_if<SignedPartition>(&data)) return s->str();
    return "w" + std::to_string(std::get<G2ClassId>(data).id);
}

bool belongs_to(const GroupFamily& family, const TorusData& data) {
    if (family.is_type_a()) {
        auto p = std::get_if<Partition>(&data);
        return p && p->n() == family.rank();
    }
    if (family.is_signed()) {
        auto s = std::get_if<SignedPartition>(&data);
        if (!s || s->m() != family.rank()) return false;
        return !family.is_type_d() || s->sign_product() == family.d_sign();
    }
    auto g = std::get_if<G2ClassId>(&data);
    return g && g->id >= 1 && g->id <= 6;
}

bool is_split_d_type(std::span<const SignedPart> parts) {
    return std::all_of(parts.begin(), parts.end(), [](const SignedPart& p) { return p.length % 2 == 0 && p.sign > 0; });
}

mpz_class hyperoctahedral_order(int m) {
    mpz_class r = factorial(static_cast<unsigned>(m));
    r <<= m;
    return r;
}

mpz_class cycle_type_class_size(std::span<const int> parts) {
    int n = 0;
    for (int p : parts) n += p;
    mpz_class z = 1;
    // parts are descending, so equal values are adjacent
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), j - i);
        z *= pw * factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return factorial(static_cast<unsigned>(n)) / z;
}

mpz_class signed_type_class_size(std::span<const SignedPart> parts) {
    int m = 0;
    for (const auto& p : parts) m += p.length;
    mpz_class z = 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2UL * parts[i].length, j - i);
        z *= pw * factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return hyperoctahedral_order(m) / z;
}

Rational cycle_type_probability(std::span<const int> parts) {
    int n = 0;
    for (int p : parts) n += p;
    return Rational(cycle_type_class_size(parts), factorial(static_cast<unsigned>(n)));
}

Rational signed_type_probability(std::span<const SignedPart> parts) {
    int m = 0;
    for (const auto& p : parts) m += p.length;
    return Rational(signed_type_class_size(parts), hyperoctahedral_order(m));
}

TorusClass make_torus_class(const GroupFamily& family, TorusData data) {
    if (!belongs_to(family, data)) throw ContractError("torus data does not belong to " + family.str());
    TorusClass t{family, std::move(data), false, Rational(0)};
    if (auto s = std::get_if<SignedPartition>(&t.data))
        t.split = family.series() == Series::OrthogonalDPlus && is_split_d_type(s->parts());
    t.probability = class_probability(family, t);
    return t;
}

TorusClass parse_torus_class(const GroupFamily& family, const std::string& text) {
    if (family.is_type_a()) return make_torus_class(family, Partition::parse(text));
    if (family.is_signed()) return make_torus_class(family, SignedPartition::parse(text));
    std::string s = text;
    if (!s.empty() && (s[0] == 'w' || s[0] == 'W')) s.erase(0, 1);
    int id = 0;
    try {
        id = std::stoi(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad G2 class '" + text + "'");
    }
    return make_torus_class(family, G2ClassId{id});
}

Rational class_probability(const GroupFamily& family, const TorusClass& t) {
    require_family_match(family, t);
    if (auto p = std::get_if<Partition>(&t.data)) return cycle_type_probability(p->parts());
    if (auto s = std::get_if<SignedPartition>(&t.data)) {
        Rational b = signed_type_probability(s->parts());
        return family.is_type_d() ? Rational(2) * b : b;
    }
    int id = std::get<G2ClassId>(t.data).id;
    for (const auto& c : g2::conjugacy_classes_g2())
        if (c.id == id) return Rational(c.size, 12);
    throw ContractError("unknown G2 class");
}

std::vector<TorusClass> torus_classes(const GroupFamily& family) {
    std::vector<TorusClass> out;
    if (family.is_type_a()) {
        for (auto& p : partitions(family.rank())) out.push_back(make_torus_class(family, std::move(p)));
    } else if (family.is_signed()) {
        if (family.rank() > kMaxSignedPartitionM) throw RangeError("rank above signed partition cap");
        int need = family.d_sign();
        for_each_signed_partition(family.rank(), [&](std::span<const SignedPart> parts) {
            if (need != 0 && sign_product(parts) != need) return;
            out.push_back(make_torus_class(family, SignedPartition(std::vector<SignedPart>(parts.begin(), parts.end()))));
        });
    } else {
        for (const auto& c : g2::conjugacy_classes_g2()) out.push_back(make_torus_class(family, G2ClassId{c.id}));
    }
    return out;
}

std::vector<TorusData> distinguished_torus_types(const GroupFamily& family) {
    const int r = family.rank();
    switch (family.series()) {
        case Series::LinearA:
        case Series::UnitaryA: return {Partition({r}), Partition({r - 1, 1})};
        case Series::OrthogonalB: return {sp({{r, -1}}), sp({{r, 1}})};
        case Series::OrthogonalDMinus: return {sp({{r, -1}}), sp({{r - 1, -1}, {1, 1}})};
        case Series::SymplecticC:
            if (family.parity() == QParity::Even)
                return {sp({{r, -1}}), sp({{r - 1, -1}, {1, 1}}), sp({{r - 1, -1}, {1, -1}}), sp({{r, 1}})};
            if (r % 2 == 0) return {sp({{r, -1}}), sp({{r - 1, -1}, {1, 1}})};
            if (r < 3) throw RangeError("symplectic odd-rank row needs m >= 3");
            return {sp({{r, -1}}), sp({{r - 1, -1}, {1, -1}}), sp({{r, 1}})};
        case Series::OrthogonalDPlus:
            if (r % 2 == 1) {
                if (r < 5) throw RangeError("D+ odd-rank row needs m >= 5");
                return {sp({{r, 1}}), sp({{r - 1, -1}, {1, -1}})};
            }
            return {sp({{r, 1}}), sp({{r - 1, -1}, {1, -1}}), sp({{r - 2, -1}, {2, -1}}),
                    sp({{r - 2, -1}, {1, -1}, {1, 1}})};
        case Series::G2: break;
    }
    throw ContractError("distinguished element sets are defined for classical families only");
}

std::pair<TorusClass, Rational> min_class_probability(const GroupFamily& family) {
    std::vector<TorusClass> cands;
    for (auto& d : distinguished_torus_types(family)) cands.push_back(make_torus_class(family, std::move(d)));
    std::sort(cands.begin(), cands.end());
    const TorusClass* best = &cands.front();
    for (const auto& t : cands)
        if (t.probability < best->probability) best = &t;
    return {*best, best->probability};
}

std::pair<TorusClass, Rational> min_class_probability_all_classes(const GroupFamily& family) {
    if (!family.is_classical()) throw ContractError("classical families only");
    auto all = torus_classes(family);
    const TorusClass* best = &all.front();
    for (const auto& t : all)
        if (t.probability < best->probability) best = &t;
    return {*best, best->probability};
}

// Classes with k cycles number c(m,k) (unsigned Stirling); each carries 2^k sign choices,
// half of which (k >= 1) have a given sign product.
Rational prob_sign_product(int m, int sign) {
    if (m < 1 || m > kMaxSignProductM) throw RangeError("prob_sign_product: m out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    std::vector<mpz_class> c(m + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= m; ++n) {
        for (int k = n; k >= 1; --k) c[k] = c[k - 1] + mpz_class(n - 1) * c[k];
        c[0] = 0;
    }
    mpz_class hits = 0, total = 0;
    for (int k = 1; k <= m; ++k) {
        mpz_class pw = mpz_class(1) << k;
        total += c[k] * pw;
        hits += c[k] * (pw / 2);
    }
    return Rational(hits, total);
}

// Signed permutations without a positive fixed point: D(m) = 2m D(m-1) + (-1)^m, D(0) = 1.
Rational prob_positive_fixed_part(int m) {
    if (m < 1 || m > kMaxFixedPartM) throw RangeError("prob_positive_fixed_part: m out of range");
    mpz_class d = 1;
    for (int k = 1; k <= m; ++k) d = mpz_class(2 * k) * d + (k % 2 == 0 ? 1 : -1);
    return Rational(1) - Rational(d, hyperoctahedral_order(m));
}

}  // namespace invgen
