#include "invgen/generation.hpp"

#include <algorithm>

#include "invgen/errors.hpp"
#include "invgen/rootsys_g2.hpp"

namespace invgen {

namespace {

std::string order_rule_for(const TorusData& d) {
    if (auto s = std::get_if<SignedPartition>(&d); s && s->size() > 1) return "maximal order on each block";
    if (auto p = std::get_if<Partition>(&d); p && p->size() > 1) return "maximal order on each block";
    return "maximal order";
}

// Scans every torus class of a classical family in canonical order.
template <typename Fn>
void scan_classes(const GroupFamily& g, Fn&& fn) {
    if (g.is_type_a()) {
        for_each_partition(g.rank(), [&](std::span<const int> p) { fn(p); });
        return;
    }
    const int need = g.d_sign();
    for_each_signed_partition(g.rank(), [&](std::span<const SignedPart> p) {
        if (need == 0 || sign_product(p) == need) fn(p);
    });
}

TorusClass class_from(const GroupFamily& g, std::span<const int> p) {
    return make_torus_class(g, Partition(std::vector<int>(p.begin(), p.end())));
}
TorusClass class_from(const GroupFamily& g, std::span<const SignedPart> p) {
    return make_torus_class(g, SignedPartition(std::vector<SignedPart>(p.begin(), p.end())));
}

mpz_class weight_of(std::span<const int> p) { return cycle_type_class_size(p); }
mpz_class weight_of(std::span<const SignedPart> p) { return signed_type_class_size(p); }

// Probability = weight / denominator for the family.
Rational mass_from_weight(const GroupFamily& g, const mpz_class& w) {
    if (g.is_type_a()) return Rational(w, factorial(static_cast<unsigned>(g.rank())));
    Rational b(w, hyperoctahedral_order(g.rank()));
    return g.is_type_d() ? Rational(2) * b : b;
}

bool same_data(std::span<const int> p, const TorusData& d) {
    auto q = std::get_if<Partition>(&d);
    return q && std::equal(p.begin(), p.end(), q->parts().begin(), q->parts().end());
}
bool same_data(std::span<const SignedPart> p, const TorusData& d) {
    auto q = std::get_if<SignedPartition>(&d);
    return q && std::equal(p.begin(), p.end(), q->parts().begin(), q->parts().end());
}

void require_same_family(const std::vector<ElementSpec>& A) {
    if (A.empty()) throw ContractError("element set is empty");
    for (const auto& x : A)
        if (!(x.family == A.front().family)) throw ContractError("elements from different families");
}

// Per-class relation data: which structural families contain the class.
struct FamilyMasks {
    std::vector<TorusClass> classes;
    std::vector<std::vector<std::uint64_t>> masks;

    bool share(std::size_t i, std::size_t j) const {
        if (i == j) return true;
        for (std::size_t w = 0; w < masks[i].size(); ++w)
            if (masks[i][w] & masks[j][w]) return true;
        return false;
    }
};

FamilyMasks family_masks(const GroupFamily& g) {
    FamilyMasks fm;
    fm.classes = torus_classes(g);
    if (fm.classes.size() > kMaxRelationClasses)
        throw RangeError("relation computations capped at " + std::to_string(kMaxRelationClasses) + " torus classes");
    if (!g.is_classical()) {
        auto inc = g2::g2_incidence(g.three_divides_q());
        for (const auto& t : fm.classes) {
            std::vector<std::uint64_t> m(1, 0);
            for (std::size_t c = 0; c < inc.columns.size(); ++c)
                if (inc.columns[c].rfind("Norm", 0) != 0 && inc.contains(static_cast<int>(c), t.g2_id())) m[0] |= 1ULL << c;
            fm.masks.push_back(std::move(m));
        }
        return fm;
    }
    auto fams = structural_families(g);
    const std::size_t words = (fams.size() + 63) / 64;
    for (const auto& t : fm.classes) {
        std::vector<std::uint64_t> m(std::max<std::size_t>(words, 1), 0);
        for (std::size_t f = 0; f < fams.size(); ++f)
            if (contains(fams[f], t)) m[f / 64] |= 1ULL << (f % 64);
        fm.masks.push_back(std::move(m));
    }
    return fm;
}

}  // namespace

ElementSpec element_for(const TorusClass& t, std::string label) {
    return ElementSpec{t.family, t, std::move(label), order_rule_for(t.data), std::nullopt};
}

ABSet ab_set(const GroupFamily& family) {
    ABSet ab{family, {}};
    auto types = distinguished_torus_types(family);
    for (std::size_t i = 0; i < types.size(); ++i) {
        ElementSpec x = element_for(make_torus_class(family, types[i]), "x" + std::to_string(i + 1));
        ab.elements.push_back(std::move(x));
    }
    // the two blocks of these elements are tied together as (g, g^2)
    if (family.series() == Series::SymplecticC && family.parity() == QParity::Even)
        ab.elements[2].refinement = "(g, g^2) on the two blocks";
    if (family.series() == Series::OrthogonalDPlus && family.rank() % 2 == 0)
        ab.elements[3].refinement = "(g, g^2) on the two blocks";
    return ab;
}

std::vector<SubgroupFamily> overgroup_families(const ElementSpec& x) {
    std::vector<SubgroupFamily> out;
    for (auto& f : structural_families(x.family))
        if (contains(f, x.torus)) out.push_back(std::move(f));
    return out;
}

std::vector<TorusClass> torus_set(const ElementSpec& x) { return residual_classes({x}); }

std::vector<TorusClass> residual_classes(const std::vector<ElementSpec>& A) {
    require_same_family(A);
    const GroupFamily& g = A.front().family;
    std::vector<TorusClass> out;
    if (!g.is_classical()) {
        auto fm = family_masks(g);
        for (std::size_t j = 0; j < fm.classes.size(); ++j) {
            bool all = true;
            for (const auto& x : A) {
                std::size_t i = static_cast<std::size_t>(x.torus.g2_id() - 1);
                all = all && fm.share(i, j);
            }
            if (all) out.push_back(fm.classes[j]);
        }
        return out;
    }
    std::vector<std::vector<SubgroupFamily>> over;
    for (const auto& x : A) over.push_back(overgroup_families(x));
    scan_classes(g, [&](auto parts) {
        for (std::size_t i = 0; i < A.size(); ++i) {
            bool in = same_data(parts, A[i].torus.data);
            for (std::size_t f = 0; f < over[i].size() && !in; ++f) in = contains_parts(over[i][f], parts);
            if (!in) return;
        }
        out.push_back(class_from(g, parts));
    });
    return out;
}

Rational residual_leading(const std::vector<ElementSpec>& A) {
    Rational sum(0);
    for (const auto& t : residual_classes(A)) sum += t.probability;
    return sum;
}

std::vector<TorusPair> relation_sim(const GroupFamily& family) {
    auto fm = family_masks(family);
    std::vector<TorusPair> out;
    for (std::size_t i = 0; i < fm.classes.size(); ++i)
        for (std::size_t j = i + 1; j < fm.classes.size(); ++j)
            if (!fm.share(i, j)) out.emplace_back(fm.classes[i], fm.classes[j]);
    return out;
}

Rational leading_term_two_random(const GroupFamily& family) {
    Rational sum(0);
    for (const auto& [a, b] : relation_sim(family)) sum += Rational(2) * a.probability * b.probability;
    return sum;
}

Rational pinv_leading(const TorusClass& t) {
    auto fm = family_masks(t.family);
    auto it = std::find(fm.classes.begin(), fm.classes.end(), t);
    if (it == fm.classes.end()) throw ContractError("class not in family");
    std::size_t i = static_cast<std::size_t>(it - fm.classes.begin());
    Rational sum(0);
    for (std::size_t j = 0; j < fm.classes.size(); ++j)
        if (!fm.share(i, j)) sum += fm.classes[j].probability;
    return sum;
}

AbVerification verify_ab(const GroupFamily& family) {
    if (!family.is_classical()) throw ContractError("verify_ab: classical families only");
    AbVerification rep{family, ab_set(family), false, {}, {}, {}, false};
    const auto& xs = rep.ab.elements;
    const unsigned k = static_cast<unsigned>(xs.size());
    const unsigned full = (1U << k) - 1;

    std::vector<std::vector<SubgroupFamily>> over;
    for (const auto& x : xs) {
        over.push_back(overgroup_families(x));
        std::vector<std::string> tags;
        for (const auto& f : over.back()) tags.push_back(f.tag());
        tags.push_back("Norm(" + x.torus.str() + ")");
        rep.per_element_families[x.label] = std::move(tags);
    }

    std::vector<std::size_t> counts(full + 1, 0);
    std::vector<mpz_class> weights(full + 1, 0);
    std::vector<std::vector<TorusClass>> samples(full + 1);

    scan_classes(family, [&](auto parts) {
        unsigned mask = 0;
        for (unsigned i = 0; i < k; ++i) {
            bool in = same_data(parts, xs[i].torus.data);
            for (std::size_t f = 0; f < over[i].size() && !in; ++f) in = contains_parts(over[i][f], parts);
            if (in) mask |= 1U << i;
        }
        if (mask == 0) return;
        mpz_class w = weight_of(parts);
        for (unsigned s = 1; s <= full; ++s) {
            if ((mask & s) != s) continue;
            ++counts[s];
            weights[s] += w;
            if (s != full && samples[s].size() < kResidualSampleCap) samples[s].push_back(class_from(family, parts));
        }
        if (mask == full && rep.residual.size() < kResidualListCap) rep.residual.push_back(class_from(family, parts));
    });

    rep.empty = counts[full] == 0;
    rep.proper_subsets_nonempty = true;
    for (unsigned s = 1; s < full; ++s) {
        SubsetResidual sr;
        sr.mask = s;
        for (unsigned i = 0; i < k; ++i)
            if (s & (1U << i)) sr.labels.push_back(xs[i].label);
        sr.count = counts[s];
        sr.mass = mass_from_weight(family, weights[s]);
        sr.sample = std::move(samples[s]);
        if (sr.count == 0) rep.proper_subsets_nonempty = false;
        rep.subset_residuals.push_back(std::move(sr));
    }
    return rep;
}

SharpnessReport sharpness_triples(int m) {
    if (m < 2 || m > 6) throw RangeError("sharpness_triples: m must be in [2, 6]");
    const GroupFamily g = GroupFamily::symplectic(m, QParity::Even);
    auto fm = family_masks(g);
    const auto& cls = fm.classes;
    const std::size_t n = cls.size();

    // T(t) as a bitset over class indices
    std::vector<std::vector<bool>> tset(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tset[i][j] = fm.share(i, j);

    auto index_of = [&](const SignedPartition& s) {
        for (std::size_t i = 0; i < n; ++i)
            if (cls[i].signed_partition() == s) return i;
        throw std::logic_error("class missing");
    };
    std::vector<SignedPart> ones(static_cast<std::size_t>(m), SignedPart{1, 1});
    const std::size_t all_plus = index_of(SignedPartition(ones));
    ones.back().sign = -1;
    const std::size_t one_minus = index_of(SignedPartition(ones));
    const std::size_t m_minus = index_of(SignedPartition{{m, -1}});
    const std::size_t m_plus = index_of(SignedPartition{{m, 1}});

    SharpnessReport rep;
    rep.m = m;
    rep.bound = Rational(mpz_class(1), hyperoctahedral_order(m));
    rep.all_triples_blocked = true;
    rep.proof_witnesses_valid = true;
    bool first = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                ++rep.triples;
                std::size_t tri[3] = {a, b, c};
                Rational mass(0);
                std::optional<std::size_t> witness;
                for (std::size_t j = 0; j < n; ++j) {
                    if (tset[a][j] && tset[b][j] && tset[c][j]) {
                        mass += cls[j].probability;
                        if (!witness) witness = j;
                    }
                }
                if (!witness) {
                    rep.all_triples_blocked = false;
                    continue;
                }
                // the three patterns of the hand proof; "irreducible" means the class (m-)
                std::size_t proof = 0;
                std::string pattern;
                bool has_minus = std::find(tri, tri + 3, m_minus) != tri + 3;
                bool has_plus = std::find(tri, tri + 3, m_plus) != tri + 3;
                if (!has_minus) {
                    proof = all_plus, pattern = "all reducible: (1+,...,1+)";
                } else if (!has_plus) {
                    proof = one_minus, pattern = "one irreducible: (1+,...,1+,1-)";
                } else {
                    std::size_t third = 0;
                    for (std::size_t t : tri)
                        if (t != m_minus && t != m_plus) third = t;
                    int eps = cls[third].signed_partition().sign_product();
                    proof = eps > 0 ? m_plus : m_minus;
                    pattern = std::string("(m-),(m+) and a third: (m") + (eps > 0 ? "+" : "-") + ")";
                }
                bool valid = tset[a][proof] && tset[b][proof] && tset[c][proof];
                rep.proof_witnesses_valid = rep.proof_witnesses_valid && valid;
                if (first || mass < rep.min_residual_mass) rep.min_residual_mass = mass;
                first = false;
                rep.witnesses.push_back({{cls[a], cls[b], cls[c]}, cls[*witness], pattern, valid, mass});
            }
    return rep;
}

AlphaReport alpha_check(int m_max) {
    if (m_max < 2 || m_max > 30) throw RangeError("alpha_check: m_max must be in [2, 30]");
    AlphaReport rep;
    rep.m_max = m_max;
    rep.bound_holds = true;
    for (int m = 2; m <= m_max; ++m) {
        std::vector<GroupFamily> fams{GroupFamily::symplectic(m, QParity::Even)};
        if (m % 2 == 0 || m >= 3) fams.push_back(GroupFamily::symplectic(m, QParity::Odd));
        if (m >= 3) fams.push_back(GroupFamily::orthogonal_odd(m));
        if (m >= 4) {
            if (m % 2 == 0 || m >= 5) fams.push_back(GroupFamily::orthogonal_plus(m));
            fams.push_back(GroupFamily::orthogonal_minus(m));
        }
        for (const auto& g : fams) {
            auto [t, v] = min_class_probability(g);
            AlphaEntry e{g, t, v, Rational(1, 4L * m)};
            if (v < e.bound) rep.bound_holds = false;
            if (v == e.bound) {
                rep.equality_cases.push_back(e);
                if (g == GroupFamily::orthogonal_plus(4) && t.signed_partition() == SignedPartition{{2, -1}, {2, -1}})
                    rep.d4_equality = true;
            }
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

}  // namespace invgen
