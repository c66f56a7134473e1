#include "invgen/rootsys_g2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "invgen/errors.hpp"

namespace invgen::g2 {

Sqrt3Number dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

Vec2 scale(const Rational& c, const Vec2& v) {
    Sqrt3Number s{c, Rational(0)};
    return {s * v.x, s * v.y};
}

namespace {

Vec2 reflect_vec(const Vec2& root, const Vec2& v) {
    Sqrt3Number num = dot(v, root);
    Sqrt3Number den = dot(root, root);
    // root lengths squared are rational (1 or 3) and Cartan integers are rational
    if (!den.b.is_zero() || !num.b.is_zero()) throw std::logic_error("irrational Cartan integer");
    Rational c = Rational(2) * num.a / den.a;
    return v - scale(c, root);
}

}  // namespace

RootSystem::RootSystem() {
    // short simple root (1, 0), long simple root (-3/2, sqrt3/2); angle 150 degrees
    Vec2 a{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    Vec2 b{{Rational(-3, 2), Rational(0)}, {Rational(0), Rational(1, 2)}};
    roots_ = {a, b};
    for (std::size_t done = 0; done < roots_.size(); ++done) {
        for (std::size_t s = 0; s < 2; ++s) {
            Vec2 img = reflect_vec(roots_[s], roots_[done]);
            if (index_of(img) < 0) roots_.push_back(img);
        }
    }
    if (roots_.size() != kRootCount) throw std::logic_error("G2 root closure did not produce 12 roots");

    const int n = kRootCount;
    long_.resize(n);
    neg_.resize(n);
    sum_.assign(n, std::vector<int>(n, -1));
    refl_.assign(n, std::vector<int>(n, -1));
    Vec2 zero{};
    for (int i = 0; i < n; ++i) {
        long_[i] = dot(roots_[i], roots_[i]).a == Rational(3);
        neg_[i] = index_of(zero - roots_[i]);
        for (int j = 0; j < n; ++j) {
            sum_[i][j] = index_of(roots_[i] + roots_[j]);
            refl_[i][j] = index_of(reflect_vec(roots_[i], roots_[j]));
            if (refl_[i][j] < 0) throw std::logic_error("reflection left the root system");
        }
    }
}

int RootSystem::index_of(const Vec2& v) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i] == v) return static_cast<int>(i);
    return -1;
}

const RootSystem& root_system() {
    static const RootSystem rs;
    return rs;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    for (int i = 0; i < kRootCount; ++i) c.perm[i] = a.perm[b.perm[i]];
    return c;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement v;
    for (int i = 0; i < kRootCount; ++i) v.perm[w.perm[i]] = static_cast<std::uint8_t>(i);
    return v;
}

WeylElement identity_element() {
    WeylElement e;
    for (int i = 0; i < kRootCount; ++i) e.perm[i] = static_cast<std::uint8_t>(i);
    return e;
}

WeylElement reflection(int root) {
    const auto& rs = root_system();
    WeylElement s;
    for (int j = 0; j < kRootCount; ++j) s.perm[j] = static_cast<std::uint8_t>(rs.reflect(root, j));
    return s;
}

int element_order(const WeylElement& w) {
    WeylElement e = identity_element(), p = w;
    int k = 1;
    while (!(p == e)) {
        p = compose(w, p);
        ++k;
    }
    return k;
}

const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> group = [] {
        const auto& rs = root_system();
        std::vector<WeylElement> g{identity_element()};
        WeylElement gens[2] = {reflection(rs.simple_short()), reflection(rs.simple_long())};
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (const auto& s : gens) {
                WeylElement h = compose(s, g[i]);
                if (std::find(g.begin(), g.end(), h) == g.end()) g.push_back(h);
            }
        }
        return g;
    }();
    return group;
}

int element_index(const WeylElement& w) {
    const auto& g = weyl_group();
    auto it = std::find(g.begin(), g.end(), w);
    if (it == g.end()) throw ContractError("not an element of W(G2)");
    return static_cast<int>(it - g.begin());
}

const std::vector<ConjugacyClass>& conjugacy_classes_g2() {
    static const std::vector<ConjugacyClass> classes = [] {
        const auto& rs = root_system();
        const auto& g = weyl_group();
        std::vector<int> seen(g.size(), 0);
        std::vector<ConjugacyClass> found;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (seen[i]) continue;
            std::set<int> orbit;
            for (const auto& x : g) orbit.insert(element_index(compose(compose(x, g[i]), inverse(x))));
            ConjugacyClass c;
            c.members.assign(orbit.begin(), orbit.end());
            for (int k : c.members) seen[k] = 1;
            c.representative = g[c.members.front()];
            c.size = static_cast<int>(c.members.size());
            found.push_back(c);
        }
        auto is_minus_one = [&](const WeylElement& w) {
            for (int j = 0; j < kRootCount; ++j)
                if (w(j) != rs.negative(j)) return false;
            return true;
        };
        for (auto& c : found) {
            const WeylElement& w = c.representative;
            int ord = element_order(w);
            if (ord == 1) {
                c.id = 3, c.name = "identity", c.torus_order = "(q-1)^2";
            } else if (ord == 3) {
                c.id = 5, c.name = "order 3", c.torus_order = "q^2+q+1";
            } else if (ord == 6) {
                c.id = 6, c.name = "order 6", c.torus_order = "q^2-q+1";
            } else if (is_minus_one(w)) {
                c.id = 4, c.name = "-1", c.torus_order = "(q+1)^2";
            } else {
                // a reflection negates exactly one pair of roots
                int negated = -1;
                for (int j = 0; j < kRootCount; ++j)
                    if (w(j) == rs.negative(j)) negated = j;
                if (rs.is_long(negated))
                    c.id = 2, c.name = "long reflection";
                else
                    c.id = 1, c.name = "short reflection";
                c.torus_order = "q^2-1";
            }
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        if (found.size() != 6) throw std::logic_error("W(G2) should have 6 classes");
        return found;
    }();
    return classes;
}

int class_id_of(const WeylElement& w) {
    int idx = element_index(w);
    for (const auto& c : conjugacy_classes_g2())
        if (std::find(c.members.begin(), c.members.end(), idx) != c.members.end()) return c.id;
    throw std::logic_error("element in no class");
}

std::string to_string(SubsystemType t) {
    switch (t) {
        case SubsystemType::A2Long: return "A2-long";
        case SubsystemType::A2Short: return "A2-short";
        case SubsystemType::A1xA1Short: return "A1xA1~";
        case SubsystemType::A1Long: return "A1-long";
        case SubsystemType::A1Short: return "A1~-short";
        case SubsystemType::Other: return "other";
    }
    return "?";
}

namespace {

bool contains_root(RootMask m, int i) { return (m >> i) & 1U; }

// Largest r with beta - r*alpha a root.
int string_below(int alpha, int beta) {
    const auto& rs = root_system();
    int neg_alpha = rs.negative(alpha);
    int r = 0, cur = beta;
    while (true) {
        int next = rs.sum(cur, neg_alpha);
        if (next < 0) return r;
        cur = next;
        ++r;
    }
}

// Closed: alpha, beta in S and alpha + beta a root imply alpha + beta in S. With p3, sums whose
// structure constant +-(r+1) vanishes mod 3 are not required.
bool is_closed(RootMask m, bool p3) {
    const auto& rs = root_system();
    for (int i = 0; i < kRootCount; ++i) {
        if (!contains_root(m, i)) continue;
        for (int j = 0; j < kRootCount; ++j) {
            if (!contains_root(m, j)) continue;
            int s = rs.sum(i, j);
            if (s < 0 || contains_root(m, s)) continue;
            if (p3 && (string_below(i, j) + 1) % 3 == 0) continue;
            return false;
        }
    }
    return true;
}

// Root subsystem: stable under the reflections in its own roots.
bool is_reflection_closed(RootMask m) {
    const auto& rs = root_system();
    for (int i = 0; i < kRootCount; ++i) {
        if (!contains_root(m, i)) continue;
        for (int j = 0; j < kRootCount; ++j)
            if (contains_root(m, j) && !contains_root(m, rs.reflect(i, j))) return false;
    }
    return true;
}

SubsystemType classify(RootMask m) {
    const auto& rs = root_system();
    int nlong = 0, nshort = 0;
    for (int i = 0; i < kRootCount; ++i)
        if (contains_root(m, i)) (rs.is_long(i) ? nlong : nshort)++;
    if (nlong == 6 && nshort == 0) return SubsystemType::A2Long;
    if (nlong == 0 && nshort == 6) return SubsystemType::A2Short;
    if (nlong == 2 && nshort == 2) return SubsystemType::A1xA1Short;
    if (nlong == 2 && nshort == 0) return SubsystemType::A1Long;
    if (nlong == 0 && nshort == 2) return SubsystemType::A1Short;
    return SubsystemType::Other;
}

RootMask image(const WeylElement& w, RootMask m) {
    RootMask out = 0;
    for (int i = 0; i < kRootCount; ++i)
        if (contains_root(m, i)) out |= static_cast<RootMask>(1U << w(i));
    return out;
}

std::vector<int> normalizer(const std::vector<int>& sub) {
    const auto& g = weyl_group();
    std::vector<int> n;
    for (std::size_t x = 0; x < g.size(); ++x) {
        bool ok = true;
        for (int h : sub) {
            int c = element_index(compose(compose(g[x], g[h]), inverse(g[x])));
            if (std::find(sub.begin(), sub.end(), c) == sub.end()) {
                ok = false;
                break;
            }
        }
        if (ok) n.push_back(static_cast<int>(x));
    }
    return n;
}

// Cosets of sub inside norm, grouped into conjugacy classes of the quotient.
// Returns, for every element of norm, its quotient class index; the trivial coset is class 0.
std::map<int, int> quotient_classes(const std::vector<int>& norm, const std::vector<int>& sub) {
    const auto& g = weyl_group();
    auto coset_of = [&](int x) {
        std::vector<int> c;
        for (int h : sub) c.push_back(element_index(compose(g[x], g[h])));
        std::sort(c.begin(), c.end());
        return c;
    };
    std::map<std::vector<int>, int> coset_class;
    int next = 0;
    std::vector<int> order(norm);
    // trivial coset first
    std::stable_partition(order.begin(), order.end(),
                          [&](int x) { return std::find(sub.begin(), sub.end(), x) != sub.end(); });
    for (int x : order) {
        auto cx = coset_of(x);
        if (coset_class.count(cx)) continue;
        for (int y : norm) {
            int conj = element_index(compose(compose(g[y], g[x]), inverse(g[y])));
            coset_class.emplace(coset_of(conj), next);
        }
        ++next;
    }
    std::map<int, int> out;
    for (int x : norm) out[x] = coset_class.at(coset_of(x));
    return out;
}

}  // namespace

bool is_stable(const WeylElement& w, RootMask roots) { return image(w, roots) == roots; }

std::vector<Subsystem> all_subsystems(bool p3) {
    const auto& rs = root_system();
    std::vector<Subsystem> out;
    const RootMask full = (1U << kRootCount) - 1;
    for (unsigned m = 1; m < full; ++m) {
        auto mask = static_cast<RootMask>(m);
        bool symmetric = true;
        for (int i = 0; i < kRootCount && symmetric; ++i)
            if (contains_root(mask, i) && !contains_root(mask, rs.negative(i))) symmetric = false;
        if (!symmetric || !is_reflection_closed(mask) || !is_closed(mask, p3)) continue;
        out.push_back({mask, classify(mask), !is_closed(mask, false)});
    }
    return out;
}

std::vector<int> reflection_subgroup(RootMask roots) {
    const auto& g = weyl_group();
    std::vector<WeylElement> gens;
    for (int i = 0; i < kRootCount; ++i)
        if (contains_root(roots, i)) gens.push_back(reflection(i));
    std::vector<int> sub{element_index(identity_element())};
    for (std::size_t i = 0; i < sub.size(); ++i) {
        for (const auto& s : gens) {
            int h = element_index(compose(s, g[sub[i]]));
            if (std::find(sub.begin(), sub.end(), h) == sub.end()) sub.push_back(h);
        }
    }
    std::sort(sub.begin(), sub.end());
    return sub;
}

std::vector<SubsystemClass> subsystem_classes(bool p3) {
    const auto& g = weyl_group();
    auto subs = all_subsystems(p3);
    std::vector<SubsystemClass> out;
    std::set<RootMask> placed;
    for (const auto& s : subs) {
        if (placed.count(s.roots)) continue;
        SubsystemClass cls;
        cls.type = s.type;
        cls.needs_p3 = s.needs_p3;
        std::set<RootMask> orbit;
        for (const auto& w : g) orbit.insert(image(w, s.roots));
        for (RootMask r : orbit) {
            placed.insert(r);
            cls.members.push_back(*std::find_if(subs.begin(), subs.end(), [&](const Subsystem& t) { return t.roots == r; }));
        }
        auto sub = reflection_subgroup(s.roots);
        auto norm = normalizer(sub);
        cls.quotient_order = static_cast<int>(norm.size() / sub.size());
        int count = 0;
        for (const auto& [x, c] : quotient_classes(norm, sub)) count = std::max(count, c + 1);
        cls.quotient_class_count = count;
        cls.maximal = std::none_of(subs.begin(), subs.end(), [&](const Subsystem& t) {
            return t.roots != s.roots && (t.roots & s.roots) == s.roots;
        });
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<Subsystem> stable_subsystems(const WeylElement& w, bool p3) {
    std::vector<Subsystem> out;
    for (const auto& s : all_subsystems(p3))
        if (is_stable(w, s.roots)) out.push_back(s);
    return out;
}

QuotientClass subgroup_class_of(const WeylElement& w, const Subsystem& psi) {
    if (!is_stable(w, psi.roots)) throw ContractError("subsystem is not stable under w");
    auto sub = reflection_subgroup(psi.roots);
    auto norm = normalizer(sub);
    auto classes = quotient_classes(norm, sub);
    int idx = element_index(w);
    auto it = classes.find(idx);
    if (it == classes.end()) throw std::logic_error("stabilizer element outside normalizer");
    QuotientClass q;
    q.index = it->second;
    q.trivial = it->second == 0;
    q.quotient_order = static_cast<int>(norm.size() / sub.size());
    int count = 0;
    for (const auto& [x, c] : classes) count = std::max(count, c + 1);
    q.class_count = count;
    return q;
}

int G2Incidence::column_index(const std::string& tag) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (columns[c] == tag) return static_cast<int>(c);
    return -1;
}

namespace {

std::string family_label(SubsystemType type, int quotient_class, int class_count) {
    switch (type) {
        case SubsystemType::A2Long:
        case SubsystemType::A2Short: {
            std::string roots = type == SubsystemType::A2Long ? "long" : "short";
            if (class_count == 2) return (quotient_class == 0 ? "SL3(" : "SU3(") + roots + ")";
            break;
        }
        case SubsystemType::A1xA1Short:
            if (class_count == 1) return "C";
            break;
        default: break;
    }
    return to_string(type) + "[" + std::to_string(quotient_class) + "]";
}

}  // namespace

G2Incidence g2_incidence(bool p3) {
    const auto& rs = root_system();
    const auto& g = weyl_group();
    const auto& classes = conjugacy_classes_g2();
    G2Incidence inc;
    inc.p3 = p3;
    std::vector<std::array<bool, 6>> cols;

    // parabolics: w is conjugate into {1, s} for a simple reflection s
    for (int simple : {rs.simple_short(), rs.simple_long()}) {
        std::vector<int> levi = reflection_subgroup(static_cast<RootMask>((1U << simple) | (1U << rs.negative(simple))));
        std::array<bool, 6> col{};
        for (const auto& c : classes)
            col[c.id - 1] = std::any_of(c.members.begin(), c.members.end(), [&](int x) {
                return std::find(levi.begin(), levi.end(), x) != levi.end();
            });
        inc.columns.push_back(simple == rs.simple_short() ? "P(short)" : "P(long)");
        cols.push_back(col);
    }

    for (const auto& sc : subsystem_classes(p3)) {
        if (!sc.maximal) continue;
        const Subsystem& psi = sc.members.front();
        for (int qc = 0; qc < sc.quotient_class_count; ++qc) {
            std::array<bool, 6> col{};
            for (std::size_t x = 0; x < g.size(); ++x) {
                if (!is_stable(g[x], psi.roots)) continue;
                if (subgroup_class_of(g[x], psi).index == qc) col[class_id_of(g[x]) - 1] = true;
            }
            inc.columns.push_back(family_label(sc.type, qc, sc.quotient_class_count));
            cols.push_back(col);
        }
    }

    for (const auto& c : classes) {
        std::array<bool, 6> col{};
        col[c.id - 1] = true;
        inc.columns.push_back("Norm(w" + std::to_string(c.id) + ")");
        cols.push_back(col);
    }

    for (int j = 0; j < 6; ++j) {
        inc.rows[j].resize(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) inc.rows[j][c] = cols[c][j];
    }

    // Order table at q odd: q^2-1, q^2-1, (q-1)^2, (q+1)^2 are even, q^2+-q+1 are odd.
    inc.centralizer_even_order = {1, 2, 3, 4};
    int ccol = inc.column_index("C");
    if (ccol >= 0)
        for (int j = 1; j <= 6; ++j)
            if (inc.contains(ccol, j)) inc.centralizer_derived.push_back(j);
    inc.centralizer_agrees = ccol >= 0 && inc.centralizer_derived == inc.centralizer_even_order;
    return inc;
}

}  // namespace invgen::g2
