// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "../support/brute_weyl.hpp"
#include "invgen/ffmc/sampling.hpp"
#include "invgen/generation.hpp"

using namespace invgen;

namespace {

// Tolerances and budgets.
constexpr double kG2SecondsMax = 1.0;
constexpr double kSl2SecondsMax = 1.0;
constexpr double kVerifySecondsMax = 60.0;
constexpr double kSharpnessM4SecondsMax = 30.0;
constexpr double kBridgeSecondsMax = 60.0;
constexpr int kMaxRank = 30;
constexpr double kFixedPartLimitTolerance = 0.01;
constexpr int kFixedPartLimitRank = 60;
constexpr double kSigmaMultiplier = 4.0;
constexpr std::uint64_t kOracleMcSamples = 100'000;
constexpr std::uint64_t kBridgeSamples = 100'000;
constexpr std::uint64_t kBridgeSeed = 42;
constexpr double kBridgeTolerance = 0.02;
constexpr double kNonRegularConstant = 3.0;

const std::map<std::string, std::uint64_t> kGl32Oracle{{"3", 48}, {"2,1", 56}, {"1,1,1", 0}};
constexpr std::uint64_t kGl32RegularSemisimple = 104;
const std::map<std::string, std::uint64_t> kSl25Oracle{{"2", 40}, {"1,1", 30}};
constexpr std::uint64_t kSl25RegularSemisimple = 70;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    double s = seconds_since(t0);
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << std::fixed
              << std::setprecision(2) << s << " s)" << o.detail.str() << std::endl;
}

std::vector<GroupFamily> signed_families(int m) {
    std::vector<GroupFamily> out{GroupFamily::symplectic(m, QParity::Odd), GroupFamily::symplectic(m, QParity::Even)};
    if (m >= 3) out.push_back(GroupFamily::orthogonal_odd(m));
    if (m >= 4) {
        out.push_back(GroupFamily::orthogonal_plus(m));
        out.push_back(GroupFamily::orthogonal_minus(m));
    }
    return out;
}

std::vector<GroupFamily> verification_rows() {
    std::vector<GroupFamily> out;
    for (int n = 2; n <= kMaxRank; ++n) out.push_back(GroupFamily::linear(n));
    for (int n = 3; n <= kMaxRank; ++n) out.push_back(GroupFamily::unitary(n));
    for (int m = 2; m <= kMaxRank; ++m) {
        out.push_back(GroupFamily::symplectic(m, QParity::Odd));
        out.push_back(GroupFamily::symplectic(m, QParity::Even));
        if (m >= 3) out.push_back(GroupFamily::orthogonal_odd(m));
        if (m >= 4) out.push_back(GroupFamily::orthogonal_plus(m));
        if (m >= 4) out.push_back(GroupFamily::orthogonal_minus(m));
    }
    return out;
}

double frequency(const ffmc::SampleReport& r, const std::string& part) {
    return static_cast<double>(r.counts.at(Partition::parse(part))) / static_cast<double>(r.samples);
}

double non_regular(const ffmc::SampleReport& r) {
    return 1.0 - static_cast<double>(r.regular_semisimple) / static_cast<double>(r.samples);
}

}  // namespace

int main() {
    criterion(1, "G2 with 3 | q: two-element leading term is 1/9", [](Outcome& o) {
        auto t0 = Clock::now();
        Rational v = leading_term_two_random(GroupFamily::g2(true));
        double s = seconds_since(t0);
        o.detail << " value " << v;
        o.require(v == Rational(1, 9), "value");
        o.require(s < kG2SecondsMax, "runtime");
    });

    criterion(2, "SL2: two-element leading term is 1/2", [](Outcome& o) {
        auto t0 = Clock::now();
        Rational v = leading_term_two_random(GroupFamily::linear(2));
        double s = seconds_since(t0);
        o.detail << " value " << v;
        o.require(v == Rational(1, 2), "value");
        o.require(s < kSl2SecondsMax, "runtime");
    });

    criterion(3, "distinguished sets have empty residual for every row up to rank 30", [](Outcome& o) {
        auto t0 = Clock::now();
        std::size_t rows = 0, bad = 0, subset_bad = 0;
        for (const auto& g : verification_rows()) {
            auto r = verify_ab(g);
            ++rows;
            if (!r.empty) {
                ++bad;
                o.detail << " nonempty:" << g.str();
            }
            if (r.ab.elements.size() >= 3 && !r.proper_subsets_nonempty) {
                ++subset_bad;
                o.detail << " subset-empty:" << g.str();
            }
        }
        double s = seconds_since(t0);
        o.detail << " rows " << rows;
        o.require(bad == 0, "empty residual");
        o.require(subset_bad == 0, "proper subsets nonempty");
        o.require(s < kVerifySecondsMax, "runtime");
    });

    criterion(4, "G2 fine structure", [](Outcome& o) {
        auto g = GroupFamily::g2(true);
        auto cs = torus_classes(g);
        Rational lo = pinv_leading(cs[2]);
        for (int i = 3; i < 6; ++i) lo = std::min(lo, pinv_leading(cs[i]));
        Rational reflections = cs[0].probability + cs[1].probability;
        bool star = true;
        for (const auto& t : cs) star = star && shares_overgroup(t, cs[0]) && shares_overgroup(t, cs[1]);
        o.detail << " min partner mass over w3..w6 " << lo << ", reflections " << reflections;
        o.require(lo == Rational(1, 6), "min over classes 3-6");
        o.require(reflections == Rational(1, 2), "mass of classes 1-2");
        o.require(star, "shared column with classes 1 and 2");
    });

    criterion(5, "class probability bound 1/(4m), equality only at (2-,2-) in D+(4)", [](Outcome& o) {
        auto r = alpha_check(kMaxRank);
        o.require(r.bound_holds, "bound");
        o.require(r.d4_equality, "D+(4) equality");
        bool only_d4 = r.equality_cases.size() == 1 && r.equality_cases[0].family == GroupFamily::orthogonal_plus(4) &&
                       r.equality_cases[0].argmin.str() == "2-,2-";
        o.detail << " equality cases:";
        for (const auto& e : r.equality_cases) o.detail << " " << e.family.str() << "(" << e.argmin.str() << ")=" << e.value;
        o.require(only_d4, "equality exactly at D+(4)");

        // enumeration oracle for m <= 4
        for (int m = 2; m <= 4; ++m) {
            auto counts = brute::hyperoctahedral_types(m);
            for (const auto& g : signed_families(m)) {
                std::vector<TorusData> types;
                try {
                    types = distinguished_torus_types(g);
                } catch (const std::out_of_range&) {
                    continue;
                }
                const auto& table = !g.is_type_d() ? counts.all : (g.d_sign() == 1 ? counts.even_neg : counts.odd_neg);
                long denom = g.is_type_d() ? counts.order / 2 : counts.order;
                Rational lo(1);
                for (const auto& t : types) lo = std::min(lo, Rational(table.at(std::get<SignedPartition>(t)), denom));
                o.require(lo == min_class_probability(g).second, "enumeration oracle " + g.str());
            }
        }
    });

    criterion(6, "sign statistics", [](Outcome& o) {
        for (int m = 1; m <= kMaxRank; ++m)
            o.require(prob_sign_product(m, 1) == Rational(1, 2) && prob_sign_product(m, -1) == Rational(1, 2),
                      "sign product at m=" + std::to_string(m));
        const double floor = (1.0 - std::exp(-1.0)) / 2.0;
        for (int m = 2; m <= 80; ++m)
            o.require(prob_positive_fixed_part(m).to_double() >= floor, "lower bound at m=" + std::to_string(m));
        // independent: P(no positive fixed point) = sum_k (-1/2)^k / k!
        Rational none(0), term(1);
        for (int k = 0; k <= kFixedPartLimitRank; ++k) {
            if (k > 0) term = term * Rational(-1, 2 * k);
            none += term;
        }
        Rational v = prob_positive_fixed_part(kFixedPartLimitRank);
        double limit = 1.0 - std::exp(-0.5);
        o.detail << " m=60 value " << v.to_double() << " limit " << limit;
        o.require(v == Rational(1) - none, "inclusion-exclusion agreement");
        o.require(std::abs(v.to_double() - limit) <= kFixedPartLimitTolerance, "limit");
    });

    criterion(7, "three-element sets in Sp(2m), q even, m = 2..4", [](Outcome& o) {
        for (int m = 2; m <= 4; ++m) {
            auto t0 = Clock::now();
            auto r = sharpness_triples(m);
            double s = seconds_since(t0);
            o.detail << " m=" << m << ": " << r.triples << " triples, min mass " << r.min_residual_mass;
            o.require(r.all_triples_blocked, "blocked at m=" + std::to_string(m));
            o.require(r.min_residual_mass >= r.bound, "mass bound at m=" + std::to_string(m));
            o.require(r.proof_witnesses_valid, "proof witnesses at m=" + std::to_string(m));
            if (m == 4) o.require(s < kSharpnessM4SecondsMax, "runtime");
        }
    });

    criterion(8, "normalization, symmetry and monotonicity", [](Outcome& o) {
        std::size_t checked = 0;
        auto sums_to_one = [&](const GroupFamily& g) {
            Rational s(0);
            for (const auto& t : torus_classes(g)) s += t.probability;
            ++checked;
            o.require(s == Rational(1), "normalization " + g.str());
        };
        for (int n = 2; n <= kMaxRank; ++n) {
            sums_to_one(GroupFamily::linear(n));
            if (n >= 3) sums_to_one(GroupFamily::unitary(n));
        }
        for (int m = 2; m <= kMaxRank; ++m)
            for (const auto& g : signed_families(m)) sums_to_one(g);
        sums_to_one(GroupFamily::g2(true));
        sums_to_one(GroupFamily::g2(false));
        o.detail << " families " << checked;

        std::mt19937_64 rng(8);
        for (int r = 2; r <= 8; ++r) {
            std::vector<GroupFamily> fams = signed_families(r);
            fams.push_back(GroupFamily::linear(r));
            if (r >= 3) fams.push_back(GroupFamily::unitary(r));
            for (const auto& g : fams) {
                auto cs = torus_classes(g);
                for (const auto& [a, b] : relation_sim(g))
                    o.require(!(a == b) && !shares_overgroup(b, a), "relation " + g.str());
                std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
                for (int trial = 0; trial < 20; ++trial) {
                    const auto& a = cs[pick(rng)];
                    const auto& b = cs[pick(rng)];
                    o.require(shares_overgroup(a, b) == shares_overgroup(b, a), "symmetry " + g.str());
                    std::vector<ElementSpec> A{element_for(a)};
                    auto before = residual_classes(A);
                    A.push_back(element_for(b, "u"));
                    auto after = residual_classes(A);
                    for (const auto& t : after)
                        o.require(std::find(before.begin(), before.end(), t) != before.end(), "monotone " + g.str());
                }
            }
        }
    });

    criterion(9, "finite-field oracle: GL3(2) and SL2(5)", [](Outcome& o) {
        auto gl = ffmc::exhaustive_statistics(ffmc::MatrixGroup::GL, 3, 2);
        o.require(gl.samples == 168, "GL3(2) order");
        o.require(gl.regular_semisimple == kGl32RegularSemisimple, "GL3(2) squarefree count");
        for (const auto& [p, c] : gl.counts) o.require(c == kGl32Oracle.at(p.str()), "GL3(2) (" + p.str() + ")");
        auto sl = ffmc::exhaustive_statistics(ffmc::MatrixGroup::SL, 2, 5);
        o.require(sl.samples == 120, "SL2(5) order");
        o.require(sl.regular_semisimple == kSl25RegularSemisimple, "SL2(5) squarefree count");
        for (const auto& [p, c] : sl.counts) o.require(c == kSl25Oracle.at(p.str()), "SL2(5) (" + p.str() + ")");

        for (const auto* ex : {&gl, &sl}) {
            auto mc = ffmc::torus_statistics(ex->group, ex->n, ex->q, kOracleMcSamples, kBridgeSeed);
            double worst = 0;
            auto check = [&](double exact, double observed, const std::string& what) {
                double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(mc.samples));
                double z = sigma > 0 ? std::abs(observed - exact) / sigma : (observed == exact ? 0 : INFINITY);
                worst = std::max(worst, z);
                o.require(z <= kSigmaMultiplier, what);
            };
            for (const auto& [p, c] : ex->counts)
                check(static_cast<double>(c) / static_cast<double>(ex->samples), frequency(mc, p.str()),
                      ffmc::to_string(ex->group) + " MC (" + p.str() + ")");
            check(non_regular(*ex), non_regular(mc), "MC non-regular proportion");
            o.detail << " " << ffmc::to_string(ex->group) << ex->n << "(" << ex->q << ") worst |z| " << std::setprecision(2)
                     << worst;
        }
    });

    criterion(10, "Weyl statistics over F_101 and the SL2(q) trend", [](Outcome& o) {
        auto t0 = Clock::now();
        auto gl = ffmc::torus_statistics(ffmc::MatrixGroup::GL, 3, 101, kBridgeSamples, kBridgeSeed);
        const std::map<std::string, double> weyl{{"3", 1.0 / 3}, {"2,1", 1.0 / 2}, {"1,1,1", 1.0 / 6}};
        for (const auto& [p, exact] : weyl) {
            double f = frequency(gl, p);
            o.require(std::abs(f - exact) <= kBridgeTolerance, "GL3(101) (" + p + ")");
        }
        auto sl = ffmc::torus_statistics(ffmc::MatrixGroup::SL, 2, 101, kBridgeSamples, kBridgeSeed);
        o.require(std::abs(frequency(sl, "2") - 0.5) <= kBridgeTolerance, "SL2(101) nonsplit");
        o.require(std::abs(frequency(sl, "1,1") - 0.5) <= kBridgeTolerance, "SL2(101) split");
        o.detail << " GL3(101) (3) " << std::setprecision(4) << frequency(gl, "3") << ", SL2(101) split "
                 << frequency(sl, "1,1") << "; non-regular:";

        double prev = 2.0;
        for (std::uint64_t q : {5, 7, 11, 13, 101}) {
            auto r = q <= 13 ? ffmc::exhaustive_statistics(ffmc::MatrixGroup::SL, 2, q)
                             : ffmc::torus_statistics(ffmc::MatrixGroup::SL, 2, q, kBridgeSamples, kBridgeSeed);
            double v = non_regular(r);
            o.detail << " q=" << q << ":" << v;
            o.require(v < prev, "decreasing at q=" + std::to_string(q));
            o.require(v <= kNonRegularConstant / static_cast<double>(q), "C/q bound at q=" + std::to_string(q));
            prev = v;
        }
        o.require(seconds_since(t0) < kBridgeSecondsMax, "runtime");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
