#include "invgen/ffmc/polynomial.hpp"

#include <algorithm>

#include "invgen/errors.hpp"

namespace invgen::ffmc {

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly monic(const PrimeField& F, Poly f) {
    trim(f);
    if (f.empty()) return f;
    std::uint64_t c = F.inv(f.back());
    for (auto& x : f) x = F.mul(x, c);
    return f;
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r = a;
    trim(r);
    Poly d = b;
    trim(d);
    if (d.empty()) throw ContractError("polynomial division by zero");
    if (r.size() < d.size()) return {{}, r};
    Poly q(r.size() - d.size() + 1, 0);
    std::uint64_t lead_inv = F.inv(d.back());
    for (int i = degree(r); i >= degree(d); --i) {
        std::uint64_t c = F.mul(r[i], lead_inv);
        int shift = i - degree(d);
        q[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, d[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
}

Poly mod(const PrimeField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly gcd(const PrimeField& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly derivative(const PrimeField& F, const Poly& f) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], i % F.p());
    trim(d);
    return d;
}

Poly powmod(const PrimeField& F, Poly base, std::uint64_t e, const Poly& f) {
    Poly r{1};
    r = mod(F, r, f);
    base = mod(F, base, f);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, base), f);
        base = mod(F, mul(F, base, base), f);
        e >>= 1;
    }
    return r;
}

namespace {

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

// g with g(x)^p = f(x); over F_p the coefficients are their own p-th roots.
Poly pth_root(const PrimeField& F, const Poly& f) {
    const std::size_t p = F.p();
    Poly g;
    for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    return g;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const PrimeField& F, const Poly& f_in) {
    Poly f = monic(F, f_in);
    std::vector<std::pair<Poly, int>> out;
    if (degree(f) < 1) return out;
    Poly c = gcd(F, f, derivative(F, f));
    Poly w = divmod(F, f, c).first;
    int i = 1;
    while (!is_one(w)) {
        Poly y = gcd(F, w, c);
        Poly fac = divmod(F, w, y).first;
        if (degree(fac) > 0) out.emplace_back(monic(F, fac), i);
        w = y;
        c = divmod(F, c, y).first;
        ++i;
    }
    if (!is_one(c)) {
        for (auto& [g, mult] : squarefree_decomposition(F, pth_root(F, c)))
            out.emplace_back(std::move(g), mult * static_cast<int>(F.p()));
    }
    return out;
}

std::vector<std::pair<int, int>> distinct_degree_counts(const PrimeField& F, Poly f) {
    f = monic(F, f);
    std::vector<std::pair<int, int>> out;
    const Poly x{0, 1};
    Poly h = mod(F, x, f);
    for (int d = 1; degree(f) >= 2 * d; ++d) {
        h = powmod(F, h, F.q(), f);
        Poly g = gcd(F, f, sub(F, h, x));
        if (degree(g) > 0) {
            out.emplace_back(d, degree(g) / d);
            f = divmod(F, f, g).first;
            h = mod(F, h, f);
        }
    }
    if (degree(f) > 0) out.emplace_back(degree(f), 1);
    return out;
}

bool is_squarefree(const PrimeField& F, const Poly& f) {
    Poly d = derivative(F, f);
    if (d.empty()) return degree(f) <= 0;
    return degree(gcd(F, f, d)) == 0;
}

Partition factor_degrees(const PrimeField& F, const Poly& f) {
    std::vector<int> parts;
    for (const auto& [g, mult] : squarefree_decomposition(F, f))
        for (const auto& [d, count] : distinct_degree_counts(F, g))
            for (int k = 0; k < count * mult; ++k) parts.push_back(d);
    return Partition(std::move(parts));
}

std::string to_string(const Poly& f) {
    if (f.empty()) return "0";
    std::string s;
    for (int i = degree(f); i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || f[i] != 1) s += std::to_string(f[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace invgen::ffmc
