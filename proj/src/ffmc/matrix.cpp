#include "invgen/ffmc/matrix.hpp"

#include <utility>

#include "invgen/errors.hpp"

namespace invgen::ffmc {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxMatrixN) throw RangeError("matrix size must be in [1, " + std::to_string(kMaxMatrixN) + "]");
}

}  // namespace

Matrix::Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) { check_n(size); }

Matrix identity_matrix(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix companion_matrix(const PrimeField& F, const Poly& f) {
    const int n = degree(f);
    if (n < 1 || f.back() != 1) throw ContractError("companion matrix needs a monic polynomial of positive degree");
    Matrix m(n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = F.neg(f[i] % F.p());
    return m;
}

std::uint64_t determinant(const PrimeField& F, Matrix m) {
    const int n = m.n;
    std::uint64_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(c, c));
        std::uint64_t inv = F.inv(m.at(c, c));
        for (int r = c + 1; r < n; ++r) {
            std::uint64_t f = F.mul(m.at(r, c), inv);
            if (f == 0) continue;
            for (int j = c; j < n; ++j) m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(c, j)));
        }
    }
    return det;
}

// Similarity reduction to upper Hessenberg form, then the standard three-term expansion.
Poly char_poly(const PrimeField& F, const Matrix& in) {
    Matrix h = in;
    const int n = h.n;
    for (auto& x : h.a) x %= F.p();
    for (int m = 1; m + 1 < n; ++m) {
        int piv = -1;
        for (int i = m; i < n; ++i)
            if (h.at(i, m - 1) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != m) {
            for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(m, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, m));
        }
        std::uint64_t inv = F.inv(h.at(m, m - 1));
        for (int i = m + 1; i < n; ++i) {
            std::uint64_t u = F.mul(h.at(i, m - 1), inv);
            if (u == 0) continue;
            for (int j = 0; j < n; ++j) h.at(i, j) = F.sub(h.at(i, j), F.mul(u, h.at(m, j)));
            for (int r = 0; r < n; ++r) h.at(r, m) = F.add(h.at(r, m), F.mul(u, h.at(r, i)));
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block
    std::vector<Poly> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        Poly next = mul(F, Poly{F.neg(h.at(k - 1, k - 1)), 1}, p[k - 1]);
        std::uint64_t prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = F.mul(prod, h.at(i, i - 1));
            std::uint64_t c = F.mul(h.at(i - 1, k - 1), prod);
            if (c == 0) continue;
            Poly term = p[i - 1];
            for (auto& x : term) x = F.mul(x, c);
            next = sub(F, next, term);
        }
        p[k] = std::move(next);
    }
    return p[n];
}

CharPolyAnalysis char_poly_analysis(const PrimeField& F, const Matrix& m) {
    CharPolyAnalysis r;
    r.poly = char_poly(F, m);
    r.squarefree = is_squarefree(F, r.poly);
    r.degree_partition = factor_degrees(F, r.poly);
    return r;
}

Matrix random_gl(int n, const PrimeField& F, Rng& rng, std::uint64_t* rejections) {
    check_n(n);
    std::uniform_int_distribution<std::uint64_t> entry(0, F.p() - 1);
    Matrix m(n);
    while (true) {
        for (auto& x : m.a) x = entry(rng);
        if (determinant(F, m) != 0) return m;
        if (rejections) ++*rejections;
    }
}

Matrix random_sl(int n, const PrimeField& F, Rng& rng, std::uint64_t* rejections) {
    Matrix m = random_gl(n, F, rng, rejections);
    std::uint64_t d = determinant(F, m);
    std::uint64_t s = F.inv(d);
    for (int j = 0; j < n; ++j) m.at(0, j) = F.mul(m.at(0, j), s);
    return m;
}

}  // namespace invgen::ffmc
