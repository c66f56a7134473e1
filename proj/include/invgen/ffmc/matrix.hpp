#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "invgen/ffmc/polynomial.hpp"
#include "invgen/ffmc/prime_field.hpp"
#include "invgen/partition.hpp"

namespace invgen::ffmc {

inline constexpr int kMaxMatrixN = 8;

/// Dense n x n matrix over a prime field, row-major.
struct Matrix {
    int n = 0;
    std::vector<std::uint64_t> a;

    Matrix() = default;
    explicit Matrix(int n);

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity_matrix(int n);
// Companion matrix of a monic polynomial of degree n.
Matrix companion_matrix(const PrimeField& F, const Poly& f);
std::uint64_t determinant(const PrimeField& F, Matrix m);

Poly char_poly(const PrimeField& F, const Matrix& m);

struct CharPolyAnalysis {
    Poly poly;
    bool squarefree = false;
    Partition degree_partition;
};

CharPolyAnalysis char_poly_analysis(const PrimeField& F, const Matrix& m);

using Rng = std::mt19937_64;

// Uniform over GL_n(q) by rejection; rejected draws are added to *rejections when given.
Matrix random_gl(int n, const PrimeField& F, Rng& rng, std::uint64_t* rejections = nullptr);
// Uniform over SL_n(q): a GL draw with its first row divided by the determinant.
Matrix random_sl(int n, const PrimeField& F, Rng& rng, std::uint64_t* rejections = nullptr);

}  // namespace invgen::ffmc
