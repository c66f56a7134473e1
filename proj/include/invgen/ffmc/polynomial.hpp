#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invgen/ffmc/prime_field.hpp"
#include "invgen/partition.hpp"

namespace invgen::ffmc {

// Coefficients from the constant term up; no trailing zeros (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

int degree(const Poly& f);
void trim(Poly& f);
Poly monic(const PrimeField& F, Poly f);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul(const PrimeField& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const PrimeField& F, const Poly& a, const Poly& b);
Poly mod(const PrimeField& F, const Poly& a, const Poly& b);
Poly gcd(const PrimeField& F, Poly a, Poly b);  // monic, or empty when both are zero
Poly derivative(const PrimeField& F, const Poly& f);
Poly powmod(const PrimeField& F, Poly base, std::uint64_t e, const Poly& f);

// Squarefree decomposition of a monic f: pairs (squarefree factor, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const PrimeField& F, const Poly& f);
// Distinct-degree factorization of a squarefree monic f: (degree, number of irreducible factors).
std::vector<std::pair<int, int>> distinct_degree_counts(const PrimeField& F, Poly f);

bool is_squarefree(const PrimeField& F, const Poly& f);
// Degrees of the irreducible factors of f, with multiplicity.
Partition factor_degrees(const PrimeField& F, const Poly& f);

std::string to_string(const Poly& f);

}  // namespace invgen::ffmc
