#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invgen/ffmc/matrix.hpp"
#include "invgen/rational.hpp"

namespace invgen::ffmc {

enum class MatrixGroup { GL, SL };

std::string to_string(MatrixGroup g);
MatrixGroup parse_group(const std::string& text);

inline constexpr std::uint64_t kMaxSamples = 100'000'000;
inline constexpr std::uint64_t kMaxExhaustiveOrder = 1'000'000;

struct SampleReport {
    MatrixGroup group = MatrixGroup::GL;
    int n = 0;
    std::uint64_t q = 0;
    std::uint64_t samples = 0;  // group elements classified
    std::uint64_t seed = 0;
    int streams = 1;
    bool exhaustive = false;
    std::map<Partition, std::uint64_t> counts;  // every partition of n, regular semisimple samples only
    std::uint64_t regular_semisimple = 0;
    std::uint64_t rejections = 0;  // singular draws discarded by the sampler
};

// Exact order of GL_n(q) or SL_n(q), as a big integer.
mpz_class group_order(MatrixGroup g, int n, std::uint64_t q);

// Monte Carlo: samples are split over `streams` independent generators seeded from (seed, stream id)
// and merged by count addition. streams = 1 is bit-reproducible.
SampleReport torus_statistics(MatrixGroup g, int n, std::uint64_t q, std::uint64_t samples, std::uint64_t seed,
                              int streams = 1);

// Every element of the group once. Requires |group| <= kMaxExhaustiveOrder.
SampleReport exhaustive_statistics(MatrixGroup g, int n, std::uint64_t q);

struct DeviationRow {
    Partition partition;
    std::uint64_t count = 0;
    Rational empirical;  // count / samples
    Rational exact;      // 1 / z_lambda
    Rational deviation;  // empirical - exact
    double sigma = 0;    // binomial standard error at the exact value (0 for exhaustive reports)
    double threshold = 0;
    bool flagged = false;
};

struct DeviationTable {
    MatrixGroup group = MatrixGroup::GL;
    int n = 0;
    std::uint64_t q = 0;
    std::uint64_t samples = 0;
    bool exhaustive = false;
    std::vector<DeviationRow> rows;
    bool any_flagged = false;
    Rational non_regular_semisimple;  // 1 - rs / samples
};

DeviationTable compare_to_weyl(const SampleReport& report);

}  // namespace invgen::ffmc
