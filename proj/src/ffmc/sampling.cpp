#include "invgen/ffmc/sampling.hpp"

#include <cmath>
#include <thread>

#include "invgen/errors.hpp"
#include "invgen/weyl_stats.hpp"

namespace invgen::ffmc {

std::string to_string(MatrixGroup g) { return g == MatrixGroup::GL ? "GL" : "SL"; }

MatrixGroup parse_group(const std::string& text) {
    if (text == "GL") return MatrixGroup::GL;
    if (text == "SL") return MatrixGroup::SL;
    throw std::invalid_argument("unknown matrix group '" + text + "'");
}

mpz_class group_order(MatrixGroup g, int n, std::uint64_t q) {
    mpz_class qq(static_cast<unsigned long>(q)), order = 1, qn;
    mpz_pow_ui(qn.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= qq;
    }
    if (g == MatrixGroup::SL) order /= qq - 1;
    return order;
}

namespace {

SampleReport blank_report(MatrixGroup g, int n, std::uint64_t q) {
    SampleReport r;
    r.group = g;
    r.n = n;
    r.q = q;
    for (auto& p : partitions(n)) r.counts.emplace(std::move(p), 0);
    return r;
}

void classify(const PrimeField& F, const Matrix& m, SampleReport& r) {
    ++r.samples;
    auto a = char_poly_analysis(F, m);
    if (!a.squarefree) return;
    ++r.regular_semisimple;
    ++r.counts[a.degree_partition];
}

void merge(SampleReport& into, const SampleReport& from) {
    into.samples += from.samples;
    into.regular_semisimple += from.regular_semisimple;
    into.rejections += from.rejections;
    for (const auto& [p, c] : from.counts) into.counts[p] += c;
}

void check_args(int n, std::uint64_t samples) {
    if (n < 1 || n > kMaxMatrixN) throw RangeError("n must be in [1, 8]");
    if (samples < 1 || samples > kMaxSamples) throw RangeError("samples must be in [1, 10^8]");
}

}  // namespace

SampleReport torus_statistics(MatrixGroup g, int n, std::uint64_t q, std::uint64_t samples, std::uint64_t seed,
                              int streams) {
    check_args(n, samples);
    if (streams < 1 || streams > 64) throw RangeError("streams must be in [1, 64]");
    const PrimeField F(q);
    SampleReport total = blank_report(g, n, q);
    total.seed = seed;
    total.streams = streams;

    std::vector<SampleReport> parts(static_cast<std::size_t>(streams), blank_report(g, n, q));
    auto run = [&](int s) {
        std::uint64_t share = samples / streams + (static_cast<std::uint64_t>(s) < samples % streams ? 1 : 0);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s)};
        Rng rng(seq);
        SampleReport& r = parts[static_cast<std::size_t>(s)];
        for (std::uint64_t i = 0; i < share; ++i) {
            Matrix m = g == MatrixGroup::GL ? random_gl(n, F, rng, &r.rejections) : random_sl(n, F, rng, &r.rejections);
            classify(F, m, r);
        }
    };
    if (streams == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < streams; ++s) pool.emplace_back(run, s);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : parts) merge(total, r);
    return total;
}

SampleReport exhaustive_statistics(MatrixGroup g, int n, std::uint64_t q) {
    if (n < 1 || n > kMaxMatrixN) throw RangeError("n must be in [1, 8]");
    const PrimeField F(q);
    if (group_order(g, n, q) > kMaxExhaustiveOrder) throw RangeError("group too large for exhaustive mode");
    SampleReport r = blank_report(g, n, q);
    r.exhaustive = true;
    Matrix m(n);
    const std::size_t cells = m.a.size();
    // odometer over all q^(n^2) matrices
    while (true) {
        std::uint64_t d = determinant(F, m);
        if (g == MatrixGroup::GL ? d != 0 : d == 1) classify(F, m, r);
        std::size_t i = 0;
        while (i < cells && ++m.a[i] == q) m.a[i++] = 0;
        if (i == cells) break;
    }
    return r;
}

DeviationTable compare_to_weyl(const SampleReport& report) {
    if (report.samples == 0) throw ContractError("report has no samples");
    DeviationTable t;
    t.group = report.group;
    t.n = report.n;
    t.q = report.q;
    t.samples = report.samples;
    t.exhaustive = report.exhaustive;
    const auto N = static_cast<long>(report.samples);
    const double drift = 1.0 / static_cast<double>(report.q);
    for (const auto& [p, c] : report.counts) {
        if (p.n() != report.n) throw ContractError("partition does not match the matrix size");
        DeviationRow row;
        row.partition = p;
        row.count = c;
        row.empirical = Rational(mpz_class(static_cast<unsigned long>(c)), mpz_class(N));
        row.exact = cycle_type_probability(p.parts());
        row.deviation = row.empirical - row.exact;
        if (!report.exhaustive) {
            double e = row.exact.to_double();
            row.sigma = std::sqrt(e * (1 - e) / static_cast<double>(N));
        }
        row.threshold = drift + 4 * row.sigma;
        row.flagged = std::fabs(row.deviation.to_double()) > row.threshold;
        t.any_flagged = t.any_flagged || row.flagged;
        t.rows.push_back(std::move(row));
    }
    t.non_regular_semisimple =
        Rational(1) - Rational(mpz_class(static_cast<unsigned long>(report.regular_semisimple)), mpz_class(N));
    return t;
}

}  // namespace invgen::ffmc
