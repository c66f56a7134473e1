#include <doctest.h>

#include <stdexcept>

#include "invgen/partition.hpp"
#include "invgen/rational.hpp"

using namespace invgen;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> partition_counts(int n_max) {
    std::vector<long> p(n_max + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            long sign = k % 2 ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

}  // namespace

TEST_CASE("rational strings are always num/den") {
    CHECK(Rational(3).str() == "3/1");
    CHECK(Rational(0).str() == "0/1");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("partition counts match the pentagonal recurrence") {
    auto p = partition_counts(60);
    for (int n = 1; n <= 40; ++n) CHECK(partitions(n).size() == static_cast<std::size_t>(p[n]));
    long streamed = 0;
    for_each_partition(60, [&](std::span<const int>) { ++streamed; });
    CHECK(streamed == p[60]);
    CHECK(p[60] == 966467);
}

TEST_CASE("signed partition counts are the self-convolution of p(n)") {
    auto p = partition_counts(30);
    for (int m = 1; m <= 30; ++m) {
        long expected = 0;
        for (int k = 0; k <= m; ++k) expected += p[k] * p[m - k];
        long streamed = 0;
        for_each_signed_partition(m, [&](std::span<const SignedPart>) { ++streamed; });
        CHECK(streamed == expected);
        if (m <= 12) CHECK(signed_partitions(m).size() == static_cast<std::size_t>(expected));
    }
}

TEST_CASE("canonical partition order") {
    auto ps = partitions(3);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].str() == "3");
    CHECK(ps[1].str() == "2,1");
    CHECK(ps[2].str() == "1,1,1");
    auto p4 = partitions(4);
    CHECK(std::is_sorted(p4.begin(), p4.end()));
    CHECK(p4[1].str() == "3,1");
    CHECK(p4[2].str() == "2,2");
}

TEST_CASE("canonical signed partition order") {
    auto s2 = signed_partitions(2);
    std::vector<std::string> got;
    for (const auto& s : s2) got.push_back(s.str());
    CHECK(got == std::vector<std::string>{"2+", "2-", "1+,1+", "1+,1-", "1-,1-"});
    auto s5 = signed_partitions(5);
    CHECK(std::is_sorted(s5.begin(), s5.end()));
}

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("1,3,2").str() == "3,2,1");
    CHECK(Partition::parse("4").n() == 4);
    CHECK_THROWS(Partition::parse("2,0"));
    CHECK_THROWS(Partition::parse("a"));

    auto sp = SignedPartition::parse("1+,3-");
    CHECK(sp.str() == "3-,1+");
    CHECK(sp.m() == 4);
    CHECK(sp.sign_product() == -1);
    CHECK(sp == SignedPartition{{3, -1}, {1, 1}});
    CHECK_THROWS(SignedPartition::parse("3"));
    CHECK_THROWS(SignedPartition::parse("2*"));
}

TEST_CASE("enumeration ranges") {
    CHECK_THROWS(partitions(0));
    CHECK_THROWS(partitions(kMaxPartitionN + 1));
    CHECK_THROWS(signed_partitions(kMaxSignedPartitionM + 1));
}
