#include "tautext/graded.hpp"
#include "tautext/oracles.hpp"
#include "tautext/status.hpp"

#include <doctest.h>

using namespace tautext;

TEST_CASE("shift relabels degrees")
{
    CHECK(shift(GradedDims{{0, 2}, {1, 3}}, 1) == GradedDims{{-1, 2}, {0, 3}});
    CHECK(shift(GradedDims{}, -5) == GradedDims{});
    GradedDims v{{-1, 1}, {2, 4}};
    CHECK(shift(shift(v, 2), -3) == GradedDims{{0, 1}, {3, 4}});
    CHECK(shift(shift(v, -3), 2) == shift(v, -1));
}

TEST_CASE("dual negates degrees")
{
    CHECK(dual(GradedDims{{0, 1}, {1, 7}}) == GradedDims{{-1, 7}, {0, 1}});
    CHECK(dual(GradedDims{}) == GradedDims{});
    GradedDims v{{-2, 3}, {5, 7}};
    CHECK(dual(dual(v)) == v);
}

TEST_CASE("tensor is convolution")
{
    GradedDims a{{0, 1}, {1, 1}};
    CHECK(tensor(a, a) == GradedDims{{0, 1}, {1, 2}, {2, 1}});
    CHECK(tensor(a, GradedDims{}) == GradedDims{});
    CHECK(tensor(GradedDims{{0, 2}}, GradedDims{{1, 3}}) == GradedDims{{1, 6}});
    GradedDims v{{0, 1}, {1, 2}}, w{{0, 3}, {1, 1}};
    CHECK(euler_char(tensor(v, w)) == -2);
    CHECK(euler_char(tensor(v, w)) == euler_char(v) * euler_char(w));
    CHECK(tensor(v, w) == tensor(w, v));
}

TEST_CASE("euler characteristic")
{
    CHECK(euler_char(GradedDims{{0, 1}, {1, 4}}) == -3);
    CHECK(euler_char(GradedDims{}) == 0);
    GradedDims v{{0, 1}, {1, 2}}, w{{0, 3}, {1, 1}};
    CHECK(euler_char(direct_sum(v, w)) == euler_char(v) + euler_char(w));
}

TEST_CASE("zero entries are normalized away")
{
    GradedDims v{{0, 0}, {3, 2}};
    CHECK(v == GradedDims{{3, 2}});
    CHECK(v.total() == 2);
    CHECK_THROWS(v.add(3, -5));
}

TEST_CASE("symmetric powers")
{
    GradedDims v{{0, 1}, {1, 1}};
    auto brute = oracle::signed_power_bruteforce(v, 2, false);
    CHECK(brute == GradedDims{{0, 1}, {1, 1}});
    CHECK(sym_power(v, 2) == brute);
    CHECK(sym_power(GradedDims{{-2, 3}, {1, 1}}, 0) == GradedDims{{0, 1}});
    CHECK(sym_power(GradedDims{{1, 2}}, 2) == GradedDims{{2, 1}});
    CHECK(sym_power(GradedDims{{1, 2}}, 2) == shift(wedge_power(GradedDims{{0, 2}}, 2), -2));
}

TEST_CASE("wedge powers")
{
    for (int g = 0; g <= 6; ++g)
        CHECK(wedge_power(GradedDims{{0, g}}, 2) == GradedDims{{0, binomial(g, 2)}});
    CHECK(wedge_power(GradedDims{{0, 3}}, 2) == GradedDims{{0, 3}});
    auto brute = oracle::signed_power_bruteforce(GradedDims{{1, 1}}, 3, true);
    CHECK(brute == GradedDims{{3, 1}});
    CHECK(wedge_power(GradedDims{{1, 1}}, 3) == brute);
    CHECK(wedge_power(GradedDims{{0, 2}}, 3) == GradedDims{});
}

TEST_CASE("plethysm matches brute force on a small grid")
{
    for (const auto& v : oracle::small_graded_spaces(-2, 2, 3))
        for (int k = 0; k <= 3; ++k) {
            CAPTURE(v.str());
            CAPTURE(k);
            CHECK(sym_power(v, k) == oracle::signed_power_bruteforce(v, k, false));
            CHECK(wedge_power(v, k) == oracle::signed_power_bruteforce(v, k, true));
            CHECK(sym_power(shift(v, 1), k) == shift(wedge_power(v, k), k));
        }
}

TEST_CASE("dimension status arithmetic")
{
    auto two = DimStatus::exact(2), range = DimStatus::interval(1, 3), low = DimStatus::at_least(4);
    CHECK((two + range).render() == "3..5");
    CHECK((two * range).render() == "2..6");
    CHECK((range + low).render() == "5..");
    CHECK((DimStatus::exact(0) * DimStatus::unknown()).is_zero());
    CHECK(DimStatus::unknown().render() == "?");
    CHECK(DimStatus::at_least(-3).render() == "?");
    CHECK(difference(DimStatus::exact(7), range).render() == "4..6");
    CHECK(difference(DimStatus::interval(2, 9), DimStatus::exact(3)).render() == "0..6");
    CHECK_THROWS_AS(range.value(), std::logic_error);
}

TEST_CASE("graded status follows graded dims when exact")
{
    GradedDims v{{0, 1}, {1, 3}}, w{{-1, 2}};
    GradedStatus sv(v), sw(w);
    CHECK(tensor(sv, sw).dims() == tensor(v, w));
    CHECK(shift(sv, 2).dims() == shift(v, 2));
    CHECK(dual(sv).dims() == dual(v));
    CHECK((sv + sw).dims() == direct_sum(v, w));
    GradedStatus u;
    u.set(0, DimStatus::interval(0, 2));
    CHECK_FALSE((u + sv).exact());
    CHECK(tensor(u, GradedStatus(GradedDims{})).exact());
}
