#include "tautext/errors.hpp"
#include "tautext/hyperelliptic.hpp"

#include <doctest.h>

using namespace tautext;
using K = HyperellipticModel::K02Case;

TEST_CASE("sections of powers of the g12")
{
    CHECK(HyperellipticModel(3).h0_power(2) == 3);
    CHECK(HyperellipticModel(3).h0_power(4) == 6);
    CHECK(HyperellipticModel(5).h0_power(5) == 6);
    for (int g = 2; g <= 20; ++g) {
        HyperellipticModel h(g);
        CHECK(h.h0_power(g) == g + 1);
        CHECK(h.h0_power(g - 1) == g);
        CHECK(h.h0_power(0) == 1);
    }
    CHECK_THROWS_AS(HyperellipticModel(1), InvalidSpec);
}

TEST_CASE("multiplication cokernels")
{
    CHECK(HyperellipticModel(4).mult_cokernel_dim(3, 3) == 2);
    CHECK(HyperellipticModel(3).mult_cokernel_dim(3, 2) == 2);
    for (int g = 2; g <= 20; ++g) {
        HyperellipticModel h(g);
        CHECK(h.mult_cokernel_dim(1, 1) == 0);
        CHECK(h.mult_cokernel_dim(g - 1, g - 1) == g - 2);
        CHECK(h.mult_cokernel_dim(g, g - 1) == g - 1);
        for (int a = 1; a <= g; ++a)
            for (int b = 1; b <= g; ++b) {
                CHECK(h.mult_cokernel_dim(a, b) >= 0);
                if (a + b <= g)
                    CHECK(h.mult_cokernel_dim(a, b) == 0);
            }
    }
    CHECK_THROWS_AS(HyperellipticModel(3).mult_cokernel_dim(4, 4), OutOfModeledRange);
}

TEST_CASE("K02 through section counts")
{
    CHECK(HyperellipticModel(2).k02_via_sections(K::omega) == 0);
    CHECK(HyperellipticModel(6).k02_via_sections(K::omega) == 4);
    CHECK(HyperellipticModel(3).k02_via_sections(K::deg2_h01) == 2);
    for (int g = 2; g <= 20; ++g) {
        HyperellipticModel h(g);
        CHECK(h.k02_via_sections(K::omega) == h.mult_cokernel_dim(g - 1, g - 1));
        CHECK(h.k02_via_sections(K::deg2_h01) == h.k02_via_sections(K::omega) + 1);
    }
}
