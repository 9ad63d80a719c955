#include "tautext/hyperelliptic.hpp"
#include "tautext/errors.hpp"

#include <string>

namespace tautext {

HyperellipticModel::HyperellipticModel(int genus) : g_(genus)
{
    if (genus < 2)
        throw InvalidSpec("hyperelliptic model needs genus >= 2, got " + std::to_string(genus));
}

Integer HyperellipticModel::h0_power(int a) const
{
    if (a < 0)
        throw std::invalid_argument("h0_power: exponent must be nonnegative");
    if (a <= g_)
        return a + 1;
    return 2 * Integer(a) + 1 - g_;
}

Integer HyperellipticModel::mult_cokernel_dim(int a, int b) const
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("mult_cokernel_dim: exponents must be positive");
    if (a > g_ || b > g_)
        throw OutOfModeledRange("image of H0(L^" + std::to_string(a) + ") x H0(L^" + std::to_string(b) +
                                ") is not pinned down for exponents above g=" + std::to_string(g_));
    // image is h^* S^(a+b) V
    return h0_power(a + b) - (a + b + 1);
}

Integer HyperellipticModel::k02_via_sections(K02Case c) const
{
    Integer h0_omega2 = 3 * Integer(g_ - 1);
    Integer k_omega = h0_omega2 - (2 * Integer(g_ - 1) + 1);
    if (c == K02Case::omega)
        return k_omega;
    return k_omega + 1;
}

}  // namespace tautext
