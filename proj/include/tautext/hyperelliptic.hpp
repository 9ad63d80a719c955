#pragma once

#include "tautext/numeric.hpp"

namespace tautext {

/// Hyperelliptic curve of genus g as a double cover of P^1, with L the pullback
/// of O(1) and w = L^(g-1).
class HyperellipticModel {
public:
    explicit HyperellipticModel(int genus);

    int genus() const { return g_; }
    static constexpr int V_dim = 2;

    /// h0(X, L^a).
    Integer h0_power(int a) const;
    /// dim coker(H0(L^a) (x) H0(L^b) -> H0(L^(a+b))); only for a, b <= g.
    Integer mult_cokernel_dim(int a, int b) const;

    enum class K02Case { omega, deg2_h01 };
    Integer k02_via_sections(K02Case c) const;

private:
    int g_;
};

}  // namespace tautext
