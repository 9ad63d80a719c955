#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tautext {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;  // first failure, or a summary of what was checked

    bool passed() const { return cases > 0 && failures == 0; }
};

/// d^(p+1) d^p = 0 for n <= max_n.
CheckResult check_complex(int max_n = 6);
/// Hard-coded orbit structure against group enumeration and invariant dimensions.
CheckResult check_orbits(int max_n = 5);
/// Plethysm rule against brute-force signed symmetrization, plus S^k(V[1]) = (wedge^k V)[k].
CheckResult check_plethysm(int lo = -3, int hi = 3, int max_dim = 4, int max_k = 4);
/// Direct and Serre-dual descriptions of E^1 columns agree.
CheckResult check_serre_routes();
/// Riemann-Roch and Serre duality on every resolved bundle of a small grid.
CheckResult check_curve_model();
CheckResult check_hyperelliptic(int max_g = 10);
CheckResult check_ext1_fixtures();
CheckResult check_bn_monotone();
CheckResult check_simpleness();
CheckResult check_classification();
CheckResult check_genus_one(int max_n = 5);

std::vector<CheckResult> run_selftest();

}  // namespace tautext
