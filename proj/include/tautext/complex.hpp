#pragma once

#include "tautext/curve.hpp"
#include "tautext/linalg.hpp"
#include "tautext/status.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tautext {

/// Sorted subset of {1..n}.
using Subset = std::vector<int>;

/// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets(int n, int k);

/// The complex C^0 -> C^1 -> ... -> C^{n-1}; C^p has one generator per
/// (p+1)-subset and differentials[p] is the matrix of d^p : C^p -> C^{p+1}
/// (rows indexed by terms[p+1], columns by terms[p]).
struct SignedComplex {
    int n = 0;
    std::vector<std::vector<Subset>> terms;
    std::vector<RationalMatrix> differentials;
};

constexpr int default_complex_bound = 10;

/// Throws BoundExceeded for n > bound, std::logic_error if d o d != 0.
SignedComplex build_signed_complex(int n, int bound = default_complex_bound);

struct IndexFamily {
    enum class Kind { pairs, singletons, subsets };
    Kind kind = Kind::singletons;
    int param = 0;  // p for pairs (|I| = p+1), k for subsets

    /// "pairs:p", "singletons", "subsets:k"; throws UnknownFamily.
    static IndexFamily parse(const std::string& descriptor);
    std::string str() const;
};

struct OrbitDecomposition {
    std::vector<std::string> representatives;
    std::vector<Integer> stabilizer_orders;
    std::vector<Integer> orbit_sizes;
};

OrbitDecomposition orbit_decompose(int n, const IndexFamily& family);
OrbitDecomposition orbit_decompose(int n, const std::string& descriptor);

/// A representation of S_n on Q^dimension given by signed permutations of a
/// basis: act(perm, b) = (index, sign) with g.e_b = sign * e_index. `perm` is
/// 0-based, perm[i] = g(i).
struct SignedPermutationAction {
    std::size_t dimension = 0;
    std::function<std::pair<std::size_t, int>(const std::vector<int>& perm, std::size_t basis)> act;
};

/// Unsigned permutation action of S_n on the index set of `family`.
SignedPermutationAction family_action(int n, const IndexFamily& family);

constexpr std::size_t default_bruteforce_bound = 4'000'000;

/// Rank of sum_g rho(g) over Q. Throws BoundExceeded when n! * dimension > bound.
std::size_t invariants_dim_bruteforce(int n, const SignedPermutationAction& rep,
                                      std::size_t bound = default_bruteforce_bound);

/// Ext^*_{S_n}(C^p_E, C^0_F), unshifted.
struct E1Term {
    int p = 0;
    GradedStatus dims;
    GradedStatus first;   // Ext^*(E, F w^-p) (x) S^{n-p-1} H^*(O), shifted by -p
    GradedStatus second;  // Ext^*(E, w^-p) (x) H^*(F) (x) S^{n-p-2} H^*(O), shifted by -p
    std::vector<std::string> unresolved;  // override keys that would pin the unknown parts
    bool exact() const { return dims.exact(); }
};

E1Term e1_term(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n, int p);

/// Ext^*_{S_n}(C^p_E, C^0_F) computed through equivariant Serre duality.
struct SerreDualTerm {
    int p = 0;
    GradedStatus dual_side;  // Ext^*(F, E w^(p+1)) (x) wedge^{n-p-1} H^*(w) (+) ...
    GradedStatus first, second;
    GradedStatus dims;       // dual(shift(dual_side, n))
    /// Set when both routes resolve exactly.
    std::optional<bool> consistent;
};

SerreDualTerm e1_term_serre_dual(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n, int p);

}  // namespace tautext
