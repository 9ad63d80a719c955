#pragma once

#include "tautext/complex.hpp"
#include "tautext/graded.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tautext::oracle {

/// Graded dimensions of the invariants (anti-invariants when `wedge`) of the
/// Koszul-signed S_k action on V^(x)k, from an explicit basis and a rank over Q.
GradedDims signed_power_bruteforce(const GradedDims& v, int k, bool wedge);

/// Every graded space with support in [lo, hi] and total dimension <= max_dim.
std::vector<GradedDims> small_graded_spaces(std::int64_t lo, std::int64_t hi, int max_dim);

struct Orbits {
    std::vector<std::size_t> sizes;         // in order of smallest basis index
    std::vector<std::size_t> stabilizers;
};

/// Orbits of S_n on the index set of `family`, by walking the whole group.
Orbits orbits_bruteforce(int n, const IndexFamily& family);

/// Left-regular and sign representations of S_n, for sanity checks of the
/// invariants routine.
SignedPermutationAction regular_representation(int n);
SignedPermutationAction sign_representation();

/// h0 of a line bundle of degree d on a curve of genus g, where it is forced;
/// `special` supplies it otherwise.
std::int64_t line_h0(int g, std::int64_t d, std::optional<std::int64_t> special = std::nullopt);

/// Ext^1 of L^[n] for a line bundle L != O, w^p, summed term by term with
/// plain Riemann-Roch; `w` and `k02` are the cokernel dimensions fed in.
std::int64_t ext1_line(int g, std::int64_t d, std::int64_t h0_l, std::int64_t h0_ldual, int n,
                       std::int64_t w, std::int64_t k02);

}  // namespace tautext::oracle
