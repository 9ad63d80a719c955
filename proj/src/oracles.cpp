#include "tautext/oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace tautext::oracle {

namespace {

// basis of V as a list of degrees, one entry per basis vector
std::vector<std::int64_t> basis_degrees(const GradedDims& v)
{
    std::vector<std::int64_t> out;
    for (const auto& [deg, dim] : v.entries())
        for (Integer i = 0; i < dim; ++i)
            out.push_back(deg);
    return out;
}

bool odd(std::int64_t d) { return d % 2 != 0; }

}  // namespace

GradedDims signed_power_bruteforce(const GradedDims& v, int k, bool wedge)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const auto degs = basis_degrees(v);
    const std::size_t m = degs.size();
    if (k == 0)
        return GradedDims{{0, 1}};
    if (m == 0)
        return {};

    // pure tensors v_{t_1} (x) ... (x) v_{t_k}, grouped by total degree
    std::map<std::int64_t, std::vector<std::vector<std::size_t>>> blocks;
    std::vector<std::size_t> t(k, 0);
    while (true) {
        std::int64_t total = 0;
        for (auto i : t)
            total += degs[i];
        blocks[total].push_back(t);
        int pos = k - 1;
        while (pos >= 0 && t[pos] == m - 1)
            t[pos--] = 0;
        if (pos < 0)
            break;
        ++t[pos];
    }

    GradedDims out;
    for (auto& [total, tuples] : blocks) {
        std::sort(tuples.begin(), tuples.end());
        auto shared = std::make_shared<std::vector<std::vector<std::size_t>>>(tuples);
        SignedPermutationAction a;
        a.dimension = tuples.size();
        a.act = [shared, &degs, wedge](const std::vector<int>& perm, std::size_t b) {
            const auto& src = (*shared)[b];
            const std::size_t len = src.size();
            std::vector<std::size_t> dst(len);
            int sign = 1;
            for (std::size_t i = 0; i < len; ++i) {
                dst[perm[i]] = src[i];
                for (std::size_t j = i + 1; j < len; ++j)
                    if (perm[i] > perm[j]) {
                        if (odd(degs[src[i]]) && odd(degs[src[j]]))
                            sign = -sign;
                        if (wedge)
                            sign = -sign;
                    }
            }
            auto it = std::lower_bound(shared->begin(), shared->end(), dst);
            return std::pair<std::size_t, int>(std::size_t(it - shared->begin()), sign);
        };
        out.add(total, Integer(invariants_dim_bruteforce(k, a, ~std::size_t(0))));
    }
    return out;
}

std::vector<GradedDims> small_graded_spaces(std::int64_t lo, std::int64_t hi, int max_dim)
{
    std::vector<GradedDims> out;
    std::vector<int> dims(hi - lo + 1, 0);
    auto rec = [&](auto& self, std::size_t slot, int left) -> void {
        if (slot == dims.size()) {
            GradedDims v;
            for (std::size_t i = 0; i < dims.size(); ++i)
                v.add(lo + std::int64_t(i), dims[i]);
            out.push_back(v);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            dims[slot] = c;
            self(self, slot + 1, left - c);
        }
        dims[slot] = 0;
    };
    rec(rec, 0, max_dim);
    return out;
}

Orbits orbits_bruteforce(int n, const IndexFamily& family)
{
    auto a = family_action(n, family);
    std::vector<int> orbit_of(a.dimension, -1);
    Orbits o;
    for (std::size_t b = 0; b < a.dimension; ++b) {
        if (orbit_of[b] >= 0)
            continue;
        const int id = int(o.sizes.size());
        std::size_t size = 0, stab = 0;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            auto image = a.act(perm, b).first;
            if (image == b)
                ++stab;
            if (orbit_of[image] < 0) {
                orbit_of[image] = id;
                ++size;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        o.sizes.push_back(size);
        o.stabilizers.push_back(stab);
    }
    return o;
}

SignedPermutationAction regular_representation(int n)
{
    auto elems = std::make_shared<std::vector<std::vector<int>>>();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do
        elems->push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    SignedPermutationAction a;
    a.dimension = elems->size();
    a.act = [elems](const std::vector<int>& g, std::size_t b) {
        const auto& h = (*elems)[b];
        std::vector<int> gh(h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            gh[i] = g[h[i]];
        auto it = std::lower_bound(elems->begin(), elems->end(), gh);
        return std::pair<std::size_t, int>(std::size_t(it - elems->begin()), 1);
    };
    return a;
}

SignedPermutationAction sign_representation()
{
    SignedPermutationAction a;
    a.dimension = 1;
    a.act = [](const std::vector<int>& g, std::size_t) {
        int sign = 1;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (g[i] > g[j])
                    sign = -sign;
        return std::pair<std::size_t, int>(0, sign);
    };
    return a;
}

std::int64_t line_h0(int g, std::int64_t d, std::optional<std::int64_t> special)
{
    if (special)
        return *special;
    if (d < 0)
        return 0;
    if (d > 2 * g - 2)
        return d + 1 - g;
    throw std::invalid_argument("line_h0: h0 not forced in degree " + std::to_string(d));
}

std::int64_t ext1_line(int g, std::int64_t d, std::int64_t h0_l, std::int64_t h0_ldual, int n,
                       std::int64_t w, std::int64_t k02)
{
    const std::int64_t h1_l = h0_l - (d + 1 - g);
    const std::int64_t h1_ldual = h0_ldual - (-d + 1 - g);
    std::int64_t total = g;  // Ext^1(L, L) = H^1(O)
    if (n == 1)
        return total;
    total += g;
    if (d >= 0) {
        total += h0_l * h1_ldual + w;
        if (n >= 3)
            total += h0_l * k02;
    } else {
        total += h1_l * h0_ldual + w;
    }
    return total;
}

}  // namespace tautext::oracle
