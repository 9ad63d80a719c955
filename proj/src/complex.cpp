#include "tautext/complex.hpp"
#include "tautext/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace tautext {

std::vector<Subset> subsets(int n, int k)
{
    std::vector<Subset> out;
    if (k < 0 || k > n)
        return out;
    Subset s(k);
    std::iota(s.begin(), s.end(), 1);
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
    return out;
}

SignedComplex build_signed_complex(int n, int bound)
{
    if (n < 1)
        throw std::invalid_argument("build_signed_complex: n must be positive");
    if (n > bound)
        throw BoundExceeded("complex size n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));

    SignedComplex c;
    c.n = n;
    for (int p = 0; p < n; ++p)
        c.terms.push_back(subsets(n, p + 1));

    for (int p = 0; p + 1 < n; ++p) {
        const auto& src = c.terms[p];
        const auto& dst = c.terms[p + 1];
        std::map<Subset, std::size_t> col;
        for (std::size_t j = 0; j < src.size(); ++j)
            col.emplace(src[j], j);
        RationalMatrix d(dst.size(), src.size());
        for (std::size_t r = 0; r < dst.size(); ++r) {
            const Subset& I = dst[r];
            for (std::size_t pos = 0; pos < I.size(); ++pos) {
                Subset J = I;
                J.erase(J.begin() + pos);
                // pos = #{j in I : j < i}
                d(r, col.at(J)) = pos % 2 == 0 ? 1 : -1;
            }
        }
        c.differentials.push_back(std::move(d));
    }

    for (std::size_t p = 0; p + 1 < c.differentials.size(); ++p)
        if (!(c.differentials[p + 1] * c.differentials[p]).is_zero())
            throw std::logic_error("d^" + std::to_string(p + 1) + " o d^" + std::to_string(p) + " != 0");
    return c;
}

IndexFamily IndexFamily::parse(const std::string& descriptor)
{
    IndexFamily f;
    auto colon = descriptor.find(':');
    std::string head = descriptor.substr(0, colon);
    if (head == "singletons" && colon == std::string::npos) {
        f.kind = Kind::singletons;
        return f;
    }
    if ((head == "pairs" || head == "subsets") && colon != std::string::npos) {
        f.kind = head == "pairs" ? Kind::pairs : Kind::subsets;
        try {
            std::size_t used = 0;
            f.param = std::stoi(descriptor.substr(colon + 1), &used);
            if (used != descriptor.size() - colon - 1)
                throw UnknownFamily(descriptor);
        } catch (const std::logic_error&) {
            throw UnknownFamily("unknown index family descriptor '" + descriptor + "'");
        }
        return f;
    }
    throw UnknownFamily("unknown index family descriptor '" + descriptor + "'");
}

std::string IndexFamily::str() const
{
    switch (kind) {
    case Kind::pairs:
        return "pairs:" + std::to_string(param);
    case Kind::subsets:
        return "subsets:" + std::to_string(param);
    default:
        return "singletons";
    }
}

namespace {

std::string render_range(int lo, int hi)
{
    std::string s = "{";
    for (int i = lo; i <= hi; ++i) {
        if (i > lo)
            s += ",";
        s += std::to_string(i);
    }
    return s + "}";
}

void check_family(int n, const IndexFamily& f)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (f.kind == IndexFamily::Kind::pairs && (f.param < 0 || f.param > n - 1))
        throw std::invalid_argument("pairs family needs 0 <= p <= n-1");
    if (f.kind == IndexFamily::Kind::subsets && (f.param < 0 || f.param > n))
        throw std::invalid_argument("subsets family needs 0 <= k <= n");
}

}  // namespace

OrbitDecomposition orbit_decompose(int n, const IndexFamily& family)
{
    check_family(n, family);
    OrbitDecomposition o;
    const Integer nfact = factorial(n);
    auto push = [&](std::string rep, Integer stab) {
        o.representatives.push_back(std::move(rep));
        o.orbit_sizes.push_back(nfact / stab);
        o.stabilizer_orders.push_back(std::move(stab));
    };
    switch (family.kind) {
    case IndexFamily::Kind::pairs: {
        const int p = family.param;
        push("(1," + render_range(1, p + 1) + ")", factorial(p) * factorial(n - p - 1));
        if (p <= n - 2)
            push("(1," + render_range(2, p + 2) + ")", factorial(p + 1) * factorial(n - p - 2));
        break;
    }
    case IndexFamily::Kind::singletons:
        push("1", factorial(n - 1));
        break;
    case IndexFamily::Kind::subsets:
        push(render_range(1, family.param), factorial(family.param) * factorial(n - family.param));
        break;
    }
    return o;
}

OrbitDecomposition orbit_decompose(int n, const std::string& descriptor)
{
    return orbit_decompose(n, IndexFamily::parse(descriptor));
}

SignedPermutationAction family_action(int n, const IndexFamily& family)
{
    check_family(n, family);
    // element = (i, I); i = 0 when absent
    using Element = std::pair<int, Subset>;
    std::vector<Element> elems;
    switch (family.kind) {
    case IndexFamily::Kind::pairs:
        for (int i = 1; i <= n; ++i)
            for (auto& I : subsets(n, family.param + 1))
                elems.emplace_back(i, I);
        break;
    case IndexFamily::Kind::singletons:
        for (int i = 1; i <= n; ++i)
            elems.emplace_back(i, Subset{});
        break;
    case IndexFamily::Kind::subsets:
        for (auto& I : subsets(n, family.param))
            elems.emplace_back(0, I);
        break;
    }
    auto index = std::make_shared<std::map<Element, std::size_t>>();
    for (std::size_t k = 0; k < elems.size(); ++k)
        index->emplace(elems[k], k);
    auto table = std::make_shared<std::vector<Element>>(std::move(elems));

    SignedPermutationAction a;
    a.dimension = table->size();
    a.act = [index, table](const std::vector<int>& perm, std::size_t b) {
        const auto& [i, I] = (*table)[b];
        Subset J;
        for (int x : I)
            J.push_back(perm[x - 1] + 1);
        std::sort(J.begin(), J.end());
        int gi = i == 0 ? 0 : perm[i - 1] + 1;
        return std::pair<std::size_t, int>(index->at({gi, J}), 1);
    };
    return a;
}

std::size_t invariants_dim_bruteforce(int n, const SignedPermutationAction& rep, std::size_t bound)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    Integer work = factorial(n) * rep.dimension;
    if (work > bound)
        throw BoundExceeded("brute-force invariants: n! * dim = " + work.str() + " exceeds bound " +
                            std::to_string(bound));
    std::vector<SparseRow> rows(rep.dimension);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::size_t b = 0; b < rep.dimension; ++b) {
            auto [image, sign] = rep.act(perm, b);
            Rational& slot = rows[b][image];
            slot += sign;
            if (slot == 0)
                rows[b].erase(image);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rank(std::move(rows));
}

namespace {

GradedStatus cohomology_status(const CurveModel& m, const BundleExpr& e, std::vector<std::string>* unresolved = nullptr)
{
    Cohomology c = m.cohomology(e);
    if (unresolved && !c.exact() &&
        std::find(unresolved->begin(), unresolved->end(), c.key) == unresolved->end())
        unresolved->push_back(c.key);
    GradedStatus s;
    s.set(0, c.h0);
    s.set(1, c.h1);
    return s;
}

void check_range(int n, int p)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (p < 0 || p > n - 1)
        throw std::invalid_argument("column p must satisfy 0 <= p <= n-1");
}

}  // namespace

E1Term e1_term(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n, int p)
{
    check_range(n, p);
    const auto& x = m.curve();
    e.validate(x);
    f.validate(x);
    const BundleExpr E(x, e), F(x, f);
    const GradedDims ho{{0, 1}, {1, x.genus}};

    E1Term t;
    t.p = p;
    auto* u = &t.unresolved;
    t.first = shift(tensor(cohomology_status(m, E.dual() * F.twist(-p), u), GradedStatus(sym_power(ho, n - p - 1))), -p);
    if (p <= n - 2) {
        GradedStatus inner = tensor(cohomology_status(m, E.dual().twist(-p), u), cohomology_status(m, F, u));
        t.second = shift(tensor(inner, GradedStatus(sym_power(ho, n - p - 2))), -p);
    }
    t.dims = t.first + t.second;
    return t;
}

SerreDualTerm e1_term_serre_dual(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n, int p)
{
    check_range(n, p);
    const auto& x = m.curve();
    e.validate(x);
    f.validate(x);
    const BundleExpr E(x, e), F(x, f);
    const GradedDims hw{{0, x.genus}, {1, 1}};

    SerreDualTerm t;
    t.p = p;
    t.first = tensor(cohomology_status(m, F.dual() * E.twist(p + 1)), GradedStatus(wedge_power(hw, n - p - 1)));
    if (p <= n - 2) {
        GradedStatus inner = tensor(cohomology_status(m, F.dual().twist(1)), cohomology_status(m, E.twist(p + 1)));
        t.second = tensor(inner, GradedStatus(wedge_power(hw, n - p - 2)));
    }
    t.dual_side = t.first + t.second;
    t.dims = dual(shift(t.dual_side, n));

    E1Term direct = e1_term(m, e, f, n, p);
    if (direct.exact() && t.dims.exact())
        t.consistent = direct.dims.dims() == t.dims.dims();
    return t;
}

}  // namespace tautext
