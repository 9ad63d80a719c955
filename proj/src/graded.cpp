#include "tautext/graded.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace tautext {

GradedDims::GradedDims(std::initializer_list<std::pair<const Degree, Integer>> init)
{
    for (const auto& [deg, dim] : init)
        add(deg, dim);
}

GradedDims::GradedDims(const Map& m)
{
    for (const auto& [deg, dim] : m)
        add(deg, dim);
}

GradedDims GradedDims::concentrated(Degree deg, Integer dim)
{
    GradedDims v;
    v.add(deg, dim);
    return v;
}

Integer GradedDims::operator[](Degree deg) const
{
    auto it = dims_.find(deg);
    return it == dims_.end() ? Integer(0) : it->second;
}

void GradedDims::add(Degree deg, const Integer& dim)
{
    if (dim == 0)
        return;
    Integer& slot = dims_[deg];
    slot += dim;
    if (slot < 0)
        throw std::invalid_argument("graded dimension became negative");
    if (slot == 0)
        dims_.erase(deg);
}

Integer GradedDims::total() const
{
    Integer t = 0;
    for (const auto& [deg, dim] : dims_)
        t += dim;
    return t;
}

std::string GradedDims::str() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [deg, dim] : dims_) {
        if (!first)
            os << ", ";
        first = false;
        os << deg << ':' << dim;
    }
    os << '}';
    return os.str();
}

GradedDims shift(const GradedDims& v, GradedDims::Degree d)
{
    GradedDims r;
    for (const auto& [deg, dim] : v.entries())
        r.add(deg - d, dim);
    return r;
}

GradedDims dual(const GradedDims& v)
{
    GradedDims r;
    for (const auto& [deg, dim] : v.entries())
        r.add(-deg, dim);
    return r;
}

GradedDims direct_sum(const GradedDims& v, const GradedDims& w)
{
    GradedDims r = v;
    for (const auto& [deg, dim] : w.entries())
        r.add(deg, dim);
    return r;
}

GradedDims tensor(const GradedDims& v, const GradedDims& w)
{
    GradedDims r;
    for (const auto& [i, a] : v.entries())
        for (const auto& [j, b] : w.entries())
            r.add(i + j, a * b);
    return r;
}

Integer euler_char(const GradedDims& v)
{
    Integer chi = 0;
    for (const auto& [deg, dim] : v.entries())
        chi += (deg % 2 == 0) ? dim : Integer(-dim);
    return chi;
}

namespace {

// Power series in t truncated at t^k, coefficients graded by q.
using Series = std::vector<GradedDims>;

Series multiply(const Series& a, const Series& b, int k)
{
    Series r(k + 1);
    for (int i = 0; i <= k; ++i) {
        if (a[i].empty())
            continue;
        for (int j = 0; i + j <= k; ++j)
            if (!b[j].empty())
                r[i + j] = direct_sum(r[i + j], tensor(a[i], b[j]));
    }
    return r;
}

// (1 - q^deg t)^(-m) when symmetric, (1 + q^deg t)^m otherwise.
Series factor(GradedDims::Degree deg, const Integer& m, bool symmetric, int k)
{
    Series f(k + 1);
    for (int j = 0; j <= k; ++j) {
        Integer c = symmetric ? binomial(m + j - 1, j) : binomial(m, j);
        if (j == 0)
            c = 1;
        f[j] = GradedDims::concentrated(deg * j, c);
    }
    return f;
}

GradedDims plethysm(const GradedDims& v, int k, bool sym)
{
    if (k < 0)
        throw std::invalid_argument("power must be nonnegative");
    Series acc(k + 1);
    acc[0] = GradedDims::concentrated(0, 1);
    for (const auto& [deg, dim] : v.entries()) {
        bool even = deg % 2 == 0;
        acc = multiply(acc, factor(deg, dim, even == sym, k), k);
    }
    return acc[k];
}

}  // namespace

GradedDims sym_power(const GradedDims& v, int k) { return plethysm(v, k, true); }

GradedDims wedge_power(const GradedDims& v, int k) { return plethysm(v, k, false); }

}  // namespace tautext
