#include "tautext/status.hpp"
#include "tautext/errors.hpp"

#include <stdexcept>

namespace tautext {

UnderdeterminedCohomology::UnderdeterminedCohomology(std::vector<std::string> keys)
    : std::runtime_error([&] {
          std::string msg = "underdetermined cohomology; provide h0 override for:";
          for (const auto& k : keys)
              msg += " [" + k + "]";
          return msg;
      }()),
      keys_(std::move(keys))
{
}

DimStatus DimStatus::exact(Integer v, std::string rule)
{
    if (v < 0)
        throw std::invalid_argument("dimension must be nonnegative");
    Integer hi = v;
    return DimStatus(std::move(v), std::move(hi), std::move(rule));
}

DimStatus DimStatus::interval(Integer lo, Integer hi, std::string rule)
{
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("interval bounds must satisfy 0 <= lo <= hi");
    return DimStatus(std::move(lo), std::move(hi), std::move(rule));
}

DimStatus DimStatus::at_least(Integer lo, std::string rule)
{
    if (lo < 0)
        lo = 0;
    return DimStatus(std::move(lo), std::nullopt, std::move(rule));
}

DimStatus DimStatus::unknown(std::string rule) { return DimStatus(0, std::nullopt, std::move(rule)); }

const Integer& DimStatus::value() const
{
    if (!is_exact())
        throw std::logic_error("DimStatus::value() on non-exact status " + render());
    return lo_;
}

std::string DimStatus::render() const
{
    if (is_exact())
        return lo_.str();
    if (!hi_)
        return lo_ == 0 ? std::string("?") : lo_.str() + "..";
    return lo_.str() + ".." + hi_->str();
}

DimStatus operator+(const DimStatus& a, const DimStatus& b)
{
    std::optional<Integer> hi;
    if (a.hi_ && b.hi_)
        hi = *a.hi_ + *b.hi_;
    return DimStatus(a.lo_ + b.lo_, std::move(hi), {});
}

DimStatus operator*(const DimStatus& a, const DimStatus& b)
{
    if (a.is_zero() || b.is_zero())
        return DimStatus::exact(0);
    std::optional<Integer> hi;
    if (a.hi_ && b.hi_)
        hi = *a.hi_ * *b.hi_;
    return DimStatus(a.lo_ * b.lo_, std::move(hi), {});
}

DimStatus difference(const DimStatus& a, const DimStatus& b)
{
    // a - b over all admissible pairs with a >= b.
    Integer lo = 0;
    if (b.hi_ && a.lo_ > *b.hi_)
        lo = a.lo_ - *b.hi_;
    if (!a.hi_)
        return DimStatus(lo, std::nullopt, {});
    Integer hi = *a.hi_ - b.lo_;
    if (hi < 0)
        hi = 0;
    if (lo > hi)
        lo = hi;
    return DimStatus(std::move(lo), std::move(hi), {});
}

GradedStatus::GradedStatus(const GradedDims& v)
{
    for (const auto& [deg, dim] : v.entries())
        dims_.emplace(deg, DimStatus::exact(dim));
}

DimStatus GradedStatus::at(Degree deg) const
{
    auto it = dims_.find(deg);
    return it == dims_.end() ? DimStatus::exact(0) : it->second;
}

void GradedStatus::set(Degree deg, DimStatus s)
{
    if (s.is_zero())
        dims_.erase(deg);
    else
        dims_[deg] = std::move(s);
}

bool GradedStatus::exact() const
{
    for (const auto& [deg, s] : dims_)
        if (!s.is_exact())
            return false;
    return true;
}

GradedDims GradedStatus::dims() const
{
    GradedDims v;
    for (const auto& [deg, s] : dims_)
        v.add(deg, s.value());
    return v;
}

std::string GradedStatus::str() const
{
    std::string out = "{";
    for (const auto& [deg, s] : dims_) {
        if (out.size() > 1)
            out += ", ";
        out += std::to_string(deg) + ":" + s.render();
    }
    return out + "}";
}

GradedStatus operator+(const GradedStatus& a, const GradedStatus& b)
{
    GradedStatus r = a;
    for (const auto& [deg, s] : b.dims_)
        r.set(deg, r.at(deg) + s);
    return r;
}

GradedStatus tensor(const GradedStatus& a, const GradedStatus& b)
{
    GradedStatus r;
    for (const auto& [i, x] : a.dims_)
        for (const auto& [j, y] : b.dims_)
            r.set(i + j, r.at(i + j) + x * y);
    return r;
}

GradedStatus shift(const GradedStatus& v, GradedStatus::Degree d)
{
    GradedStatus r;
    for (const auto& [deg, s] : v.dims_)
        r.dims_.emplace(deg - d, s);
    return r;
}

GradedStatus dual(const GradedStatus& v)
{
    GradedStatus r;
    for (const auto& [deg, s] : v.dims_)
        r.dims_.emplace(-deg, s);
    return r;
}

}  // namespace tautext
