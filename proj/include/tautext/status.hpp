#pragma once

#include "tautext/graded.hpp"
#include "tautext/numeric.hpp"

#include <map>
#include <optional>
#include <string>

namespace tautext {

/// A nonnegative integer known exactly, up to an interval, or only from below.
///
/// The value is the closed range [lo, hi]; an absent `hi` means unbounded. The
/// fully unknown value is [0, inf). Arithmetic is interval arithmetic on
/// nonnegative ranges, so an exact zero factor always annihilates.
class DimStatus {
public:
    DimStatus() = default;

    static DimStatus exact(Integer v, std::string rule = {});
    static DimStatus interval(Integer lo, Integer hi, std::string rule = {});
    static DimStatus at_least(Integer lo, std::string rule = {});
    static DimStatus unknown(std::string rule = {});

    bool is_exact() const { return hi_ && *hi_ == lo_; }
    bool is_unknown() const { return !hi_ && lo_ == 0; }
    bool is_zero() const { return is_exact() && lo_ == 0; }
    const Integer& lo() const { return lo_; }
    const std::optional<Integer>& hi() const { return hi_; }
    /// Exact value; throws std::logic_error when not exact.
    const Integer& value() const;

    const std::string& rule() const { return rule_; }
    DimStatus& with_rule(std::string rule)
    {
        rule_ = std::move(rule);
        return *this;
    }

    bool contains(const Integer& v) const { return v >= lo_ && (!hi_ || v <= *hi_); }

    /// "5", "1..3", "2.." or "?".
    std::string render() const;

    friend DimStatus operator+(const DimStatus& a, const DimStatus& b);
    friend DimStatus operator*(const DimStatus& a, const DimStatus& b);
    DimStatus& operator+=(const DimStatus& o) { return *this = *this + o; }

    /// Range of a - b given that the true values satisfy a >= b (kernels, cokernels).
    friend DimStatus difference(const DimStatus& a, const DimStatus& b);

    bool same_range(const DimStatus& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    DimStatus(Integer lo, std::optional<Integer> hi, std::string rule)
        : lo_(std::move(lo)), hi_(std::move(hi)), rule_(std::move(rule))
    {
    }

    Integer lo_ = 0;
    std::optional<Integer> hi_;
    std::string rule_;
};

/// Graded space whose dimensions are DimStatus values; absent degrees are exact zeros.
class GradedStatus {
public:
    using Degree = GradedDims::Degree;

    GradedStatus() = default;
    GradedStatus(const GradedDims& v);

    DimStatus at(Degree deg) const;
    void set(Degree deg, DimStatus s);
    const std::map<Degree, DimStatus>& entries() const { return dims_; }

    bool exact() const;
    /// Throws std::logic_error when some degree is not exact.
    GradedDims dims() const;
    std::string str() const;

    friend GradedStatus operator+(const GradedStatus& a, const GradedStatus& b);
    friend GradedStatus tensor(const GradedStatus& a, const GradedStatus& b);
    friend GradedStatus shift(const GradedStatus& v, Degree d);
    friend GradedStatus dual(const GradedStatus& v);

private:
    std::map<Degree, DimStatus> dims_;
};

}  // namespace tautext
