#pragma once

#include "tautext/numeric.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace tautext {

/// Dimension vector of a finite graded vector space: degree -> dimension.
/// Zero entries are never stored, so == is mathematical equality.
class GradedDims {
public:
    using Degree = std::int64_t;
    using Map = std::map<Degree, Integer>;

    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const Degree, Integer>> init);
    explicit GradedDims(const Map& m);

    /// Single-degree space of the given dimension.
    static GradedDims concentrated(Degree deg, Integer dim);

    Integer operator[](Degree deg) const;
    void add(Degree deg, const Integer& dim);

    const Map& entries() const { return dims_; }
    bool empty() const { return dims_.empty(); }
    Integer total() const;
    Degree min_degree() const { return dims_.begin()->first; }
    Degree max_degree() const { return dims_.rbegin()->first; }

    friend bool operator==(const GradedDims& a, const GradedDims& b) { return a.dims_ == b.dims_; }

    /// "{-1:2, 0:3}"
    std::string str() const;

private:
    Map dims_;
};

GradedDims shift(const GradedDims& v, GradedDims::Degree d);
GradedDims dual(const GradedDims& v);
GradedDims direct_sum(const GradedDims& v, const GradedDims& w);
GradedDims tensor(const GradedDims& v, const GradedDims& w);
GradedDims sym_power(const GradedDims& v, int k);
GradedDims wedge_power(const GradedDims& v, int k);
Integer euler_char(const GradedDims& v);

}  // namespace tautext
