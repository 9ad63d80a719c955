#pragma once

#include "tautext/complex.hpp"
#include "tautext/curve.hpp"
#include "tautext/status.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tautext {

/// One fact about the page: a dimension of E^1, E^2 or E^infinity at (p, q),
/// or the rank of d^1 leaving (p, q).
struct PageFact {
    enum class Kind { e1, e2, e_infinity, d1_rank };
    Kind kind;
    std::int64_t p = 0, q = 0;
    DimStatus value;
    std::string rule;

    std::string label() const;
};

struct HypothesisNote {
    std::string hypothesis;
    std::string how;  // "checked", "asserted flag", "cited", "failed"
};

struct E1Page {
    int n = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, DimStatus> entries;
    std::vector<E1Term> columns;  // columns[p] feeds E^1_{-p, *}
    std::vector<PageFact> facts;
    std::vector<HypothesisNote> trail;

    DimStatus at(std::int64_t p, std::int64_t q) const;
    std::optional<DimStatus> fact(PageFact::Kind kind, std::int64_t p, std::int64_t q) const;
    /// sum (-1)^(p+q) dim E^1_{p,q}; empty when some entry is not exact.
    std::optional<Integer> euler_char() const;
};

E1Page build_e1_page(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n);

/// Differential and limit facts for E = F; throws HypothesisViolation when no
/// lemma applies.
std::vector<PageFact> rank_rules(const CurveModel& m, const BundleSpec& e, int n, std::vector<HypothesisNote>* trail = nullptr);

DimStatus hom_taut(const CurveModel& m, const BundleSpec& e, int n, std::vector<HypothesisNote>* trail = nullptr);

struct ExtReport {
    DimStatus hom_dim;
    DimStatus ext1_dim;
    std::vector<std::pair<std::string, DimStatus>> ext1_summands;
    std::optional<Integer> euler_char;
    std::vector<HypothesisNote> trail;
};

ExtReport ext1_taut(const CurveModel& m, const BundleSpec& e, int n);

/// Euler characteristic of Ext^*(E^[n], F^[n]) from the E^1 page; throws
/// UnderdeterminedCohomology when an entry does not resolve.
Integer euler_char_taut(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n);

struct ClassificationVerdict {
    enum class Verdict { smooth, singular, undetermined };
    Verdict verdict = Verdict::undetermined;
    std::string criterion;
    std::string witness;  // both sides evaluated, e.g. "7 > 6"
    std::optional<Integer> threshold;
    std::vector<HypothesisNote> trail;

    std::string verdict_name() const;
};

ClassificationVerdict classify_point(const CurveModel& m, const BundleSpec& e, int n);

/// H^*(wedge^k L^[n]) = wedge^k H^*(L) (x) S^{n-k} H^*(O).
GradedDims wedge_taut_cohomology(const CurveModel& m, const BundleSpec& l, int n, int k);

}  // namespace tautext
