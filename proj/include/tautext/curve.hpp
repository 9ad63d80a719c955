#pragma once

#include "tautext/graded.hpp"
#include "tautext/status.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace tautext {

struct CurveSpec {
    int genus = 0;
    /// Only meaningful for genus >= 2; genus 2 curves must carry `true`.
    bool hyperelliptic = false;

    void validate() const;
    bool is_hyperelliptic() const { return genus == 2 || (genus >= 3 && hyperelliptic); }
    std::int64_t canonical_degree() const { return 2 * std::int64_t(genus) - 2; }
};

/// Numeric stand-in for a vector bundle `name (x) w^omega_twist`.
///
/// Unless `is_trivial` or `canonical_power` says otherwise, the bundle is
/// taken to be isomorphic neither to O nor to any power of the canonical
/// bundle. Bundles with different names are unrelated. `degree` and
/// `h0_override` refer to the twisted bundle.
struct BundleSpec {
    std::string name = "E";
    int rank = 1;
    std::int64_t degree = 0;
    std::optional<Integer> h0_override;
    bool stable = true;
    bool is_trivial = false;
    std::optional<std::int64_t> canonical_power;
    std::int64_t omega_twist = 0;

    static BundleSpec trivial();
    static BundleSpec canonical(const CurveSpec& x, std::int64_t p = 1);
    static BundleSpec line(std::int64_t degree, std::optional<Integer> h0 = std::nullopt, std::string name = "E");

    Rational slope() const { return Rational(degree) / rank; }
    Integer riemann_roch(const CurveSpec& x) const { return Integer(degree) + Integer(rank) * (1 - x.genus); }
    void validate(const CurveSpec& x) const;
};

/// Extra h0 values keyed by the bundle expression they describe, e.g. "E",
/// "E^v x w", "E^v x F x w^-1", "w^2", "O".
using Overrides = std::map<std::string, Integer>;

/// Tensor product of base bundles (each possibly dualized) and a power of the
/// canonical bundle. Trivial and canonical-power bases are absorbed into the
/// twist on construction.
class BundleExpr {
public:
    struct Factor {
        std::string name;
        int rank = 1;
        std::int64_t degree = 0;  // untwisted base
        bool stable = true;
        bool dual = false;

        auto order_key() const { return std::tie(name, dual); }
    };

    BundleExpr() = default;
    BundleExpr(const CurveSpec& x, const BundleSpec& e);
    static BundleExpr omega(std::int64_t k);

    BundleExpr dual() const;
    BundleExpr twist(std::int64_t k) const;
    friend BundleExpr operator*(const BundleExpr& a, const BundleExpr& b);

    const std::vector<Factor>& factors() const { return factors_; }
    std::int64_t omega_power() const { return omega_; }
    Integer rank() const;
    Integer degree(const CurveSpec& x) const;
    Integer euler_char(const CurveSpec& x) const { return degree(x) + rank() * (1 - x.genus); }

    /// Canonical override key. On genus 1 the canonical twist is dropped.
    std::string key(const CurveSpec& x) const;

    /// h0 values attached to the specs this expression was built from.
    const std::map<std::string, Integer>& carried_overrides() const { return carried_; }

private:
    void normalize();

    std::vector<Factor> factors_;
    std::int64_t omega_ = 0;
    std::map<std::string, Integer> carried_;
};

/// h0/h1 of a bundle expression. Unresolved values carry the lower bounds
/// forced by Riemann-Roch.
struct Cohomology {
    DimStatus h0, h1;
    Integer chi;
    std::string key;
    std::string rule;

    bool exact() const { return h0.is_exact(); }
    GradedDims dims() const;
};

class CurveModel {
public:
    explicit CurveModel(CurveSpec x, Overrides overrides = {});

    const CurveSpec& curve() const { return x_; }
    const Overrides& overrides() const { return overrides_; }

    Cohomology cohomology(const BundleExpr& e) const;
    /// As `cohomology` but throws UnderdeterminedCohomology when unresolved.
    GradedDims dims(const BundleExpr& e) const;

    DimStatus h0(const BundleExpr& e) const { return cohomology(e).h0; }
    DimStatus h1(const BundleExpr& e) const { return cohomology(e).h1; }

private:
    std::optional<Integer> lookup(const BundleExpr& e) const;
    std::optional<Cohomology> by_rule(const BundleExpr& e) const;

    CurveSpec x_;
    Overrides overrides_;
};

GradedDims bundle_cohomology(const CurveSpec& x, const BundleSpec& e, const Overrides& overrides = {});
BundleSpec twist_by_canonical(const CurveSpec& x, const BundleSpec& e, std::int64_t p);
/// Ext^*(E, F) = H^*(E^v (x) F).
GradedDims hom_ext(const CurveSpec& x, const BundleSpec& e, const BundleSpec& f, const Overrides& overrides = {});

/// dim K_{0,2}(F, w): cokernel of H0(F w) (x) H0(w) -> H0(F w^2).
DimStatus koszul_k02(const CurveSpec& x, const BundleSpec& f, const Overrides& overrides = {});
/// dim W_E: cokernel of Hom(E,w) (x) H0(E w) -> K_{0,2}(End E, w).
DimStatus w_space(const CurveSpec& x, const BundleSpec& e, const Overrides& overrides = {});

}  // namespace tautext
