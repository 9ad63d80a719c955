#include "tautext/curve.hpp"
#include "tautext/errors.hpp"
#include "tautext/hyperelliptic.hpp"

#include <algorithm>

namespace tautext {

void CurveSpec::validate() const
{
    if (genus < 0)
        throw InvalidSpec("genus must be nonnegative, got " + std::to_string(genus));
    if (genus == 2 && !hyperelliptic)
        throw InvalidSpec("every genus-2 curve is hyperelliptic");
}

BundleSpec BundleSpec::trivial()
{
    BundleSpec o;
    o.name = "O";
    o.is_trivial = true;
    return o;
}

BundleSpec BundleSpec::canonical(const CurveSpec& x, std::int64_t p)
{
    if (p == 0)
        return trivial();
    BundleSpec w;
    w.name = "w";
    w.degree = p * x.canonical_degree();
    w.canonical_power = p;
    return w;
}

BundleSpec BundleSpec::line(std::int64_t degree, std::optional<Integer> h0, std::string name)
{
    BundleSpec l;
    l.name = std::move(name);
    l.degree = degree;
    l.h0_override = std::move(h0);
    return l;
}

void BundleSpec::validate(const CurveSpec& x) const
{
    if (rank < 1)
        throw InvalidSpec("rank must be positive");
    if (name.empty())
        throw InvalidSpec("bundle name must be nonempty");
    if (is_trivial && (rank != 1 || degree != 0))
        throw InvalidSpec("trivial bundle must have rank 1 and degree 0");
    if (canonical_power && (rank != 1 || degree != *canonical_power * x.canonical_degree()))
        throw InvalidSpec("canonical power w^" + std::to_string(*canonical_power) + " must have rank 1 and degree " +
                          std::to_string(*canonical_power * x.canonical_degree()));
    if (h0_override) {
        if (*h0_override < 0)
            throw InvalidOverride("h0 override must be nonnegative");
        Integer h1 = *h0_override - riemann_roch(x);
        if (h1 < 0)
            throw InvalidOverride("h0 override " + h0_override->str() + " for " + name + " gives h1 = " + h1.str() +
                                  " < 0");
    }
}

BundleExpr::BundleExpr(const CurveSpec& x, const BundleSpec& e)
{
    if (e.is_trivial) {
        omega_ = 0;
    } else if (e.canonical_power) {
        omega_ = *e.canonical_power;
    } else {
        Factor f;
        f.name = e.name;
        f.rank = e.rank;
        f.degree = e.degree - e.omega_twist * e.rank * x.canonical_degree();
        f.stable = e.stable || e.rank == 1;
        factors_.push_back(std::move(f));
        omega_ = e.omega_twist;
    }
    if (e.h0_override)
        carried_.emplace(key(x), *e.h0_override);
}

BundleExpr BundleExpr::omega(std::int64_t k)
{
    BundleExpr r;
    r.omega_ = k;
    return r;
}

void BundleExpr::normalize()
{
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.order_key() < b.order_key(); });
}

BundleExpr BundleExpr::dual() const
{
    BundleExpr r = *this;
    for (auto& f : r.factors_)
        f.dual = !f.dual;
    r.omega_ = -omega_;
    r.normalize();
    return r;
}

BundleExpr BundleExpr::twist(std::int64_t k) const
{
    BundleExpr r = *this;
    r.omega_ += k;
    return r;
}

BundleExpr operator*(const BundleExpr& a, const BundleExpr& b)
{
    BundleExpr r = a;
    r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
    r.omega_ += b.omega_;
    for (const auto& [k, v] : b.carried_) {
        auto [it, fresh] = r.carried_.emplace(k, v);
        if (!fresh && it->second != v)
            throw InvalidOverride("conflicting h0 values attached to " + k);
    }
    r.normalize();
    return r;
}

Integer BundleExpr::rank() const
{
    Integer r = 1;
    for (const auto& f : factors_)
        r *= f.rank;
    return r;
}

Integer BundleExpr::degree(const CurveSpec& x) const
{
    Integer total_rank = rank();
    Integer d = total_rank * omega_ * x.canonical_degree();
    for (const auto& f : factors_) {
        Integer share = total_rank / f.rank;
        d += (f.dual ? -Integer(f.degree) : Integer(f.degree)) * share;
    }
    return d;
}

std::string BundleExpr::key(const CurveSpec& x) const
{
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty())
            s += " x ";
        s += f.name;
        if (f.dual)
            s += "^v";
    }
    std::int64_t k = x.genus == 1 ? 0 : omega_;
    if (k != 0) {
        if (!s.empty())
            s += " x ";
        s += k == 1 ? std::string("w") : "w^" + std::to_string(k);
    }
    return s.empty() ? std::string("O") : s;
}

GradedDims Cohomology::dims() const
{
    if (!exact())
        throw UnderdeterminedCohomology({key});
    return GradedDims{{0, h0.value()}, {1, h1.value()}};
}

CurveModel::CurveModel(CurveSpec x, Overrides overrides) : x_(x), overrides_(std::move(overrides))
{
    x_.validate();
    for (const auto& [k, v] : overrides_)
        if (v < 0)
            throw InvalidOverride("override for [" + k + "] must be nonnegative");
}

namespace {

std::optional<Integer> direct_override(const std::string& key, const Overrides& table,
                                       const std::map<std::string, Integer>& carried)
{
    std::optional<Integer> v;
    if (auto it = table.find(key); it != table.end())
        v = it->second;
    if (auto it = carried.find(key); it != carried.end()) {
        if (v && *v != it->second)
            throw InvalidOverride("conflicting h0 overrides for [" + key + "]: " + v->str() + " and " +
                                  it->second.str());
        v = it->second;
    }
    return v;
}

Cohomology resolved(Integer h0, const Integer& chi, std::string key, std::string rule)
{
    Cohomology c;
    c.h1 = DimStatus::exact(h0 - chi, rule);
    c.h0 = DimStatus::exact(std::move(h0), rule);
    c.chi = chi;
    c.key = std::move(key);
    c.rule = std::move(rule);
    return c;
}

std::optional<Integer> canonical_power_h0(int g, std::int64_t k)
{
    if (g == 0)
        return Integer(std::max<std::int64_t>(0, 1 - 2 * k));
    if (g == 1)
        return Integer(1);
    if (k < 0)
        return Integer(0);
    if (k == 0)
        return Integer(1);
    if (k == 1)
        return Integer(g);
    return Integer(2 * k - 1) * (g - 1);
}

}  // namespace

std::optional<Integer> CurveModel::lookup(const BundleExpr& e) const
{
    const std::string key = e.key(x_);
    std::optional<Integer> v = direct_override(key, overrides_, e.carried_overrides());

    // h0(X) = h1(X^v w) = h0(X^v w) + chi(X)
    BundleExpr partner = e.dual().twist(1);
    const std::string pkey = partner.key(x_);
    if (pkey != key) {
        if (auto pv = direct_override(pkey, overrides_, e.carried_overrides())) {
            Integer derived = *pv + e.euler_char(x_);
            if (v && *v != derived)
                throw InvalidOverride("override for [" + key + "] = " + v->str() + " contradicts [" + pkey +
                                      "] = " + pv->str() + " under Serre duality");
            v = derived;
        }
    }
    if (v) {
        Integer h1 = *v - e.euler_char(x_);
        if (*v < 0 || h1 < 0)
            throw InvalidOverride("override makes h0([" + key + "]) = " + v->str() + ", h1 = " + h1.str() +
                                  " which is negative");
    }
    return v;
}

std::optional<Cohomology> CurveModel::by_rule(const BundleExpr& e) const
{
    const int g = x_.genus;
    const std::int64_t k = g == 1 ? 0 : e.omega_power();
    const Integer chi = e.euler_char(x_);
    const std::string key = e.key(x_);
    const auto& fs = e.factors();

    if (fs.empty()) {
        auto h0 = canonical_power_h0(g, k);
        return resolved(*h0, chi, key, "canonical-power");
    }

    bool all_stable = std::all_of(fs.begin(), fs.end(), [](const auto& f) { return f.stable; });
    if (!all_stable)
        return std::nullopt;

    const Integer r = e.rank();
    const Integer d = e.degree(x_);
    const Integer top = r * x_.canonical_degree();

    if (fs.size() == 1) {
        if (d < 0 || (d == 0 && g >= 1))
            return resolved(0, chi, key, "stable-slope");
        if (d >= top)
            return resolved(chi, chi, key, "stable-slope");
        if (g == 0 && r == 1)
            return resolved(std::max(Integer(0), Integer(d + 1)), chi, key, "genus-zero");
        return std::nullopt;
    }

    if (fs.size() == 2 && fs[0].name == fs[1].name && fs[0].dual != fs[1].dual) {
        if (fs[0].rank == 1) {
            auto h0 = canonical_power_h0(g, k);
            return resolved(*h0, chi, key, "canonical-power");
        }
        if (g == 1)
            return resolved(1, chi, key, "simple-endomorphisms");
        if (g >= 2) {
            if (k < 0)
                return resolved(0, chi, key, "simple-endomorphisms");
            if (k == 0)
                return resolved(1, chi, key, "simple-endomorphisms");
            if (k == 1)
                return resolved(chi + 1, chi, key, "simple-endomorphisms");
            return resolved(chi, chi, key, "simple-endomorphisms");
        }
    }

    if (d < 0)
        return resolved(0, chi, key, "semistable-slope");
    if (d > top)
        return resolved(chi, chi, key, "semistable-slope");
    return std::nullopt;
}

Cohomology CurveModel::cohomology(const BundleExpr& e) const
{
    auto rule = by_rule(e);
    auto ov = lookup(e);
    const std::string key = e.key(x_);
    if (ov) {
        if (rule && rule->h0.value() != *ov)
            throw InvalidOverride("override h0([" + key + "]) = " + ov->str() + " contradicts rule " + rule->rule +
                                  " which forces " + rule->h0.value().str());
        return resolved(*ov, e.euler_char(x_), key, "override");
    }
    if (rule)
        return *rule;
    Cohomology c;
    c.chi = e.euler_char(x_);
    c.h0 = DimStatus::at_least(c.chi, "riemann-roch-bound");
    c.h1 = DimStatus::at_least(-c.chi, "riemann-roch-bound");
    c.key = key;
    c.rule = "unresolved";
    return c;
}

GradedDims CurveModel::dims(const BundleExpr& e) const { return cohomology(e).dims(); }

GradedDims bundle_cohomology(const CurveSpec& x, const BundleSpec& e, const Overrides& overrides)
{
    e.validate(x);
    CurveModel m(x, overrides);
    return m.dims(BundleExpr(x, e));
}

BundleSpec twist_by_canonical(const CurveSpec& x, const BundleSpec& e, std::int64_t p)
{
    BundleSpec r = e;
    r.degree = e.degree + p * e.rank * x.canonical_degree();
    r.h0_override.reset();
    if (e.is_trivial || e.canonical_power) {
        std::int64_t q = (e.canonical_power ? *e.canonical_power : 0) + p;
        r = BundleSpec::canonical(x, q);
        return r;
    }
    r.omega_twist = e.omega_twist + p;
    return r;
}

GradedDims hom_ext(const CurveSpec& x, const BundleSpec& e, const BundleSpec& f, const Overrides& overrides)
{
    e.validate(x);
    f.validate(x);
    CurveModel m(x, overrides);
    return m.dims(BundleExpr(x, e).dual() * BundleExpr(x, f));
}

namespace {

DimStatus k02_engine_bound(const CurveModel& m, const BundleExpr& f)
{
    const auto& x = m.curve();
    DimStatus target = m.h0(f.twist(2));
    DimStatus source = m.h0(f.twist(1)) * DimStatus::exact(x.genus);
    if (source.is_zero())
        return DimStatus(target).with_rule("source-vanishes");
    if (!target.hi())
        return DimStatus::unknown("engine-bound");
    Integer lo = 0;
    if (source.hi() && target.lo() > *source.hi())
        lo = target.lo() - *source.hi();
    return DimStatus::interval(lo, *target.hi(), "engine-bound");
}

}  // namespace

DimStatus koszul_k02(const CurveSpec& x, const BundleSpec& f, const Overrides& overrides)
{
    f.validate(x);
    CurveModel m(x, overrides);
    const BundleExpr fe(x, f);
    const int g = x.genus;
    const bool hyp = x.is_hyperelliptic();
    const bool line = f.rank == 1;

    if (m.h0(fe.twist(2)).is_zero())
        return DimStatus::exact(0, "target-vanishes");
    if (g == 1)
        return DimStatus::exact(0, "genus-one");
    if (g == 0)
        return k02_engine_bound(m, fe);
    if ((f.stable || line) && f.degree >= 3)
        return DimStatus::exact(0, "butler-degree-3");
    if (line && !hyp && f.degree >= 2)
        return DimStatus::exact(0, "butler-line");
    if (f.is_trivial && !hyp)
        return DimStatus::exact(0, "max-noether");
    if (f.is_trivial && g == 2)
        return DimStatus::exact(0, "genus-two");
    if (f.is_trivial)
        return DimStatus::exact(HyperellipticModel(g).k02_via_sections(HyperellipticModel::K02Case::omega),
                                "hyperelliptic-omega");
    DimStatus h0 = m.h0(fe);
    if (line && !hyp && f.degree == 1 && h0.is_exact() && h0.value() == 1)
        return DimStatus::exact(1, "degree-one");
    if (line && hyp && g >= 3 && f.degree == 2 && h0.is_exact()) {
        HyperellipticModel h(g);
        if (h0.value() == 1)
            return DimStatus::exact(h.k02_via_sections(HyperellipticModel::K02Case::deg2_h01), "hyperelliptic-deg2-h01");
        if (h0.value() == 2)
            return DimStatus::exact(h.mult_cokernel_dim(g, g - 1), "hyperelliptic-g12");
    }
    return k02_engine_bound(m, fe);
}

DimStatus w_space(const CurveSpec& x, const BundleSpec& e, const Overrides& overrides)
{
    e.validate(x);
    CurveModel m(x, overrides);
    const BundleExpr ee(x, e);
    const int g = x.genus;

    DimStatus source = m.h0(ee.dual().twist(1)) * m.h0(ee.twist(1));
    if (e.rank == 1) {
        DimStatus k_omega = koszul_k02(x, BundleSpec::trivial(), overrides);
        if (k_omega.is_zero())
            return DimStatus::exact(0, "k02-omega-vanishes");
        if (source.is_zero())
            return DimStatus(k_omega).with_rule("source-vanishes");
        return DimStatus::interval(0, k_omega.value(), "quotient-of-k02-omega");
    }
    if (g < 2)
        return DimStatus::unknown("higher-rank-low-genus");
    // K_{0,2}(End E, w) sits inside H0(End E w^2)
    Integer r2 = Integer(e.rank) * e.rank;
    return DimStatus::interval(0, 3 * r2 * (g - 1), "bounded-by-end-sections");
}

}  // namespace tautext
