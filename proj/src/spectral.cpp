#include "tautext/spectral.hpp"
#include "tautext/errors.hpp"

#include <algorithm>

namespace tautext {

std::string PageFact::label() const
{
    std::string at = "[" + std::to_string(p) + "," + std::to_string(q) + "]";
    switch (kind) {
    case Kind::e1:
        return "E1" + at;
    case Kind::e2:
        return "E2" + at;
    case Kind::e_infinity:
        return "Einf" + at;
    default:
        return "rank d1 from " + at;
    }
}

DimStatus E1Page::at(std::int64_t p, std::int64_t q) const
{
    auto it = entries.find({p, q});
    return it == entries.end() ? DimStatus::exact(0) : it->second;
}

std::optional<DimStatus> E1Page::fact(PageFact::Kind kind, std::int64_t p, std::int64_t q) const
{
    for (const auto& f : facts)
        if (f.kind == kind && f.p == p && f.q == q)
            return f.value;
    return std::nullopt;
}

std::optional<Integer> E1Page::euler_char() const
{
    Integer chi = 0;
    for (const auto& [pq, s] : entries) {
        if (!s.is_exact())
            return std::nullopt;
        chi += ((pq.first + pq.second) % 2 == 0) ? s.value() : Integer(-s.value());
    }
    return chi;
}

namespace {

bool same_bundle(const BundleSpec& a, const BundleSpec& b)
{
    return a.name == b.name && a.rank == b.rank && a.degree == b.degree && a.omega_twist == b.omega_twist &&
           a.is_trivial == b.is_trivial && a.canonical_power == b.canonical_power && a.stable == b.stable;
}

void note(std::vector<HypothesisNote>* trail, std::string h, std::string how)
{
    if (trail)
        trail->push_back({std::move(h), std::move(how)});
}

PageFact make_fact(PageFact::Kind kind, std::int64_t p, std::int64_t q, DimStatus v, std::string rule)
{
    v.with_rule(rule);
    return PageFact{kind, p, q, std::move(v), std::move(rule)};
}

void require_stable_nontrivial(const BundleSpec& e, std::vector<HypothesisNote>* trail)
{
    if (e.is_trivial)
        throw HypothesisViolation("E = O is excluded");
    note(trail, "E != O", "checked");
    if (e.rank > 1 && !e.stable)
        throw HypothesisViolation("E is not asserted stable");
    note(trail, "E stable (hence simple)", e.rank == 1 ? "checked: line bundle" : "asserted flag");
}

}  // namespace

std::vector<PageFact> rank_rules(const CurveModel& m, const BundleSpec& e, int n, std::vector<HypothesisNote>* trail)
{
    const auto& x = m.curve();
    const int g = x.genus;
    e.validate(x);
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    require_stable_nontrivial(e, trail);
    if (g == 0)
        throw HypothesisViolation("genus 0 is outside the differential lemmas");

    std::vector<E1Term> cols;
    for (int p = 0; p < n; ++p)
        cols.push_back(e1_term(m, e, e, n, p));
    auto e1 = [&](std::int64_t p, std::int64_t q) { return cols.at(-p).dims.at(q); };

    using K = PageFact::Kind;
    std::vector<PageFact> facts;
    facts.push_back(make_fact(K::e_infinity, 0, 0, e1(0, 0), "edge"));

    if (g == 1) {
        note(trail, "g = 1", "checked");
        for (int p = 1; p < n; ++p) {
            facts.push_back(make_fact(K::e2, -p, p, DimStatus::exact(0), "genus-one-injective"));
            facts.push_back(make_fact(K::d1_rank, -p, p, e1(-p, p), "genus-one-injective"));
        }
        return facts;
    }

    note(trail, "g >= 2", "checked");
    for (int p = 1; p < n; ++p)
        facts.push_back(make_fact(K::e1, -p, p, DimStatus::exact(0), "ext-vanishing"));
    facts.push_back(make_fact(K::e_infinity, 0, 1, e1(0, 1), "ext-vanishing"));
    if (n == 1)
        return facts;

    const BundleExpr E(x, e);
    const bool nonneg = e.degree >= 0;
    DimStatus w = w_space(x, e, m.overrides());
    DimStatus k = w;
    std::string rule;
    if (nonneg) {
        note(trail, "deg E >= 0", "checked");
        rule = "leftmost-differential-nonneg";
        if (n >= 3)
            k = k + m.h0(E) * koszul_k02(x, e, m.overrides());
    } else {
        note(trail, "deg E < 0", "checked");
        note(trail, "delta component vanishes unless E = w^-(p+1)", "cited");
        rule = "leftmost-differential-neg";
    }
    facts.push_back(make_fact(K::e_infinity, -1, 2, k, rule));
    facts.push_back(make_fact(K::d1_rank, -1, 2, difference(e1(-1, 2), k), rule));

    for (int p = 1; p + 1 <= n - 1; ++p) {
        if (g == 2 && p < 2)
            continue;
        facts.push_back(make_fact(K::e_infinity, -p - 1, 2 + p, DimStatus::exact(0), "butler-surjectivity"));
        facts.push_back(make_fact(K::d1_rank, -p - 1, 2 + p, e1(-p - 1, 2 + p), "butler-surjectivity"));
    }

    if (g == 2 && n >= 3 && nonneg && e.rank == 1 && m.h0(E.dual().twist(1)).is_zero()) {
        note(trail, "Hom(L, w) = 0", "checked");
        facts.push_back(make_fact(K::e2, -2, 3, DimStatus::at_least(1), "genus-two-cokernel"));
        DimStatus src = e1(-2, 3);
        DimStatus r = DimStatus::unknown();
        if (n == 3)
            r = difference(src, DimStatus::exact(1));
        else if (src.hi())
            r = DimStatus::interval(0, std::max(Integer(0), Integer(*src.hi() - 1)));
        facts.push_back(make_fact(K::d1_rank, -2, 3, r, "genus-two-cokernel"));
    }
    return facts;
}

E1Page build_e1_page(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    E1Page page;
    page.n = n;
    for (int p = 0; p < n; ++p) {
        E1Term t = e1_term(m, e, f, n, p);
        for (const auto& [q, s] : t.dims.entries())
            page.entries.emplace(std::make_pair(std::int64_t(-p), q), s);
        page.columns.push_back(std::move(t));
    }
    if (n == 1)
        note(&page.trail, "n = 1: single column equal to Ext^*(E, F)", "checked");
    if (!same_bundle(e, f)) {
        note(&page.trail, "E = F for differential lemmas", "failed: E and F differ");
        return page;
    }
    try {
        page.facts = rank_rules(m, e, n, &page.trail);
    } catch (const HypothesisViolation& ex) {
        note(&page.trail, "differential lemmas", std::string("failed: ") + ex.what());
    }
    return page;
}

DimStatus hom_taut(const CurveModel& m, const BundleSpec& e, int n, std::vector<HypothesisNote>* trail)
{
    const auto& x = m.curve();
    e.validate(x);
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (x.genus == 0)
        throw HypothesisViolation("simplicity of E^[n] is not preserved in genus 0");
    if (e.is_trivial) {
        note(trail, "E = O", "checked");
        if (n == 1)
            return DimStatus::exact(1, "n-equals-one");
        return DimStatus::at_least(2, "trivial-never-simple");
    }
    if (e.rank > 1 && !e.stable)
        throw HypothesisViolation("E is not asserted stable, so simplicity is unknown");
    note(trail, "E simple", e.rank == 1 ? "checked: line bundle" : "asserted flag");
    DimStatus e00 = e1_term(m, e, e, n, 0).dims.at(0);
    if (e00.is_exact() && e00.value() != 1)
        throw HypothesisViolation("overrides give E^1_{0,0} = " + e00.render() + ", contradicting simplicity of E");
    return DimStatus::exact(1, "simple-preserved");
}

ExtReport ext1_taut(const CurveModel& m, const BundleSpec& e, int n)
{
    const auto& x = m.curve();
    const int g = x.genus;
    e.validate(x);
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    ExtReport rep;
    if (g < 2)
        throw HypothesisViolation("Ext^1 theorems need genus >= 2, got " + std::to_string(g));
    note(&rep.trail, "g >= 2", "checked");
    require_stable_nontrivial(e, &rep.trail);

    const BundleExpr E(x, e);
    rep.hom_dim = hom_taut(m, e, n);
    DimStatus ext_ee = m.h1(E.dual() * E).with_rule("end-simple");
    rep.ext1_summands.emplace_back("Ext1(E,E)", ext_ee);

    if (n == 1) {
        rep.ext1_dim = ext_ee;
        note(&rep.trail, "n = 1", "checked");
    } else {
        rep.ext1_summands.emplace_back("H1(O)", DimStatus::exact(g));
        DimStatus w = w_space(x, e, m.overrides());
        bool open_case = false;
        if (e.degree >= 0) {
            note(&rep.trail, "deg E >= 0", "checked");
            rep.ext1_summands.emplace_back("H0(E)xH1(E^v)", m.h0(E) * m.h1(E.dual()));
            rep.ext1_summands.emplace_back("W^v", w);
            if (n >= 3) {
                if (g >= 3) {
                    note(&rep.trail, "g >= 3 for n >= 3", "checked");
                    rep.ext1_summands.emplace_back("H0(E)xK02(E,w)^v", m.h0(E) * koszul_k02(x, e, m.overrides()));
                } else {
                    note(&rep.trail, "g >= 3 for n >= 3", "failed: g = 2 is open for n >= 3, deg >= 0");
                    open_case = true;
                }
            }
        } else {
            note(&rep.trail, "deg E < 0", "checked");
            rep.ext1_summands.emplace_back("H1(E)xH0(E^v)", m.h1(E) * m.h0(E.dual()));
            rep.ext1_summands.emplace_back("W^v", w);
        }
        DimStatus total = DimStatus::exact(0);
        for (const auto& [name, s] : rep.ext1_summands)
            total += s;
        if (open_case) {
            DimStatus known = DimStatus::exact(0);
            for (const auto& [name, s] : rep.ext1_summands)
                if (name != "W^v")
                    known += s;
            rep.ext1_dim = DimStatus::at_least(known.lo(), "genus-two-open");
        } else {
            rep.ext1_dim = total.with_rule("ext1-theorem");
        }
    }
    rep.euler_char = build_e1_page(m, e, e, n).euler_char();
    return rep;
}

Integer euler_char_taut(const CurveModel& m, const BundleSpec& e, const BundleSpec& f, int n)
{
    E1Page page = build_e1_page(m, e, f, n);
    if (auto chi = page.euler_char())
        return *chi;
    std::vector<std::string> keys;
    for (const auto& c : page.columns)
        for (const auto& k : c.unresolved)
            if (std::find(keys.begin(), keys.end(), k) == keys.end())
                keys.push_back(k);
    throw UnderdeterminedCohomology(keys);
}

std::string ClassificationVerdict::verdict_name() const
{
    switch (verdict) {
    case Verdict::smooth:
        return "smooth";
    case Verdict::singular:
        return "singular";
    default:
        return "undetermined";
    }
}

ClassificationVerdict classify_point(const CurveModel& m, const BundleSpec& e, int n)
{
    const auto& x = m.curve();
    const int g = x.genus;
    e.validate(x);
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    ClassificationVerdict v;
    auto* trail = &v.trail;
    if (e.rank > 1 && !e.stable)
        throw HypothesisViolation("E is not asserted stable");
    note(trail, "E stable", e.rank == 1 ? "checked: line bundle" : "asserted flag");

    const Rational mu = e.slope();
    if (mu >= -1 && mu <= n - 1) {
        note(trail, "slope outside [-1, n-1]", "failed: slope " + mu.str());
        v.criterion = "stability of E^[n] needs slope outside [-1, n-1]";
        return v;
    }
    note(trail, "slope outside [-1, n-1]", "checked: slope " + mu.str());
    if (n == 1) {
        v.criterion = "n = 1: E^[1] = E";
        return v;
    }

    const BundleExpr E(x, e);
    const Integer r = e.rank, d = e.degree;
    auto binom_g2 = binomial(g, 2);

    if (n == 2) {
        DimStatus source = m.h0(E.dual().twist(1)) * m.h0(E.twist(1));
        const bool vanish = source.is_zero();
        note(trail, "Hom(E,w) x H0(E w) = 0", vanish ? "checked" : "failed: " + source.render());
        if (!vanish) {
            v.criterion = "obstruction bound needs Hom(E,w) x H0(E w) = 0";
            return v;
        }
        if (r == 1 && (g == 2 || (g == 3 && !x.is_hyperelliptic()))) {
            note(trail, "g = 2 or non-hyperelliptic g = 3", "checked");
            Integer lhs = Integer(g) * g - 3 * Integer(g - 1);
            v.verdict = ClassificationVerdict::Verdict::smooth;
            v.criterion = "ext2 = g^2-3(g-1) equals h2(O) = C(g,2)";
            v.witness = lhs.str() + " = " + binom_g2.str();
            return v;
        }
        if (g >= 4) {
            note(trail, "g >= 4", "checked");
            note(trail, "component of expected dimension for |mu| >> 0", "cited");
            Integer lhs = Integer(g - 3) * r * r * (g - 1) + g;
            v.verdict = ClassificationVerdict::Verdict::singular;
            v.criterion = "ext2 >= (r^2(g-1)+1)g-3r^2(g-1) = (g-3)r^2(g-1)+g exceeds C(g,2)";
            v.witness = lhs.str() + " > " + binom_g2.str();
            return v;
        }
        if (g == 3 && x.is_hyperelliptic() && r == 1) {
            note(trail, "hyperelliptic g = 3", "checked");
            note(trail, "component of expected dimension for |mu| >> 0", "cited");
            Integer lhs = Integer(g - 1) * (g - 1);
            v.verdict = ClassificationVerdict::Verdict::singular;
            v.criterion = "ext2 >= g^2-(2g-1) = (g-1)^2 exceeds C(g,2)";
            v.witness = lhs.str() + " > " + binom_g2.str();
            return v;
        }
        v.criterion = "no criterion for this genus and rank at n = 2";
        return v;
    }

    if (g < 3) {
        note(trail, "g >= 3", "failed");
        v.criterion = "singularity theorem needs g >= 3";
        return v;
    }
    note(trail, "g >= 3", "checked");
    note(trail, "Yoneda square obstruction", "cited");

    if (d > 0) {
        const Integer threshold = 3 * r - Integer(g) * (r - 1);
        v.threshold = threshold;
        v.criterion = "d+3r(g-1) < (d+(r-1)(g-1))g, i.e. d > " + threshold.str();
        DimStatus h0 = m.h0(E);
        if (h0.lo() <= 0) {
            note(trail, "H0(E) != 0", "failed: h0 = " + h0.render());
            return v;
        }
        note(trail, "H0(E) != 0", "checked: h0 = " + h0.render());
        Integer lhs = d + 3 * r * (g - 1);
        Integer rhs = (d + (r - 1) * (g - 1)) * g;
        v.witness = lhs.str() + (lhs < rhs ? " < " : " >= ") + rhs.str();
        if (lhs < rhs)
            v.verdict = ClassificationVerdict::Verdict::singular;
        return v;
    }

    v.criterion = "hom(E,w^-1) < h0(E^v) h1(O)";
    DimStatus a = m.h0(E.dual().twist(-1));
    DimStatus b = m.h0(E.dual());
    if (b.lo() <= 0) {
        note(trail, "H0(E^v) != 0", "failed: h0 = " + b.render());
        return v;
    }
    note(trail, "H0(E^v) != 0", "checked: h0 = " + b.render());
    Integer rhs = b.lo() * g;
    if (a.hi() && *a.hi() < rhs) {
        v.verdict = ClassificationVerdict::Verdict::singular;
        v.witness = a.render() + " < " + rhs.str();
    } else {
        v.witness = a.render() + " vs " + rhs.str();
    }
    return v;
}

GradedDims wedge_taut_cohomology(const CurveModel& m, const BundleSpec& l, int n, int k)
{
    const auto& x = m.curve();
    l.validate(x);
    if (l.rank != 1)
        throw InvalidSpec("wedge_taut_cohomology needs a line bundle");
    if (n < 1 || k < 0 || k > n)
        throw std::invalid_argument("need 0 <= k <= n and n >= 1");
    GradedDims hl = m.dims(BundleExpr(x, l));
    GradedDims ho{{0, 1}, {1, x.genus}};
    return tensor(wedge_power(hl, k), sym_power(ho, n - k));
}

}  // namespace tautext
