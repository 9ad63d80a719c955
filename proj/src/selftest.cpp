#include "tautext/selftest.hpp"
#include "tautext/complex.hpp"
#include "tautext/errors.hpp"
#include "tautext/hyperelliptic.hpp"
#include "tautext/oracles.hpp"
#include "tautext/spectral.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tautext {

namespace {

CheckResult named(std::string name)
{
    CheckResult c;
    c.name = std::move(name);
    return c;
}

void record(CheckResult& c, bool ok, const std::string& what)
{
    ++c.cases;
    if (!ok && c.failures++ == 0)
        c.detail = "first failure: " + what;
}

void finish(CheckResult& c, const std::string& summary)
{
    if (c.failures == 0)
        c.detail = summary;
}

std::string range_str(const DimStatus& s) { return s.render(); }

}  // namespace

CheckResult check_complex(int max_n)
{
    CheckResult c = named("complex d o d = 0");
    for (int n = 1; n <= max_n; ++n) {
        SignedComplex cx;
        try {
            cx = build_signed_complex(n);
        } catch (const std::exception& e) {
            record(c, false, "n=" + std::to_string(n) + ": " + e.what());
            continue;
        }
        for (int p = 0; p < n; ++p)
            record(c, cx.terms[p].size() == std::size_t(binomial(n, p + 1)),
                   "term size n=" + std::to_string(n) + " p=" + std::to_string(p));
        for (int p = 0; p + 1 < n; ++p) {
            const auto& d = cx.differentials[p];
            bool signs = true;
            for (std::size_t r = 0; r < cx.terms[p + 1].size(); ++r)
                for (std::size_t col = 0; col < cx.terms[p].size(); ++col) {
                    const auto& I = cx.terms[p + 1][r];
                    const auto& J = cx.terms[p][col];
                    Rational expect = 0;
                    if (std::includes(I.begin(), I.end(), J.begin(), J.end())) {
                        int i = 0;
                        for (int v : I)
                            if (!std::binary_search(J.begin(), J.end(), v))
                                i = v;
                        int below = int(std::count_if(I.begin(), I.end(), [&](int j) { return j < i; }));
                        expect = below % 2 == 0 ? 1 : -1;
                    }
                    signs = signs && d(r, col) == expect;
                }
            record(c, signs, "sign pattern n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
        for (int p = 0; p + 2 < n; ++p) {
            const auto& a = cx.differentials[p];
            const auto& b = cx.differentials[p + 1];
            bool zero = true;
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    Rational s = 0;
                    for (std::size_t k = 0; k < b.cols(); ++k)
                        s += b(i, k) * a(k, j);
                    zero = zero && s == 0;
                }
            record(c, zero, "d^" + std::to_string(p + 1) + " d^" + std::to_string(p) + " n=" + std::to_string(n));
        }
    }
    finish(c, "n <= " + std::to_string(max_n));
    return c;
}

CheckResult check_orbits(int max_n)
{
    CheckResult c = named("orbits vs invariants");
    for (int n = 1; n <= max_n; ++n) {
        std::vector<IndexFamily> fams{IndexFamily::parse("singletons")};
        for (int p = 0; p < n; ++p)
            fams.push_back(IndexFamily::parse("pairs:" + std::to_string(p)));
        for (int k = 0; k <= n; ++k)
            fams.push_back(IndexFamily::parse("subsets:" + std::to_string(k)));
        for (const auto& f : fams) {
            const std::string tag = "n=" + std::to_string(n) + " " + f.str();
            auto hard = orbit_decompose(n, f);
            auto brute = oracle::orbits_bruteforce(n, f);
            bool same = hard.orbit_sizes.size() == brute.sizes.size();
            for (std::size_t i = 0; same && i < brute.sizes.size(); ++i)
                same = hard.orbit_sizes[i] == brute.sizes[i] && hard.stabilizer_orders[i] == brute.stabilizers[i];
            record(c, same, tag + " orbit sizes");
            auto inv = invariants_dim_bruteforce(n, family_action(n, f));
            record(c, inv == hard.orbit_sizes.size(), tag + " invariant dimension");
            if (f.kind == IndexFamily::Kind::pairs)
                record(c, hard.orbit_sizes.size() == (f.param <= n - 2 ? 2u : 1u), tag + " orbit count");
        }
    }
    record(c, invariants_dim_bruteforce(3, oracle::regular_representation(3)) == 1, "regular representation of S_3");
    record(c, invariants_dim_bruteforce(3, oracle::sign_representation()) == 0, "sign representation of S_3");
    finish(c, "n <= " + std::to_string(max_n));
    return c;
}

CheckResult check_plethysm(int lo, int hi, int max_dim, int max_k)
{
    CheckResult c = named("plethysm vs brute force");
    for (const auto& v : oracle::small_graded_spaces(lo, hi, max_dim))
        for (int k = 0; k <= max_k; ++k) {
            const std::string tag = v.str() + " k=" + std::to_string(k);
            record(c, sym_power(v, k) == oracle::signed_power_bruteforce(v, k, false), "S " + tag);
            record(c, wedge_power(v, k) == oracle::signed_power_bruteforce(v, k, true), "wedge " + tag);
            record(c, sym_power(shift(v, 1), k) == shift(wedge_power(v, k), k), "S(V[1]) " + tag);
        }
    finish(c, "support [" + std::to_string(lo) + "," + std::to_string(hi) + "], dim <= " + std::to_string(max_dim) +
                  ", k <= " + std::to_string(max_k));
    return c;
}

CheckResult check_serre_routes()
{
    CheckResult c = named("Serre-dual E1 route");
    std::size_t resolved = 0;
    for (int g = 1; g <= 3; ++g) {
        CurveSpec x{g, false};
        if (g == 2)
            x.hyperelliptic = true;
        CurveModel m(x);
        for (int r = 1; r <= 2; ++r)
            for (std::int64_t d : {std::int64_t(-7), std::int64_t(1), std::int64_t(2) * r * (2 * g - 2) + 3,
                                   std::int64_t(6) * g + 5})
                for (int n = 2; n <= 3; ++n)
                    for (int p = 0; p < n; ++p) {
                        BundleSpec e;
                        e.rank = r;
                        e.degree = d;
                        auto t = e1_term_serre_dual(m, e, e, n, p);
                        if (!t.consistent)
                            continue;
                        ++resolved;
                        record(c, *t.consistent,
                               "g=" + std::to_string(g) + " r=" + std::to_string(r) + " d=" + std::to_string(d) +
                                   " n=" + std::to_string(n) + " p=" + std::to_string(p));
                    }
    }
    if (resolved < 20)
        record(c, false, "only " + std::to_string(resolved) + " resolved points");
    finish(c, std::to_string(resolved) + " resolved (g, r, d, n, p) points");
    return c;
}

CheckResult check_curve_model()
{
    CheckResult c = named("Riemann-Roch and Serre duality");
    for (int g = 0; g <= 5; ++g)
        for (bool hyp : {false, true}) {
            CurveSpec x{g, hyp || g == 2};
            if (g < 2 && hyp)
                continue;
            CurveModel m(x);
            for (int r = 1; r <= 2; ++r)
                for (std::int64_t d = -3; d <= 2 * r * (2 * g - 2) + 3; ++d)
                    for (std::int64_t k = -2; k <= 2; ++k) {
                        BundleSpec e;
                        e.rank = r;
                        e.degree = d;
                        BundleExpr ex = BundleExpr(x, e).twist(k);
                        for (const auto& b : {ex, ex.dual() * BundleExpr(x, e), BundleExpr::omega(k)}) {
                            Cohomology h = m.cohomology(b);
                            if (!h.exact())
                                continue;
                            record(c, h.h0.value() - h.h1.value() == b.euler_char(x), "RR " + h.key);
                            Cohomology s = m.cohomology(b.dual().twist(1));
                            if (s.exact())
                                record(c, s.h0.value() == h.h1.value(), "Serre " + h.key);
                        }
                    }
        }
    CurveSpec x3{3, false}, x4{4, false};
    auto dims = [](const CurveSpec& x, const BundleSpec& e) { return bundle_cohomology(x, e); };
    record(c, dims(x3, BundleSpec::canonical(x3, 1)) == GradedDims{{0, 3}, {1, 1}}, "h(w) on g=3");
    record(c, dims(x3, BundleSpec::canonical(x3, 2)) == GradedDims{{0, 6}}, "h(w^2) on g=3");
    record(c, dims(x4, BundleSpec::line(-2)) == GradedDims{{1, 5}}, "h(L), d=-2, g=4");
    finish(c, "g <= 5, ranks 1..2");
    return c;
}

CheckResult check_hyperelliptic(int max_g)
{
    CheckResult c = named("hyperelliptic table");
    for (int g = 2; g <= 20; ++g) {
        HyperellipticModel h(g);
        record(c, h.h0_power(g) == g + 1, "h0(L^g) branch point, g=" + std::to_string(g));
    }
    for (int g = 2; g <= max_g; ++g) {
        HyperellipticModel h(g);
        CurveSpec x{g, true};
        const std::string tag = "g=" + std::to_string(g);
        const Integer w = h.k02_via_sections(HyperellipticModel::K02Case::omega);
        record(c, w == g - 2, "k02(w) " + tag);
        record(c, h.mult_cokernel_dim(g - 1, g - 1) == w, "coker(w,w) " + tag);
        auto rule = koszul_k02(x, BundleSpec::trivial());
        record(c, rule.is_exact() && rule.value() == g - 2, "k02(O) rule " + tag);
        if (g >= 3) {
            record(c, h.k02_via_sections(HyperellipticModel::K02Case::deg2_h01) == g - 1, "k02(L1) " + tag);
            auto l1 = koszul_k02(x, BundleSpec::line(2, Integer(1)));
            record(c, l1.is_exact() && l1.value() == g - 1, "k02(L1) rule " + tag);
            record(c, h.mult_cokernel_dim(g, g - 1) == g - 1, "coker(L^g,w) " + tag);
        }
    }
    finish(c, "g in 2.." + std::to_string(max_g));
    return c;
}

CheckResult check_ext1_fixtures()
{
    CheckResult c = named("Ext1 fixtures");
    auto ext1 = [](const CurveSpec& x, const BundleSpec& e, int n) { return ext1_taut(CurveModel(x), e, n).ext1_dim; };
    CurveSpec x3{3, false}, x2{2, true};
    for (int n : {2, 3}) {
        auto a = ext1(x3, BundleSpec::line(4, Integer(2)), n);
        record(c, a.is_exact() && a.value() == 18 && oracle::ext1_line(3, 4, 2, 0, n, 0, 0) == 18,
               "g=3 d=4 h0=2 n=" + std::to_string(n) + ": " + range_str(a));
        auto b = ext1(x3, BundleSpec::canonical(x3, 1), n);
        record(c, b.is_exact() && b.value() == 24 && oracle::ext1_line(3, 4, 3, 0, n, 0, 0) == 24,
               "g=3 L=w n=" + std::to_string(n) + ": " + range_str(b));
    }
    auto l3 = ext1(x2, BundleSpec::line(3), 2);
    record(c, l3.is_exact() && l3.value() == 12 && oracle::ext1_line(2, 3, 2, 0, 2, 0, 0) == 12,
           "g=2 d=3 n=2: " + range_str(l3));
    auto neg = ext1_taut(CurveModel(x3, {{"E^v", 0}}), BundleSpec::line(-2), 3).ext1_dim;
    record(c, neg.is_exact() && neg.value() == oracle::ext1_line(3, -2, 0, 0, 3, 0, 0),
           "g=3 d=-2 n=3: " + range_str(neg));
    finish(c, "g=3 d=4: 18, 24; g=2 d=3: 12; g=3 d=-2: " + range_str(neg));
    return c;
}

CheckResult check_bn_monotone()
{
    CheckResult c = named("Brill-Noether monotonicity");
    for (int g = 3; g <= 5; ++g) {
        CurveSpec x{g, false};
        CurveModel m(x);
        for (std::int64_t d = 2; d <= 2 * g - 2; ++d)
            for (int n : {2, 3}) {
                std::optional<Integer> prev;
                const std::int64_t top = d == 2 * g - 2 ? g : d / 2;
                for (std::int64_t h0 = std::max<std::int64_t>(0, d + 1 - g); h0 <= top; ++h0) {
                    BundleSpec l = d == 2 * g - 2 && h0 == g ? BundleSpec::canonical(x, 1) : BundleSpec::line(d, Integer(h0));
                    auto e = ext1_taut(m, l, n).ext1_dim;
                    const std::string tag = "g=" + std::to_string(g) + " d=" + std::to_string(d) +
                                            " n=" + std::to_string(n) + " h0=" + std::to_string(h0);
                    if (!e.is_exact()) {
                        record(c, false, tag + " not exact: " + e.render());
                        continue;
                    }
                    record(c, e.value() == oracle::ext1_line(g, d, h0, 0, n, 0, 0), tag + " value");
                    if (prev)
                        record(c, e.value() - *prev == d + g - 1, tag + " increment");
                    prev = e.value();
                }
            }
    }
    finish(c, "g in 3..5, d in 2..2g-2, increment d+g-1");
    return c;
}

CheckResult check_simpleness()
{
    CheckResult c = named("simpleness");
    for (int g = 1; g <= 4; ++g) {
        CurveSpec x{g, g == 2};
        CurveModel m(x);
        for (int n = 2; n <= 4; ++n)
            for (int r = 1; r <= 2; ++r)
                for (std::int64_t d : {std::int64_t(-3), std::int64_t(1), std::int64_t(7)}) {
                    BundleSpec e;
                    e.rank = r;
                    e.degree = d;
                    auto h = hom_taut(m, e, n);
                    record(c, h.is_exact() && h.value() == 1,
                           "g=" + std::to_string(g) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               " d=" + std::to_string(d));
                }
        auto o = hom_taut(m, BundleSpec::trivial(), 2);
        record(c, !o.contains(1), "O^[2] not simple, g=" + std::to_string(g));
    }
    finish(c, "g in 1..4, n in 2..4, r in 1..2");
    return c;
}

CheckResult check_classification()
{
    CheckResult c = named("classification");
    auto classify = [](const CurveSpec& x, const BundleSpec& e, int n) { return classify_point(CurveModel(x), e, n); };
    using V = ClassificationVerdict::Verdict;
    CurveSpec x3{3, false}, x4{4, false}, h3{3, true};

    auto a = classify(x3, BundleSpec::line(9), 2);
    record(c, a.verdict == V::smooth && a.witness == "3 = 3", "g=3 d=9 n=2: " + a.verdict_name() + " " + a.witness);
    auto b = classify(x4, BundleSpec::line(20), 2);
    record(c, b.verdict == V::singular && b.witness == "7 > 6", "g=4 d=20 n=2: " + b.verdict_name() + " " + b.witness);
    BundleSpec e;
    e.rank = 2;
    for (std::int64_t d = 5; d <= 12; ++d) {
        e.degree = d;
        auto v = classify(x3, e, 3);
        record(c, v.verdict == V::singular && v.threshold && *v.threshold == 3,
               "g=3 r=2 n=3 d=" + std::to_string(d) + ": " + v.verdict_name());
    }
    e.degree = 4;
    record(c, classify(x3, e, 3).verdict == V::undetermined, "g=3 r=2 n=3 d=4 has slope in [-1,2]");
    auto h = classify(h3, BundleSpec::line(9), 2);
    record(c, h.verdict == V::singular, "hyperelliptic g=3 d=9 n=2: " + h.verdict_name());
    finish(c, "smooth 3 = 3; singular 7 > 6; singular for d > 3 at g=3 r=2 n=3");
    return c;
}

CheckResult check_genus_one(int max_n)
{
    CheckResult c = named("genus-one column collapse");
    CurveSpec x{1, false};
    CurveModel m(x);
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r <= 2; ++r)
            for (std::int64_t d : {std::int64_t(-2), std::int64_t(1), std::int64_t(3)}) {
                BundleSpec e;
                e.rank = r;
                e.degree = d;
                E1Page page = build_e1_page(m, e, e, n);
                for (int p = 1; p < n; ++p) {
                    const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                            " d=" + std::to_string(d) + " p=" + std::to_string(p);
                    auto e2 = page.fact(PageFact::Kind::e2, -p, p);
                    auto rk = page.fact(PageFact::Kind::d1_rank, -p, p);
                    record(c, e2 && e2->is_zero() && rk && rk->same_range(page.at(-p, p)), tag);
                }
            }
    finish(c, "n in 2.." + std::to_string(max_n) + ", r in 1..2");
    return c;
}

std::vector<CheckResult> run_selftest()
{
    std::vector<std::pair<std::string, std::function<CheckResult()>>> checks{
        {"complex", [] { return check_complex(); }},
        {"orbits", [] { return check_orbits(); }},
        {"plethysm", [] { return check_plethysm(); }},
        {"serre", [] { return check_serre_routes(); }},
        {"curve", [] { return check_curve_model(); }},
        {"hyperelliptic", [] { return check_hyperelliptic(); }},
        {"ext1", [] { return check_ext1_fixtures(); }},
        {"brill-noether", [] { return check_bn_monotone(); }},
        {"simpleness", [] { return check_simpleness(); }},
        {"classification", [] { return check_classification(); }},
        {"genus-one", [] { return check_genus_one(); }},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, f] : checks) {
        try {
            out.push_back(f());
        } catch (const std::exception& e) {
            CheckResult r = named(name + " (threw)");
            r.cases = 1;
            r.failures = 1;
            r.detail = e.what();
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace tautext
