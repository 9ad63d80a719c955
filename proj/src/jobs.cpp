#include "tautext/jobs.hpp"
#include "tautext/errors.hpp"
#include "tautext/hyperelliptic.hpp"
#include "tautext/selftest.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace tautext::jobs {

using nlohmann::json;

namespace {

const std::set<std::string> commands{"e1-page", "ext", "classify", "bn-table", "hyperelliptic", "selftest"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where,
                    std::vector<std::string>& problems)
{
    if (!obj.is_object()) {
        problems.push_back(where + ": expected an object");
        return;
    }
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k))
            problems.push_back(where + ": unknown key '" + k + "'");
}

// int, [ints] or {"from": a, "to": b}
std::vector<std::int64_t> parse_range(const json& v, const std::string& where, std::vector<std::string>& problems)
{
    std::vector<std::int64_t> out;
    if (v.is_number_integer()) {
        out.push_back(v.get<std::int64_t>());
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_number_integer()) {
                problems.push_back(where + ": list entries must be integers");
                return {};
            }
            out.push_back(e.get<std::int64_t>());
        }
    } else if (v.is_object()) {
        reject_unknown(v, {"from", "to"}, where, problems);
        if (!v.contains("from") || !v.contains("to") || !v["from"].is_number_integer() ||
            !v["to"].is_number_integer()) {
            problems.push_back(where + ": range needs integer 'from' and 'to'");
            return {};
        }
        auto a = v["from"].get<std::int64_t>(), b = v["to"].get<std::int64_t>();
        if (b < a || b - a > 10000) {
            problems.push_back(where + ": range must be nonempty and finite");
            return {};
        }
        for (auto i = a; i <= b; ++i)
            out.push_back(i);
    } else {
        problems.push_back(where + ": expected integer, list or {from,to}");
        return {};
    }
    if (out.empty())
        problems.push_back(where + ": empty range");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool get_bool(const json& obj, const char* key, bool fallback, const std::string& where,
              std::vector<std::string>& problems)
{
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_boolean()) {
        problems.push_back(where + "." + key + ": expected boolean");
        return fallback;
    }
    return obj[key].get<bool>();
}

BundleGrid parse_bundle(const json& b, const std::string& where, std::vector<std::string>& problems)
{
    BundleGrid g;
    reject_unknown(b, {"name", "rank", "degree", "h0", "stable", "trivial", "canonical_power"}, where, problems);
    if (!b.is_object())
        return g;
    if (b.contains("name")) {
        if (b["name"].is_string())
            g.name = b["name"].get<std::string>();
        else
            problems.push_back(where + ".name: expected string");
    }
    g.stable = get_bool(b, "stable", true, where, problems);
    g.trivial = get_bool(b, "trivial", false, where, problems);
    if (b.contains("canonical_power")) {
        if (b["canonical_power"].is_number_integer())
            g.canonical_power = b["canonical_power"].get<std::int64_t>();
        else
            problems.push_back(where + ".canonical_power: expected integer");
    }
    if (b.contains("rank"))
        g.ranks = parse_range(b["rank"], where + ".rank", problems);
    if (b.contains("degree"))
        g.degrees = parse_range(b["degree"], where + ".degree", problems);
    else if (!g.trivial && !g.canonical_power)
        problems.push_back(where + ": missing 'degree'");
    if (b.contains("h0"))
        g.h0s = parse_range(b["h0"], where + ".h0", problems);
    return g;
}

std::size_t line_of(const std::string& text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(byte), '\n'));
}

struct Point {
    std::int64_t genus, n, rank, degree;
    std::optional<std::int64_t> h0;

    auto key() const { return std::make_tuple(genus, n, rank, degree, h0.has_value(), h0.value_or(0)); }
};

CurveSpec curve_for(const JobSpec& job, std::int64_t g)
{
    CurveSpec x;
    x.genus = int(g);
    x.hyperelliptic = g == 2 ? true : job.hyperelliptic;
    return x;
}

BundleSpec bundle_for(const CurveSpec& x, const BundleGrid& b, const Point& pt)
{
    if (b.trivial)
        return BundleSpec::trivial();
    if (b.canonical_power)
        return BundleSpec::canonical(x, *b.canonical_power);
    // degree 2g-2 with g sections, or degree 0 with a section, pins the bundle down
    if (pt.rank == 1 && pt.h0 && x.genus >= 1) {
        if (pt.degree == x.canonical_degree() && *pt.h0 == x.genus)
            return BundleSpec::canonical(x, 1);
        if (pt.degree == 0 && *pt.h0 == 1)
            return BundleSpec::trivial();
    }
    BundleSpec e;
    e.name = b.name;
    e.rank = int(pt.rank);
    e.degree = pt.degree;
    e.stable = b.stable;
    if (pt.h0)
        e.h0_override = Integer(*pt.h0);
    return e;
}

std::vector<Point> grid_points(const JobSpec& job)
{
    std::vector<Point> pts;
    const auto& b = job.bundle;
    std::vector<std::int64_t> ranks = b.trivial || b.canonical_power ? std::vector<std::int64_t>{1} : b.ranks;
    std::vector<std::int64_t> degrees = b.degrees;
    std::vector<std::optional<std::int64_t>> h0s;
    if (b.h0s.empty())
        h0s.push_back(std::nullopt);
    for (auto h : b.h0s)
        h0s.push_back(h);
    for (auto g : job.genera)
        for (auto n : job.ns)
            for (auto r : ranks) {
                std::vector<std::int64_t> ds = degrees;
                if (b.trivial)
                    ds = {0};
                else if (b.canonical_power)
                    ds = {*b.canonical_power * (2 * g - 2)};
                for (auto d : ds)
                    for (const auto& h : h0s)
                        pts.push_back({g, n, r, d, h});
            }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& c) { return a.key() < c.key(); });
    return pts;
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string trail_str(const std::vector<HypothesisNote>& trail)
{
    std::string s;
    for (const auto& t : trail) {
        if (!s.empty())
            s += "; ";
        s += t.hypothesis + " [" + t.how + "]";
    }
    return s;
}

bool is_determined(const DimStatus& s) { return s.is_exact(); }

using RowFn = std::function<std::vector<Row>(const JobSpec&, const Point&)>;

std::vector<std::string> point_cells(const JobSpec& job, const Point& pt)
{
    CurveSpec x = curve_for(job, pt.genus);
    return {std::to_string(pt.genus), x.is_hyperelliptic() ? "true" : "false", std::to_string(pt.rank),
            std::to_string(pt.degree), opt_str(pt.h0), std::to_string(pt.n)};
}

const std::vector<std::string> point_columns{"genus", "hyperelliptic", "rank", "degree", "h0", "n"};

std::vector<Row> e1_rows(const JobSpec& job, const Point& pt)
{
    CurveSpec x = curve_for(job, pt.genus);
    CurveModel m(x, job.overrides);
    BundleSpec e = bundle_for(x, job.bundle, pt);
    BundleSpec f = job.bundle_f ? bundle_for(x, *job.bundle_f, pt) : e;
    E1Page page = build_e1_page(m, e, f, int(pt.n));

    std::set<std::pair<std::int64_t, std::int64_t>> spots;
    for (const auto& [pq, s] : page.entries)
        spots.insert(pq);
    for (const auto& fct : page.facts)
        spots.insert({fct.p, fct.q});

    std::vector<Row> rows;
    for (const auto& [p, q] : spots) {
        Row row;
        row.cells = point_cells(job, pt);
        DimStatus e1 = page.at(p, q);
        row.determined = is_determined(e1);
        row.cells.push_back(std::to_string(p));
        row.cells.push_back(std::to_string(q));
        row.cells.push_back(e1.render());
        std::string rules;
        for (auto kind : {PageFact::Kind::e2, PageFact::Kind::e_infinity, PageFact::Kind::d1_rank}) {
            auto v = page.fact(kind, p, q);
            row.cells.push_back(v ? v->render() : "");
            if (v && !v->is_exact())
                row.determined = false;
        }
        for (const auto& fct : page.facts)
            if (fct.p == p && fct.q == q) {
                if (!rules.empty())
                    rules += "; ";
                rules += fct.label() + ": " + fct.rule;
            }
        row.cells.push_back(rules);
        row.trail = page.trail;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Row> ext_rows(const JobSpec& job, const Point& pt)
{
    CurveSpec x = curve_for(job, pt.genus);
    CurveModel m(x, job.overrides);
    ExtReport rep = ext1_taut(m, bundle_for(x, job.bundle, pt), int(pt.n));
    Row row;
    row.cells = point_cells(job, pt);
    row.cells.push_back(rep.hom_dim.render());
    row.cells.push_back(rep.ext1_dim.render());
    row.cells.push_back(rep.euler_char ? rep.euler_char->str() : "?");
    std::string summands;
    for (const auto& [name, s] : rep.ext1_summands) {
        if (!summands.empty())
            summands += "; ";
        summands += name + "=" + s.render();
    }
    row.cells.push_back(summands);
    row.cells.push_back(rep.ext1_dim.rule());
    row.determined = rep.hom_dim.is_exact() && rep.ext1_dim.is_exact() && rep.euler_char.has_value();
    row.trail = rep.trail;
    return {row};
}

std::vector<Row> classify_rows(const JobSpec& job, const Point& pt)
{
    CurveSpec x = curve_for(job, pt.genus);
    CurveModel m(x, job.overrides);
    ClassificationVerdict v = classify_point(m, bundle_for(x, job.bundle, pt), int(pt.n));
    Row row;
    row.cells = point_cells(job, pt);
    row.cells.push_back(v.verdict_name());
    row.cells.push_back(v.witness);
    row.cells.push_back(v.threshold ? v.threshold->str() : "");
    row.cells.push_back(v.criterion);
    row.determined = v.verdict != ClassificationVerdict::Verdict::undetermined;
    row.trail = v.trail;
    return {row};
}

std::vector<Row> bn_rows(const JobSpec& job, const Point& pt)
{
    CurveSpec x = curve_for(job, pt.genus);
    CurveModel m(x, job.overrides);
    ExtReport rep = ext1_taut(m, bundle_for(x, job.bundle, pt), int(pt.n));
    Row row;
    row.cells = {std::to_string(pt.genus), x.is_hyperelliptic() ? "true" : "false", std::to_string(pt.degree),
                 std::to_string(pt.n), opt_str(pt.h0), rep.ext1_dim.render(), ""};
    row.determined = rep.ext1_dim.is_exact();
    row.trail = rep.trail;
    return {row};
}

std::vector<Row> hyperelliptic_rows(const JobSpec&, const Point& pt)
{
    HyperellipticModel h(int(pt.genus));
    const int g = int(pt.genus);
    Row row;
    row.cells = {std::to_string(g),
                 h.k02_via_sections(HyperellipticModel::K02Case::omega).str(),
                 g >= 3 ? h.k02_via_sections(HyperellipticModel::K02Case::deg2_h01).str() : "",
                 h.mult_cokernel_dim(g - 1, g - 1).str(),
                 h.mult_cokernel_dim(g, g - 1).str(),
                 h.h0_power(g).str()};
    row.trail = {{"hyperelliptic double cover, w = L^(g-1)", "checked"}};
    return {row};
}

std::vector<std::string> columns_for(const std::string& command)
{
    std::vector<std::string> c;
    if (command == "e1-page") {
        c = point_columns;
        for (auto s : {"p", "q", "e1", "e2", "e_infinity", "d1_rank", "rules"})
            c.push_back(s);
    } else if (command == "ext") {
        c = point_columns;
        for (auto s : {"hom", "ext1", "euler_char", "ext1_summands", "rule"})
            c.push_back(s);
    } else if (command == "classify") {
        c = point_columns;
        for (auto s : {"verdict", "witness", "threshold", "criterion"})
            c.push_back(s);
    } else if (command == "bn-table") {
        c = {"genus", "hyperelliptic", "degree", "n", "h0", "ext1", "increment"};
    } else if (command == "hyperelliptic") {
        c = {"genus", "k02_omega", "k02_deg2_h01", "coker_w_w", "coker_Lg_w", "h0_L^g"};
    } else {
        c = {"check", "cases", "failures", "status", "detail"};
    }
    c.push_back("error");
    return c;
}

RowFn row_fn(const std::string& command)
{
    if (command == "e1-page")
        return e1_rows;
    if (command == "ext")
        return ext_rows;
    if (command == "classify")
        return classify_rows;
    if (command == "bn-table")
        return bn_rows;
    return hyperelliptic_rows;
}

std::string error_kind(const std::exception_ptr& ep)
{
    try {
        std::rethrow_exception(ep);
    } catch (const UnderdeterminedCohomology& e) {
        return std::string("UnderdeterminedCohomology: ") + e.what();
    } catch (const HypothesisViolation& e) {
        return std::string("HypothesisViolation: ") + e.what();
    } catch (const OutOfModeledRange& e) {
        return std::string("OutOfModeledRange: ") + e.what();
    } catch (const InvalidOverride& e) {
        return std::string("InvalidOverride: ") + e.what();
    } catch (const InvalidSpec& e) {
        return std::string("InvalidSpec: ") + e.what();
    } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
    }
}

void validate_points(const JobSpec& job, std::vector<std::string>& problems)
{
    for (auto g : job.genera)
        if (g < 0)
            problems.push_back("curve.genus: must be >= 0, got " + std::to_string(g));
    if (job.command == "hyperelliptic") {
        for (auto g : job.genera)
            if (g < 2)
                problems.push_back("curve.genus: hyperelliptic table needs genus >= 2, got " + std::to_string(g));
        return;
    }
    for (auto n : job.ns)
        if (n < 1)
            problems.push_back("n: must be >= 1, got " + std::to_string(n));
    for (auto r : job.bundle.ranks)
        if (r < 1)
            problems.push_back("bundle.rank: must be >= 1, got " + std::to_string(r));
    if (job.bundle.trivial && job.bundle.canonical_power)
        problems.push_back("bundle: trivial and canonical_power are exclusive");
    if (!problems.empty() || job.genera.empty())
        return;
    std::set<std::string> reported;
    for (const auto& pt : grid_points(job)) {
        CurveSpec x = curve_for(job, pt.genus);
        try {
            bundle_for(x, job.bundle, pt).validate(x);
            if (job.bundle_f)
                bundle_for(x, *job.bundle_f, pt).validate(x);
        } catch (const std::exception& e) {
            std::string msg = "bundle at genus " + std::to_string(pt.genus) + ", rank " + std::to_string(pt.rank) +
                              ", degree " + std::to_string(pt.degree) + ", h0 " + opt_str(pt.h0) + ": " + e.what();
            if (reported.insert(msg).second)
                problems.push_back(msg);
        }
    }
}

}  // namespace

JobSpec parse_job(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JobError("parse error at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }

    std::vector<std::string> problems;
    JobSpec job;
    reject_unknown(doc, {"command", "curve", "bundle", "bundle_grid", "bundle_f", "n", "n_range", "overrides", "options"},
                   "job", problems);
    if (!doc.is_object())
        throw JobError("invalid job", problems);

    if (!doc.contains("command") || !doc["command"].is_string())
        problems.push_back("command: missing or not a string");
    else if (!commands.count(doc["command"].get<std::string>()))
        problems.push_back("command: unknown command '" + doc["command"].get<std::string>() + "'");
    else
        job.command = doc["command"].get<std::string>();

    if (doc.contains("options")) {
        const auto& o = doc["options"];
        reject_unknown(o, {"strict", "format", "output", "jobs"}, "options", problems);
        if (o.is_object()) {
            job.strict = get_bool(o, "strict", false, "options", problems);
            if (o.contains("format")) {
                if (o["format"] == "csv" || o["format"] == "json")
                    job.format = o["format"].get<std::string>();
                else
                    problems.push_back("options.format: expected \"csv\" or \"json\"");
            }
            if (o.contains("output")) {
                if (o["output"].is_string())
                    job.output = o["output"].get<std::string>();
                else
                    problems.push_back("options.output: expected string");
            }
            if (o.contains("jobs")) {
                if (o["jobs"].is_number_integer() && o["jobs"].get<std::int64_t>() >= 1)
                    job.jobs = unsigned(o["jobs"].get<std::int64_t>());
                else
                    problems.push_back("options.jobs: expected positive integer");
            }
        }
    }

    if (job.command == "selftest") {
        for (auto k : {"curve", "bundle", "bundle_grid", "bundle_f", "n", "n_range", "overrides"})
            if (doc.contains(k))
                problems.push_back(std::string(k) + ": not used by selftest");
        if (!problems.empty())
            throw JobError("invalid job", problems);
        return job;
    }

    if (!doc.contains("curve")) {
        problems.push_back("curve: missing");
    } else {
        const auto& c = doc["curve"];
        reject_unknown(c, {"genus", "hyperelliptic"}, "curve", problems);
        if (c.is_object()) {
            if (c.contains("genus"))
                job.genera = parse_range(c["genus"], "curve.genus", problems);
            else
                problems.push_back("curve.genus: missing");
            job.hyperelliptic = get_bool(c, "hyperelliptic", false, "curve", problems);
            if (c.contains("hyperelliptic") && !job.hyperelliptic &&
                std::count(job.genera.begin(), job.genera.end(), 2))
                problems.push_back("curve: every genus-2 curve is hyperelliptic");
        }
    }

    if (job.command != "hyperelliptic") {
        const bool has_b = doc.contains("bundle"), has_grid = doc.contains("bundle_grid");
        if (has_b == has_grid)
            problems.push_back("exactly one of 'bundle' or 'bundle_grid' is required");
        else
            job.bundle = parse_bundle(has_b ? doc["bundle"] : doc["bundle_grid"], has_b ? "bundle" : "bundle_grid",
                                      problems);
        if (has_b && doc["bundle"].is_object())
            for (const char* k : {"rank", "degree", "h0"})
                if (doc["bundle"].contains(k) && !doc["bundle"][k].is_number_integer())
                    problems.push_back(std::string("bundle.") + k + ": expected integer (use bundle_grid for ranges)");
        if (doc.contains("bundle_f")) {
            if (job.command != "e1-page")
                problems.push_back("bundle_f: only used by e1-page");
            else
                job.bundle_f = parse_bundle(doc["bundle_f"], "bundle_f", problems);
        }
        const bool has_n = doc.contains("n"), has_nr = doc.contains("n_range");
        if (has_n && has_nr)
            problems.push_back("give only one of 'n' or 'n_range'");
        else if (has_n && !doc["n"].is_number_integer())
            problems.push_back("n: expected integer (use n_range for ranges)");
        else if (has_n || has_nr)
            job.ns = parse_range(has_n ? doc["n"] : doc["n_range"], has_n ? "n" : "n_range", problems);
        else
            problems.push_back("n: missing");
        if (doc.contains("overrides")) {
            const auto& o = doc["overrides"];
            if (!o.is_object())
                problems.push_back("overrides: expected an object");
            else
                for (const auto& [k, v] : o.items()) {
                    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
                        job.overrides[k] = Integer(v.get<std::int64_t>());
                    else
                        problems.push_back("overrides." + k + ": expected nonnegative integer");
                }
        }
    } else {
        for (auto k : {"bundle", "bundle_grid", "bundle_f", "n", "n_range", "overrides"})
            if (doc.contains(k))
                problems.push_back(std::string(k) + ": not used by hyperelliptic");
        job.ns = {1};
    }

    validate_points(job, problems);
    if (!problems.empty())
        throw JobError("invalid job", problems);
    return job;
}

JobResult run_job(const JobSpec& job)
{
    JobResult res;
    res.command = job.command;
    res.columns = columns_for(job.command);

    if (job.command == "selftest") {
        for (const auto& c : run_selftest()) {
            Row row;
            row.cells = {c.name, std::to_string(c.cases), std::to_string(c.failures), c.passed() ? "pass" : "fail",
                         c.detail, ""};
            row.determined = c.passed();
            if (!c.passed())
                res.selftest_failed = true;
            res.rows.push_back(std::move(row));
        }
        return res;
    }

    std::vector<Point> pts;
    if (job.command == "hyperelliptic")
        for (auto g : job.genera)
            pts.push_back({g, 1, 1, 0, std::nullopt});
    else
        pts = grid_points(job);

    const RowFn fn = row_fn(job.command);
    std::vector<std::vector<Row>> out(pts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < pts.size(); i = next++) {
            try {
                out[i] = fn(job, pts[i]);
            } catch (...) {
                Row row;
                const std::size_t width = res.columns.size();
                if (job.command == "bn-table")
                    row.cells = {std::to_string(pts[i].genus), curve_for(job, pts[i].genus).is_hyperelliptic() ? "true" : "false",
                                 std::to_string(pts[i].degree), std::to_string(pts[i].n), opt_str(pts[i].h0)};
                else if (job.command == "hyperelliptic")
                    row.cells = {std::to_string(pts[i].genus)};
                else
                    row.cells = point_cells(job, pts[i]);
                row.cells.resize(width - 1);
                row.cells.push_back(error_kind(std::current_exception()));
                row.determined = false;
                out[i] = {std::move(row)};
                continue;
            }
            for (auto& row : out[i])
                row.cells.push_back("");
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(job.jobs, unsigned(pts.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    for (auto& rows : out)
        for (auto& r : rows)
            res.rows.push_back(std::move(r));

    if (job.command == "bn-table") {
        // increment of ext1 along h0 within each (genus, degree, n)
        for (std::size_t i = 1; i < res.rows.size(); ++i) {
            auto& prev = res.rows[i - 1].cells;
            auto& cur = res.rows[i].cells;
            if (prev[0] != cur[0] || prev[2] != cur[2] || prev[3] != cur[3])
                continue;
            auto exact = [](const std::string& s) {
                return !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
            };
            if (exact(prev[5]) && exact(cur[5]))
                cur[6] = (Integer(cur[5]) - Integer(prev[5])).str();
        }
    }
    return res;
}

namespace {

bool looks_integer(const std::string& s)
{
    if (s.empty() || s.size() > 18)
        return false;
    std::size_t start = s[0] == '-' ? 1 : 0;
    return start < s.size() && s.find_first_not_of("0123456789", start) == std::string::npos;
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render(const JobResult& result, const std::string& format)
{
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : result.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < result.columns.size(); ++i) {
                const auto& cell = row.cells[i];
                if (looks_integer(cell))
                    obj[result.columns[i]] = std::stoll(cell);
                else if (cell == "true" || cell == "false")
                    obj[result.columns[i]] = cell == "true";
                else
                    obj[result.columns[i]] = cell;
            }
            nlohmann::ordered_json trail = nlohmann::ordered_json::array();
            for (const auto& t : row.trail)
                trail.push_back({{"hypothesis", t.hypothesis}, {"how", t.how}});
            obj["hypothesis_trail"] = trail;
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }
    if (format != "csv")
        throw JobError("unknown output format '" + format + "'");
    std::ostringstream os;
    for (std::size_t i = 0; i < result.columns.size(); ++i)
        os << result.columns[i] << ',';
    os << "hypothesis_trail\n";
    for (const auto& row : result.rows) {
        for (const auto& cell : row.cells)
            os << csv_cell(cell) << ',';
        os << csv_cell(trail_str(row.trail)) << '\n';
    }
    return os.str();
}

int exit_code(const JobSpec& job, const JobResult& result)
{
    if (result.selftest_failed)
        return selftest_failure;
    if (job.strict)
        for (const auto& row : result.rows)
            if (!row.determined)
                return undetermined;
    return ok;
}

}  // namespace tautext::jobs
