#include "fibdet/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "fibdet/closedforms.hpp"
#include "fibdet/identities.hpp"
#include "fibdet/matrices.hpp"
#include "fibdet/sympoly.hpp"

namespace fibdet {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
std::uint64_t timed(F&& f) {
    const auto t0 = Clock::now();
    f();
    const auto t1 = Clock::now();
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

nlohmann::json range_json(const IntRange& r) { return nlohmann::json::array({r.lo, r.hi}); }

IntRange range_from(const nlohmann::json& j, const char* key, IntRange fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument(std::string("grid: '") + key + "' must be [lo, hi]");
    IntRange out{v[0].get<long>(), v[1].get<long>()};
    if (out.lo > out.hi)
        throw std::invalid_argument(std::string("grid: empty range for '") + key + "'");
    return out;
}

}  // namespace

const std::vector<std::string>& verification_targets() {
    static const std::vector<std::string> ids = {"catalan", "eq1",  "eq2",    "thm5",
                                                 "thm7",    "cor8", "cor9",   "lemma3",
                                                 "lemma4",  "lemma6", "desnanot"};
    return ids;
}

GridSpec GridSpec::defaults(const std::string& target) {
    GridSpec g;
    g.a0 = g.a1 = g.c1 = g.c2 = {-2, 2};
    g.r = {0, 4};
    g.s = g.k = g.n = {-2, 3};
    g.i = g.j = {-6, 6};
    g.p = {-2, 3};
    g.entry = {-9, 9};
    if (target == "catalan") {
        // kept small enough that the per-case records stay comfortably in
        // memory; widen via --grid for exhaustive sweeps
        g.s = g.i = g.j = {-3, 3};
    } else if (target == "eq1") {
        g.n = {-5, 10};
    } else if (target == "thm7" || target == "cor8" || target == "lemma4") {
        g.r = {0, 3};
    } else if (target == "cor9") {
        g.r = {0, 3};
        g.a0 = g.a1 = g.c1 = g.c2 = {-1, 1};
        g.n = {0, 1};
    }
    return g;
}

GridSpec GridSpec::from_json(const nlohmann::json& doc, const std::string& target) {
    GridSpec g = defaults(target);
    g.a0 = range_from(doc, "a0", g.a0);
    g.a1 = range_from(doc, "a1", g.a1);
    g.c1 = range_from(doc, "c1", g.c1);
    g.c2 = range_from(doc, "c2", g.c2);
    if (doc.contains("b0")) g.b0 = range_from(doc, "b0", {0, 0});
    if (doc.contains("b1")) g.b1 = range_from(doc, "b1", {0, 0});
    g.r = range_from(doc, "r", g.r);
    g.s = range_from(doc, "s", g.s);
    g.k = range_from(doc, "k", g.k);
    g.n = range_from(doc, "n", g.n);
    g.i = range_from(doc, "i", g.i);
    g.j = range_from(doc, "j", g.j);
    g.p = range_from(doc, "p", g.p);
    g.entry = range_from(doc, "entry", g.entry);
    if (doc.contains("dims")) g.dims = doc.at("dims").get<std::vector<std::size_t>>();
    if (doc.contains("cases_per_dim")) g.cases_per_dim = doc.at("cases_per_dim").get<std::size_t>();
    if (doc.contains("sample")) {
        const auto& s = doc.at("sample");
        if (s.contains("count")) g.sample.count = s.at("count").get<std::size_t>();
        if (s.contains("lo")) g.sample.lo = s.at("lo").get<long>();
        if (s.contains("hi")) g.sample.hi = s.at("hi").get<long>();
        if (s.contains("seed")) g.sample.seed = s.at("seed").get<std::uint64_t>();
    }
    if (g.r.lo < 0) throw std::invalid_argument("grid: r must be nonnegative");
    return g;
}

nlohmann::json GridSpec::to_json() const {
    nlohmann::json doc;
    doc["a0"] = range_json(a0);
    doc["a1"] = range_json(a1);
    doc["c1"] = range_json(c1);
    doc["c2"] = range_json(c2);
    doc["r"] = range_json(r);
    doc["s"] = range_json(s);
    doc["k"] = range_json(k);
    doc["n"] = range_json(n);
    doc["i"] = range_json(i);
    doc["j"] = range_json(j);
    doc["p"] = range_json(p);
    doc["dims"] = dims;
    doc["cases_per_dim"] = cases_per_dim;
    doc["entry"] = range_json(entry);
    doc["sample"] = nlohmann::json{
        {"count", sample.count}, {"lo", sample.lo}, {"hi", sample.hi}, {"seed", sample.seed}};
    if (b0) doc["b0"] = range_json(*b0);
    if (b1) doc["b1"] = range_json(*b1);
    return doc;
}

namespace {

void add_record(VerificationReport& report, CaseRecord record) {
    report.records.push_back(std::move(record));
}

void run_catalan(const GridSpec& g, VerificationReport& report) {
    const IntRange b0 = g.b0.value_or(IntRange{0, -1});  // empty unless given
    const IntRange b1 = g.b1.value_or(IntRange{0, -1});
    for (long a0 = g.a0.lo; a0 <= g.a0.hi; ++a0)
        for (long a1 = g.a1.lo; a1 <= g.a1.hi; ++a1)
            for (long c1 = g.c1.lo; c1 <= g.c1.hi; ++c1)
                for (long c2 = g.c2.lo; c2 <= g.c2.hi; ++c2) {
                    if (c2 == 0) continue;
                    const RecurrenceParams w(a0, a1, c1, c2);
                    // Y ranges over (b0, b1) when provided, else Y = W
                    std::vector<std::pair<long, long>> ys;
                    if (g.b0 && g.b1) {
                        for (long v0 = b0.lo; v0 <= b0.hi; ++v0)
                            for (long v1 = b1.lo; v1 <= b1.hi; ++v1) ys.emplace_back(v0, v1);
                    } else {
                        ys.emplace_back(a0, a1);
                    }
                    for (const auto& [y0, y1] : ys) {
                        HoradamSequence ws(w);
                        HoradamSequence yseq(RecurrenceParams(y0, y1, c1, c2));
                        HoradamSequence us(fundamental_params(c1, c2));
                        for (long s = g.s.lo; s <= g.s.hi; ++s)
                            for (long i = g.i.lo; i <= g.i.hi; ++i)
                                for (long j = g.j.lo; j <= g.j.hi; ++j) {
                                    CaseRecord rec;
                                    rec.formula = "catalan";
                                    rec.inputs = {{"a0", a0}, {"a1", a1}, {"b0", y0},
                                                  {"b1", y1}, {"c1", c1}, {"c2", c2},
                                                  {"s", s},   {"i", i},   {"j", j}};
                                    IdentityInstance inst;
                                    rec.closed_ns = timed([&] {
                                        inst = catalan_general(ws, yseq, us, s, i, j);
                                    });
                                    rec.oracle_ns = 0;  // both sides evaluated together
                                    rec.closed_value = to_string(inst.rhs);
                                    rec.oracle_value = to_string(inst.lhs);
                                    rec.equal = inst.holds;
                                    add_record(report, std::move(rec));
                                }
                    }
                }
}

void run_eq1(const GridSpec& g, VerificationReport& report) {
    for (long r = g.r.lo; r <= g.r.hi; ++r)
        for (long n = g.n.lo; n <= g.n.hi; ++n) {
            CaseRecord rec;
            rec.formula = "eq1";
            rec.inputs = {{"r", r}, {"n", n}};
            Rational closed, oracle;
            rec.closed_ns = timed([&] { closed = power_det_fib(r, n); });
            const PowerMatrixSpec spec{fibonacci_params(), r, 0, 1, n};
            rec.oracle_ns = timed([&] { oracle = det_bareiss(build_power_matrix(spec)); });
            rec.closed_value = to_string(closed);
            rec.oracle_value = to_string(oracle);
            rec.equal = closed == oracle;
            add_record(report, std::move(rec));
        }
}

void run_eq2(const GridSpec& g, VerificationReport& report) {
    HoradamSequence fib(fibonacci_params());
    for (long r = g.r.lo; r <= g.r.hi; ++r)
        for (long s = g.s.lo; s <= g.s.hi; ++s)
            for (long k = g.k.lo; k <= g.k.hi; ++k)
                for (long n = g.n.lo; n <= g.n.hi; ++n) {
                    CaseRecord rec;
                    rec.formula = "eq2";
                    rec.inputs = {{"r", r}, {"s", s}, {"k", k}, {"n", n}};
                    Rational closed, oracle;
                    rec.closed_ns = timed([&] { closed = power_det_fib_general(r, s, k, n); });
                    const PowerMatrixSpec spec{fibonacci_params(), r, s, k, n};
                    rec.oracle_ns =
                        timed([&] { oracle = det_bareiss(build_power_matrix(spec, fib)); });
                    rec.closed_value = to_string(closed);
                    rec.oracle_value = to_string(oracle);
                    rec.equal = closed == oracle;
                    add_record(report, std::move(rec));
                }
}

void run_thm5(const GridSpec& g, VerificationReport& report) {
    for (long a0 = g.a0.lo; a0 <= g.a0.hi; ++a0)
        for (long a1 = g.a1.lo; a1 <= g.a1.hi; ++a1)
            for (long c1 = g.c1.lo; c1 <= g.c1.hi; ++c1)
                for (long c2 = g.c2.lo; c2 <= g.c2.hi; ++c2) {
                    if (c2 == 0) continue;
                    const RecurrenceParams params(a0, a1, c1, c2);
                    HoradamSequence w(params);
                    HoradamSequence u(fundamental_params(c1, c2));
                    for (long r = g.r.lo; r <= g.r.hi; ++r)
                        for (long s = g.s.lo; s <= g.s.hi; ++s)
                            for (long k = g.k.lo; k <= g.k.hi; ++k)
                                for (long n = g.n.lo; n <= g.n.hi; ++n) {
                                    CaseRecord rec;
                                    rec.formula = "thm5";
                                    rec.inputs = {{"a0", a0}, {"a1", a1}, {"c1", c1},
                                                  {"c2", c2}, {"r", r},   {"s", s},
                                                  {"k", k},   {"n", n}};
                                    const PowerMatrixSpec spec{params, r, s, k, n};
                                    Rational closed, oracle;
                                    rec.closed_ns = timed([&] { closed = power_det(spec, u); });
                                    rec.oracle_ns = timed([&] {
                                        oracle = det_bareiss(build_power_matrix(spec, w));
                                    });
                                    rec.closed_value = to_string(closed);
                                    rec.oracle_value = to_string(oracle);
                                    rec.equal = closed == oracle;
                                    add_record(report, std::move(rec));
                                }
                }
}

void run_thm7(const GridSpec& g, VerificationReport& report) {
    SplitMix64 rng(g.sample.seed);
    for (std::size_t c = 0; c < g.sample.count; ++c) {
        const long a0 = rng.uniform(g.a0.lo, g.a0.hi);
        const long a1 = rng.uniform(g.a1.lo, g.a1.hi);
        const long c1 = rng.uniform(g.c1.lo, g.c1.hi);
        long c2 = 0;
        while (c2 == 0) c2 = rng.uniform(g.c2.lo, g.c2.hi);
        const long r = rng.uniform(g.r.lo, std::min(g.r.hi, 3L));
        const long s = rng.uniform(g.s.lo, g.s.hi);
        const long k = rng.uniform(g.k.lo, g.k.hi);
        const long n = rng.uniform(g.n.lo, g.n.hi);
        std::vector<long> d, e;
        for (long t = 0; t < r; ++t) {
            d.push_back(rng.uniform(g.sample.lo, g.sample.hi));
            e.push_back(rng.uniform(g.sample.lo, g.sample.hi));
        }
        const RecurrenceParams params(a0, a1, c1, c2);
        const ProductMatrixSpec spec{params, r, s, k, n, d, e};
        CaseRecord rec;
        rec.formula = "thm7";
        rec.inputs = {{"a0", a0}, {"a1", a1}, {"c1", c1}, {"c2", c2}, {"r", r},
                      {"s", s},   {"k", k},   {"n", n},   {"d", d},   {"e", e}};
        Rational closed, oracle;
        rec.closed_ns = timed([&] { closed = product_det(spec); });
        rec.oracle_ns = timed([&] { oracle = det_bareiss(build_product_matrix(spec)); });
        rec.closed_value = to_string(closed);
        rec.oracle_value = to_string(oracle);
        rec.equal = closed == oracle;
        add_record(report, std::move(rec));
    }
}

void run_cor8(const GridSpec& g, VerificationReport& report) {
    for (long r = g.r.lo; r <= std::min(g.r.hi, 3L); ++r)
        for (long s = g.s.lo; s <= g.s.hi; ++s)
            for (long k = g.k.lo; k <= g.k.hi; ++k) {
                CaseRecord rec;
                rec.formula = "cor8";
                rec.inputs = {{"r", r}, {"s", s}, {"k", k}};
                const ProductMatrixSpec spec = basic_power_spec(r, s, k);
                Rational closed, oracle;
                rec.closed_ns = timed([&] { closed = basic_power_det(r, s, k); });
                rec.oracle_ns = timed([&] { oracle = det_bareiss(build_product_matrix(spec)); });
                const Rational general = product_det(spec);
                rec.closed_value = to_string(closed);
                rec.oracle_value = to_string(oracle);
                rec.equal = closed == oracle && closed == general;
                add_record(report, std::move(rec));
            }
}

void run_cor9(const GridSpec& g, VerificationReport& report) {
    for (long a0 = g.a0.lo; a0 <= g.a0.hi; ++a0)
        for (long a1 = g.a1.lo; a1 <= g.a1.hi; ++a1)
            for (long c1 = g.c1.lo; c1 <= g.c1.hi; ++c1)
                for (long c2 = g.c2.lo; c2 <= g.c2.hi; ++c2) {
                    if (c2 == 0) continue;
                    const RecurrenceParams params(a0, a1, c1, c2);
                    for (long r = g.r.lo; r <= std::min(g.r.hi, 3L); ++r)
                        for (long s = g.s.lo; s <= g.s.hi; ++s)
                            for (long k = g.k.lo; k <= g.k.hi; ++k)
                                for (long n = g.n.lo; n <= g.n.hi; ++n)
                                    for (long p = g.p.lo; p <= g.p.hi; ++p) {
                                        CaseRecord rec;
                                        rec.formula = "cor9";
                                        rec.inputs = {{"a0", a0}, {"a1", a1}, {"c1", c1},
                                                      {"c2", c2}, {"r", r},   {"s", s},
                                                      {"k", k},   {"n", n},   {"p", p}};
                                        const ProductMatrixSpec spec =
                                            stepped_product_spec(params, r, s, k, n, p);
                                        Rational closed, oracle;
                                        rec.closed_ns = timed([&] {
                                            closed = stepped_product_det(params, r, s, k, n, p);
                                        });
                                        rec.oracle_ns = timed([&] {
                                            oracle = det_bareiss(build_product_matrix(spec));
                                        });
                                        const Rational general = product_det(spec);
                                        rec.closed_value = to_string(closed);
                                        rec.oracle_value = to_string(oracle);
                                        rec.equal = closed == oracle && closed == general;
                                        add_record(report, std::move(rec));
                                    }
                }
}

void run_lemma(const GridSpec& g, const std::string& id, VerificationReport& report) {
    long cap = 4;
    bool (*check)(long) = nullptr;
    if (id == "lemma3") {
        check = linear_power_det_check;
    } else if (id == "lemma4") {
        check = bilinear_power_det_check;
        cap = 3;
    } else {
        check = shifted_factor_det_check;
    }
    for (long r = std::max(g.r.lo, 0L); r <= std::min(g.r.hi, cap); ++r) {
        CaseRecord rec;
        rec.formula = id;
        rec.inputs = {{"r", r}};
        bool ok = false;
        rec.closed_ns = timed([&] { ok = check(r); });
        rec.oracle_ns = 0;  // both polynomials are expanded inside the check
        rec.closed_value = ok ? "true" : "false";
        rec.oracle_value = "true";
        rec.equal = ok;
        add_record(report, std::move(rec));
    }
}

void run_desnanot(const GridSpec& g, VerificationReport& report) {
    SplitMix64 rng(g.sample.seed);
    for (std::size_t dim : g.dims) {
        if (dim < 3) throw std::invalid_argument("desnanot: dims must be >= 3");
        for (std::size_t c = 0; c < g.cases_per_dim; ++c) {
            ExactMatrix m(dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m.at(i, j) = rng.uniform(g.entry.lo, g.entry.hi);
            CaseRecord rec;
            rec.formula = "desnanot";
            rec.inputs = {{"dim", dim}, {"case", c}, {"seed", g.sample.seed}};
            bool dj_ok = false;
            Rational condensed, eliminated;
            rec.closed_ns = timed([&] {
                dj_ok = desnanot_jacobi_check(m);
                condensed = det_dodgson(m);
            });
            rec.oracle_ns = timed([&] { eliminated = det_bareiss(m); });
            rec.closed_value = to_string(condensed);
            rec.oracle_value = to_string(eliminated);
            rec.equal = dj_ok && condensed == eliminated;
            add_record(report, std::move(rec));
        }
    }
}

}  // namespace

VerificationReport run_verification(const GridSpec& grid, const std::vector<std::string>& targets) {
    const auto& known = verification_targets();
    for (const std::string& t : targets)
        if (std::find(known.begin(), known.end(), t) == known.end())
            throw std::invalid_argument("run_verification: unknown target '" + t + "'");

    VerificationReport report;
    report.grid = grid;
    for (const std::string& id : known) {
        if (std::find(targets.begin(), targets.end(), id) == targets.end()) continue;
        report.targets.push_back(id);
        if (id == "catalan") run_catalan(grid, report);
        else if (id == "eq1") run_eq1(grid, report);
        else if (id == "eq2") run_eq2(grid, report);
        else if (id == "thm5") run_thm5(grid, report);
        else if (id == "thm7") run_thm7(grid, report);
        else if (id == "cor8") run_cor8(grid, report);
        else if (id == "cor9") run_cor9(grid, report);
        else if (id == "lemma3" || id == "lemma4" || id == "lemma6") run_lemma(grid, id, report);
        else run_desnanot(grid, report);
    }
    report.total = report.records.size();
    for (const CaseRecord& r : report.records) {
        if (r.equal) ++report.passed;
        else ++report.failed;
    }
    return report;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const CaseRecord& r : records) {
        nlohmann::json rec;
        rec["formula"] = r.formula;
        rec["inputs"] = r.inputs;
        rec["closed_value"] = r.closed_value;
        rec["oracle_value"] = r.oracle_value;
        rec["equal"] = r.equal;
        rec["elapsed_ns"] =
            nlohmann::json{{"closed", r.closed_ns}, {"oracle", r.oracle_ns}};
        recs.push_back(std::move(rec));
    }
    nlohmann::json out;
    out["schema_version"] = 1;
    out["targets"] = targets;
    out["grid"] = grid.to_json();
    out["records"] = std::move(recs);
    out["summary"] =
        nlohmann::json{{"total", total}, {"passed", passed}, {"failed", failed}};
    return out;
}

std::vector<BenchRecord> run_bench(long r_max, const RecurrenceParams& params, long s, long k,
                                   long n) {
    std::vector<BenchRecord> out;
    for (long r = 1; r <= r_max; ++r) {
        const PowerMatrixSpec spec{params, r, s, k, n};
        const ExactMatrix m = build_power_matrix(spec);

        BenchRecord rec;
        rec.r = r;
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) {
                const Rational& q = m.at(i, j);
                rec.max_entry_bits = std::max(
                    {rec.max_entry_bits, mpz_sizeinbase(q.get_num_mpz_t(), 2),
                     mpz_sizeinbase(q.get_den_mpz_t(), 2)});
            }

        Rational closed, bareiss, dodgson;
        std::array<std::uint64_t, 5> samples{};
        for (auto& t : samples)
            t = timed([&] {
                HoradamSequence u(fundamental_params(params.c1, params.c2));
                closed = power_det(spec, u);
            });
        std::sort(samples.begin(), samples.end());
        rec.closed_ns = samples[2];
        for (auto& t : samples) t = timed([&] { bareiss = det_bareiss(m); });
        std::sort(samples.begin(), samples.end());
        rec.bareiss_ns = samples[2];
        for (auto& t : samples) t = timed([&] { dodgson = det_dodgson(m); });
        std::sort(samples.begin(), samples.end());
        rec.dodgson_ns = samples[2];

        rec.values_equal = closed == bareiss && bareiss == dodgson;
        out.push_back(rec);
    }
    return out;
}

nlohmann::json bench_to_json(const std::vector<BenchRecord>& records,
                             const RecurrenceParams& params, long s, long k, long n) {
    nlohmann::json recs = nlohmann::json::array();
    for (const BenchRecord& r : records) {
        nlohmann::json rec;
        rec["r"] = r.r;
        rec["max_entry_bits"] = r.max_entry_bits;
        rec["timings_ns"] = nlohmann::json{
            {"closed_form", r.closed_ns}, {"bareiss", r.bareiss_ns}, {"dodgson", r.dodgson_ns}};
        rec["values_equal"] = r.values_equal;
        recs.push_back(std::move(rec));
    }
    nlohmann::json out;
    out["schema_version"] = 1;
    out["params"] = nlohmann::json{{"a0", to_string(params.a0)},
                                   {"a1", to_string(params.a1)},
                                   {"c1", to_string(params.c1)},
                                   {"c2", to_string(params.c2)}};
    out["s"] = s;
    out["k"] = k;
    out["n"] = n;
    out["records"] = std::move(recs);
    return out;
}

}  // namespace fibdet
