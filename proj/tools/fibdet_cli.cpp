// fibdet command line: exact evaluation of second-order recurrence sequences,
// their power/product determinants, closed-form counterparts, symbolic
// certificates, and verification/benchmark campaigns.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibdet/closedforms.hpp"
#include "fibdet/harness.hpp"
#include "fibdet/identities.hpp"
#include "fibdet/matrices.hpp"
#include "fibdet/sympoly.hpp"

namespace {

using fibdet::Rational;

struct ParamFlags {
    std::string a0 = "0", a1 = "1", c1 = "1", c2 = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--a0", a0, "initial term W_0 (rational)");
        cmd->add_option("--a1", a1, "initial term W_1 (rational)");
        cmd->add_option("--c1", c1, "recurrence coefficient c1 (rational)");
        cmd->add_option("--c2", c2, "recurrence coefficient c2 (rational, nonzero)");
    }

    fibdet::RecurrenceParams parse() const {
        return fibdet::RecurrenceParams(fibdet::parse_rational(a0), fibdet::parse_rational(a1),
                                        fibdet::parse_rational(c1), fibdet::parse_rational(c2));
    }
};

nlohmann::json trace_json(const fibdet::ClosedFormResult& res) {
    nlohmann::json factors = nlohmann::json::array();
    for (const fibdet::Factor& f : res.factors) {
        nlohmann::json entry;
        entry["name"] = f.name;
        entry["value"] = fibdet::to_string(f.value);
        factors.push_back(std::move(entry));
    }
    nlohmann::json out;
    out["value"] = fibdet::to_string(res.value);
    out["sign_exponent"] = res.sign_exponent;
    out["factors"] = std::move(factors);
    return out;
}

int run_seq(const ParamFlags& params, long from, long to) {
    fibdet::HoradamSequence seq(params.parse());
    for (const Rational& value : seq.terms_range(from, to))
        std::cout << from++ << '\t' << fibdet::to_string(value) << '\n';
    return 0;
}

int run_det(const std::string& engine, const std::string& path) {
    fibdet::ExactMatrix m = [&] {
        if (path == "-") return fibdet::read_matrix(std::cin);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("det: cannot open '" + path + "'");
        return fibdet::read_matrix(in);
    }();
    Rational det;
    if (engine == "cofactor") det = fibdet::det_cofactor(m);
    else if (engine == "bareiss") det = fibdet::det_bareiss(m);
    else det = fibdet::det_dodgson(m);
    std::cout << fibdet::to_string(det) << '\n';
    return 0;
}

int run_closed(const std::string& formula, const ParamFlags& params, long r, long s, long k,
               long n, long p, const std::vector<long>& d, const std::vector<long>& e,
               bool trace) {
    fibdet::ClosedFormResult res;
    if (formula == "eq1") {
        res = fibdet::power_det_fib_traced(r, n);
    } else if (formula == "eq2") {
        res = fibdet::power_det_fib_general_traced(r, s, k, n);
    } else if (formula == "thm5") {
        res = fibdet::power_det_traced({params.parse(), r, s, k, n});
    } else if (formula == "thm7") {
        res = fibdet::product_det_traced({params.parse(), r, s, k, n, d, e});
    } else if (formula == "cor8") {
        res = fibdet::basic_power_det_traced(r, s, k);
    } else {
        res = fibdet::stepped_product_det_traced(params.parse(), r, s, k, n, p);
    }
    if (trace) std::cout << trace_json(res).dump(2) << '\n';
    else std::cout << fibdet::to_string(res.value) << '\n';
    return 0;
}

int run_symbolic(int lemma, long r, bool dump) {
    fibdet::IdentitySides sides;
    if (lemma == 3) sides = fibdet::linear_power_det_sides(r);
    else if (lemma == 4) sides = fibdet::bilinear_power_det_sides(r);
    else sides = fibdet::shifted_factor_det_sides(r);
    const bool ok = sides.det == sides.factored;
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    if (dump) {
        std::cout << "det:      " << sides.det.str() << '\n';
        std::cout << "factored: " << sides.factored.str() << '\n';
    }
    return ok ? 0 : 1;
}

int run_verify(const std::string& target, const std::string& grid_path,
               const std::string& out_path) {
    fibdet::GridSpec grid = fibdet::GridSpec::defaults(target);
    if (!grid_path.empty()) {
        std::ifstream in(grid_path);
        if (!in) throw std::invalid_argument("verify: cannot open '" + grid_path + "'");
        grid = fibdet::GridSpec::from_json(nlohmann::json::parse(in), target);
    }
    const fibdet::VerificationReport report = fibdet::run_verification(grid, {target});
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("verify: cannot open '" + out_path + "'");
        out << report.to_json().dump(2) << '\n';
    }
    std::cout << "target=" << target << " total=" << report.total << " passed=" << report.passed
              << " failed=" << report.failed << '\n';
    return report.failed == 0 ? 0 : 1;
}

int run_bench_cmd(long rmax, const ParamFlags& params, long s, long k, long n,
                  const std::string& out_path) {
    const fibdet::RecurrenceParams p = params.parse();
    const auto records = fibdet::run_bench(rmax, p, s, k, n);
    std::cout << "r\tbits\tclosed_ns\tbareiss_ns\tdodgson_ns\tequal\n";
    bool all_equal = true;
    for (const fibdet::BenchRecord& rec : records) {
        std::cout << rec.r << '\t' << rec.max_entry_bits << '\t' << rec.closed_ns << '\t'
                  << rec.bareiss_ns << '\t' << rec.dodgson_ns << '\t'
                  << (rec.values_equal ? "yes" : "NO") << '\n';
        all_equal = all_equal && rec.values_equal;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("bench: cannot open '" + out_path + "'");
        out << fibdet::bench_to_json(records, p, s, k, n).dump(2) << '\n';
    }
    return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinant identities for second-order linear recurrences"};
    app.require_subcommand(1);

    // seq
    auto* seq = app.add_subcommand("seq", "print W_n for n in [from, to]");
    ParamFlags seq_params;
    seq_params.attach(seq);
    long from = 0, to = 10;
    seq->add_option("--from", from, "first index")->required();
    seq->add_option("--to", to, "last index")->required();

    // det
    auto* det = app.add_subcommand("det", "exact determinant of a matrix file");
    std::string engine = "bareiss", matrix_path;
    det->add_option("--engine", engine, "cofactor|bareiss|dodgson")
        ->check(CLI::IsMember({"cofactor", "bareiss", "dodgson"}));
    det->add_option("--matrix", matrix_path, "matrix file ('-' for stdin)")->required();

    // closed
    auto* closed = app.add_subcommand("closed", "evaluate a closed-form determinant");
    std::string formula;
    ParamFlags closed_params;
    long cr = 0, cs = 0, ck = 1, cn = 0, cp = 1;
    std::vector<long> cd, ce;
    bool trace = false;
    closed->add_option("--formula", formula, "eq1|eq2|thm5|thm7|cor8|cor9")
        ->required()
        ->check(CLI::IsMember({"eq1", "eq2", "thm5", "thm7", "cor8", "cor9"}));
    closed_params.attach(closed);
    closed->add_option("--r", cr, "matrix co-dimension / entry power")->required();
    closed->add_option("--s", cs, "index offset");
    closed->add_option("--k", ck, "index step");
    closed->add_option("--n", cn, "row shift");
    closed->add_option("--p", cp, "stepped pattern offset (cor9)");
    closed->add_option("--d", cd, "comma-separated d_1..d_r (thm7)")->delimiter(',');
    closed->add_option("--e", ce, "comma-separated e_1..e_r (thm7)")->delimiter(',');
    closed->add_flag("--trace", trace, "print the factor trace as JSON");

    // symbolic
    auto* symbolic = app.add_subcommand("symbolic", "certify a factorization identity");
    int lemma = 3;
    long sr = 0;
    bool dump = false;
    symbolic->add_option("--lemma", lemma, "3|4|6")->required()->check(CLI::IsMember({3, 4, 6}));
    symbolic->add_option("--r", sr, "identity size")->required();
    symbolic->add_flag("--dump", dump, "print both canonical polynomials");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string target, grid_path, report_path;
    verify->add_option("target", target, "one of: catalan eq1 eq2 thm5 thm7 cor8 cor9 lemma3 lemma4 lemma6 desnanot")
        ->required();
    verify->add_option("--grid", grid_path, "grid JSON file (defaults are target-specific)");
    verify->add_option("--out", report_path, "write the JSON report here");

    // bench
    auto* bench = app.add_subcommand("bench", "closed form vs elimination timings");
    ParamFlags bench_params;
    long rmax = 8, bs = 0, bk = 1, bn = 0;
    std::string bench_out;
    bench->add_option("--rmax", rmax, "largest r (matrices up to (r+1)x(r+1))")->required();
    bench_params.attach(bench);
    bench->add_option("--s", bs, "index offset");
    bench->add_option("--k", bk, "index step");
    bench->add_option("--n", bn, "row shift");
    bench->add_option("--out", bench_out, "write the JSON records here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (seq->parsed()) return run_seq(seq_params, from, to);
        if (det->parsed()) return run_det(engine, matrix_path);
        if (closed->parsed())
            return run_closed(formula, closed_params, cr, cs, ck, cn, cp, cd, ce, trace);
        if (symbolic->parsed()) return run_symbolic(lemma, sr, dump);
        if (verify->parsed()) return run_verify(target, grid_path, report_path);
        if (bench->parsed()) return run_bench_cmd(rmax, bench_params, bs, bk, bn, bench_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
