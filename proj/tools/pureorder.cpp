// Command-line front end: field analysis, Wieferich predicate,
// discriminants, integral bases, monogeneity verdicts, result
// verification against the round-2 oracle, and JSONL sweeps.

#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "pureorder/serialize.hpp"

namespace po = pureorder;
using po::ZZ;
using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "pureorder.v1";

struct Options {
    unsigned long seed = 0;
    unsigned long factor_budget = 4'000'000;
    long search_bound = 10'000;
    unsigned jobs = 1;
    std::string out;
    bool json_mode = false;
    bool explain = false;
};

po::FactorBudget make_budget(const Options& o)
{
    po::FactorBudget b;
    b.rho_iterations = o.factor_budget;
    b.seed = o.seed;
    return b;
}

// output goes to --out when given, else stdout
class Sink {
  public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

ZZ parse_zz(const std::string& s)
{
    ZZ v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw CLI::ValidationError("expected a decimal integer, got " + s);
    return v;
}

json explain_json(const po::PureField& field, const po::FactorBudget&)
{
    json ex;
    json dedekind = json::array();
    const po::IntPoly a = field.minpoly();
    for (std::size_t j = 0; j < field.num_primes(); j++)
        dedekind.push_back(po::to_json(po::dedekind_test(a, field.prime(j))));
    if (!mpz_divisible_ui_p(field.a.get_mpz_t(), field.p))
        dedekind.push_back(po::to_json(po::dedekind_test(
            po::IntPoly::shifted_radical(field.p, field.a), ZZ(field.p))));
    ex["dedekind"] = dedekind;
    if (field.wieferich) {
        ex["chi"] = po::to_json(po::chi_of_beta_prime(field.p, field.a));
        json structure = json::array();
        for (unsigned k = 1; k < field.p; k++) {
            const auto rep =
                po::matrix_power_structure(field.p, field.a, k);
            structure.push_back(
                {{"k", std::to_string(k)}, {"pass", rep.all_pass()}});
        }
        ex["structure"] = structure;
    }
    return ex;
}

void print_field_text(std::ostream& os, const po::PureField& field)
{
    os << "field: Q(" << po::radical_name(field) << ")\n";
    os << "p: " << field.p << "\n";
    os << "a: " << field.a.get_str() << " (input "
       << field.a_input.get_str() << ", scale " << field.scale.get_str()
       << (field.generator_flipped ? ", generator flipped" : "") << ")\n";
    os << "factorization: " << po::to_string(field.fact) << "\n";
    os << "wieferich: " << (field.wieferich ? "true" : "false") << "\n";
    for (std::size_t j = 0; j < field.num_primes(); j++)
        os << "  q=" << field.prime(j).get_str() << " e=" << field.exponent(j)
           << " u=" << field.u[j] << " v=" << field.v[j]
           << " c=" << field.c[j].get_str() << "\n";
}

int cmd_analyze(const Options& opts, unsigned p, const std::string& a_str)
{
    Sink sink(opts.out);
    const po::FactorBudget budget = make_budget(opts);
    const po::PureField field = po::normalize_field(p, parse_zz(a_str), budget);
    const po::MaxOrderResult res = po::assemble_max_order(field);
    if (opts.json_mode) {
        json j = po::to_json(res);
        j["schema"] = kSchema;
        j["command"] = "analyze";
        if (opts.explain)
            j["explain"] = explain_json(field, budget);
        sink.out() << j.dump() << "\n";
        return 0;
    }
    std::ostream& os = sink.out();
    print_field_text(os, field);
    os << "subring factors:\n";
    for (const auto& f : res.factors)
        os << "  " << f.name << "\n";
    os << "integral basis:\n";
    for (const auto& b : res.basis)
        os << "  " << b.name << "\n";
    os << "disc: " << po::to_string(res.disc) << " = "
       << res.disc.value().get_str() << "\n";
    if (opts.explain) {
        const po::IntPoly a = field.minpoly();
        for (std::size_t j = 0; j < field.num_primes(); j++) {
            const auto rep = po::dedekind_test(a, field.prime(j));
            os << "dedekind at q=" << rep.q.get_str() << ": "
               << (rep.q_maximal ? "maximal" : "not maximal") << " (m=" << rep.m
               << ")\n";
        }
        if (!mpz_divisible_ui_p(field.a.get_mpz_t(), field.p)) {
            const auto rep = po::dedekind_test(
                po::IntPoly::shifted_radical(field.p, field.a), ZZ(field.p));
            os << "dedekind at q=" << field.p << " (shifted generator): "
               << (rep.q_maximal ? "maximal" : "not maximal") << " (m=" << rep.m
               << ")\n";
        }
        if (field.wieferich) {
            const auto chi = po::chi_of_beta_prime(field.p, field.a);
            os << "chi: " << po::to_string(chi.chi) << "\n";
            os << "chi(-1): " << chi.chi_minus1.get_str()
               << ", Z[beta'] p-maximal: "
               << (chi.p_maximal_zbetaprime ? "true" : "false") << "\n";
            bool all = true;
            for (unsigned k = 1; k < field.p; k++)
                all = all &&
                      po::matrix_power_structure(field.p, field.a, k)
                          .all_pass();
            os << "power structure checks: " << (all ? "pass" : "FAIL")
               << "\n";
        }
    }
    return 0;
}

int cmd_wieferich(const Options& opts, const std::string& q_str,
                  const std::string& r_str)
{
    Sink sink(opts.out);
    const ZZ q = parse_zz(q_str), r = parse_zz(r_str);
    const bool w = po::is_wieferich(q, r);
    if (opts.json_mode)
        sink.out() << json{{"schema", kSchema},
                           {"command", "wieferich"},
                           {"q", q.get_str()},
                           {"r", r.get_str()},
                           {"wieferich", w}}
                          .dump()
                   << "\n";
    else
        sink.out() << (w ? "true" : "false") << "\n";
    return 0;
}

int cmd_disc(const Options& opts, unsigned p, const std::string& a_str)
{
    Sink sink(opts.out);
    const po::PureField field =
        po::normalize_field(p, parse_zz(a_str), make_budget(opts));
    const po::Factorization d = po::disc_formula(field);
    if (opts.json_mode) {
        json j{{"schema", kSchema},
               {"command", "disc"},
               {"field", po::to_json(field)},
               {"disc", po::to_json(d)}};
        sink.out() << j.dump() << "\n";
    } else {
        sink.out() << po::to_string(d) << " = " << d.value().get_str() << "\n";
    }
    return 0;
}

int cmd_basis(const Options& opts, unsigned p, const std::string& a_str)
{
    Sink sink(opts.out);
    const po::PureField field =
        po::normalize_field(p, parse_zz(a_str), make_budget(opts));
    const auto basis = po::integral_basis(field);
    if (opts.json_mode) {
        json arr = json::array();
        for (const auto& b : basis)
            arr.push_back({{"name", b.name}, {"element", po::to_json(b.elem)}});
        json j{{"schema", kSchema},
               {"command", "basis"},
               {"field", po::to_json(field)},
               {"basis", arr}};
        sink.out() << j.dump() << "\n";
    } else {
        for (const auto& b : basis)
            sink.out() << b.name << "\n";
    }
    return 0;
}

int cmd_monogenic(const Options& opts, unsigned p, const std::string& a_str,
                  const std::string& q1_str, const std::string& q2_str)
{
    Sink sink(opts.out);
    const po::FactorBudget budget = make_budget(opts);
    po::MonogeneityVerdict v;
    if (!q1_str.empty()) {
        if (p != 3)
            throw CLI::ValidationError(
                "--q1/--q2 applies to degree p = 3 only");
        v = po::cubic_mixed_search(parse_zz(q1_str), parse_zz(q2_str),
                                   ZZ(opts.search_bound), budget);
    } else {
        const po::PureField field =
            po::normalize_field(p, parse_zz(a_str), budget);
        v = po::uniform_exponent_criterion(field);
        if (v.status == po::MonoStatus::CriterionInapplicable && p == 3 &&
            field.num_primes() == 2 && field.exponent(0) + field.exponent(1) ==
                                           3) {
            // the two-prime cubic shape has the two-sided criterion
            const bool first_is_linear = field.exponent(0) == 1;
            const ZZ q1 = first_is_linear ? field.prime(0) : field.prime(1);
            const ZZ q2 = first_is_linear ? field.prime(1) : field.prime(0);
            v = po::cubic_mixed_search(q1, q2, ZZ(opts.search_bound), budget);
        }
    }
    if (opts.json_mode) {
        json j = po::to_json(v);
        j["schema"] = kSchema;
        j["command"] = "monogenic";
        sink.out() << j.dump() << "\n";
    } else {
        std::ostream& os = sink.out();
        switch (v.status) {
        case po::MonoStatus::Monogenic:
            os << "monogenic, generator " << v.generator->name;
            if (!v.solutions.empty())
                os << ", solution (" << v.solutions[0].first.get_str() << ", "
                   << v.solutions[0].second.get_str() << ")";
            os << "\n";
            break;
        case po::MonoStatus::NotMonogenicWithinBound:
            os << "no generator found: " << v.equation
               << " has no solution with the search variable up to "
               << v.bound.get_str() << "\n";
            break;
        case po::MonoStatus::CriterionInapplicable:
            os << "criterion inapplicable\n";
            break;
        }
    }
    return 0;
}

int cmd_verify(const Options& opts, unsigned p, const std::string& a_str)
{
    Sink sink(opts.out);
    const po::FactorBudget budget = make_budget(opts);
    const po::PureField field = po::normalize_field(p, parse_zz(a_str), budget);
    const po::MaxOrderResult res = po::assemble_max_order(field);
    const po::AuditReport rep = po::audit(res, budget);
    if (opts.json_mode) {
        json j = po::to_json(rep);
        j["schema"] = kSchema;
        j["command"] = "verify";
        j["order"] = po::to_json(res.order);
        sink.out() << j.dump() << "\n";
    } else {
        std::ostream& os = sink.out();
        os << "audit " << rep.field_id << "\n";
        for (const auto& c : rep.checks) {
            os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
            if (!c.detail.empty())
                os << " (" << c.detail << ")";
            os << "\n";
        }
        os << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 1;
}

std::vector<unsigned> parse_p_list(const std::string& s)
{
    std::vector<unsigned> ps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        ps.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (ps.empty())
        throw CLI::ValidationError("empty degree list");
    return ps;
}

std::pair<long, long> parse_range(const std::string& s)
{
    const auto pos = s.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("expected a range lo..hi, got " + s);
    return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

int cmd_sweep(const Options& opts, const std::string& p_list,
              const std::string& a_range)
{
    Sink sink(opts.out);
    const po::FactorBudget budget = make_budget(opts);
    const auto ps = parse_p_list(p_list);
    const auto [alo, ahi] = parse_range(a_range);

    std::vector<std::pair<unsigned, long>> tasks;
    for (unsigned p : ps)
        for (long a = alo; a <= ahi; a++)
            tasks.emplace_back(p, a);

    // one JSONL line per valid field; invalid bases produce nothing
    auto run_task = [&](std::size_t i) -> std::pair<std::string, bool> {
        const auto [p, a] = tasks[i];
        po::PureField field;
        try {
            field = po::normalize_field(p, ZZ(a), budget);
        } catch (const po::ReducibleDefiningPoly&) {
            return {"", true};
        }
        json j{{"schema", kSchema},
               {"p", std::to_string(p)},
               {"a", std::to_string(a)},
               {"a_normalized", field.a.get_str()},
               {"wieferich", field.wieferich}};
        bool agree = false;
        try {
            const po::MaxOrderResult res = po::assemble_max_order(field);
            const po::OrderLattice oracle =
                po::round2_max_order(p, ZZ(a), budget);
            agree = res.order == oracle;
            j["disc"] = res.disc.value().get_str();
            j["disc_factored"] = po::to_string(res.disc);
            j["x_exponent"] = std::to_string(res.x_exponent);
        } catch (const po::Error& e) {
            j["error"] = e.what();
        }
        j["agree"] = agree;
        return {j.dump(), agree};
    };

    std::vector<std::string> lines(tasks.size());
    std::vector<char> done(tasks.size(), 0);
    bool all_agree = true;
    std::mutex mu;
    std::condition_variable cv;
    std::size_t next = 0;

    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::thread> workers;
    std::size_t cursor = 0;
    for (unsigned w = 0; w < jobs; w++)
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (cursor >= tasks.size())
                        return;
                    i = cursor++;
                }
                auto [line, agree] = run_task(i);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    lines[i] = std::move(line);
                    done[i] = 1;
                    all_agree = all_agree && agree;
                }
                cv.notify_all();
            }
        });

    // single writer, strictly in task order
    {
        std::unique_lock<std::mutex> lk(mu);
        while (next < tasks.size()) {
            cv.wait(lk, [&] { return next >= tasks.size() || done[next]; });
            while (next < tasks.size() && done[next]) {
                if (!lines[next].empty())
                    sink.out() << lines[next] << "\n";
                next++;
            }
        }
    }
    for (auto& w : workers)
        w.join();
    sink.out().flush();

    std::size_t emitted = 0;
    for (const auto& l : lines)
        emitted += !l.empty();
    std::cerr << "sweep: " << emitted << " fields, "
              << (all_agree ? "zero disagreements" : "DISAGREEMENTS FOUND")
              << "\n";
    return all_agree ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"maximal orders of radical extensions of odd prime degree"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand

    Options opts;
    app.add_flag("--json", opts.json_mode, "emit JSON instead of text")
        ->envname("PUREORDER_JSON");
    app.add_option("--seed", opts.seed, "seed for randomized internals")
        ->envname("PUREORDER_SEED");
    app.add_option("--factor-budget", opts.factor_budget,
                   "rho iteration cap per factorization attempt")
        ->envname("PUREORDER_FACTOR_BUDGET");
    app.add_option("--search-bound", opts.search_bound,
                   "bound on the searched variable of the cubic equations")
        ->envname("PUREORDER_SEARCH_BOUND");
    app.add_option("--jobs", opts.jobs, "sweep worker count")
        ->envname("PUREORDER_JOBS");
    app.add_option("--out", opts.out, "write output to this file")
        ->envname("PUREORDER_OUT");
    app.add_flag("--explain", opts.explain,
                 "attach Dedekind reports and the Wieferich chi report");

    unsigned p = 0;
    std::string a_str, q1_str, q2_str, q_str, r_str, p_list, a_range;

    CLI::App* analyze = app.add_subcommand("analyze", "full maximal-order analysis");
    analyze->add_option("--p", p, "odd prime degree")->required();
    analyze->add_option("--a", a_str, "base of the radical")->required();

    CLI::App* wief = app.add_subcommand("wieferich", "Wieferich predicate q^2 | r^(q-1) - 1");
    wief->add_option("q", q_str, "odd prime")->required();
    wief->add_option("r", r_str, "base")->required();

    CLI::App* disc = app.add_subcommand("disc", "field discriminant, closed form");
    disc->add_option("--p", p)->required();
    disc->add_option("--a", a_str)->required();

    CLI::App* basis = app.add_subcommand("basis", "integral basis");
    basis->add_option("--p", p)->required();
    basis->add_option("--a", a_str)->required();

    CLI::App* mono = app.add_subcommand("monogenic", "monogeneity verdict");
    mono->add_option("--p", p)->default_val(3u);
    mono->add_option("--a", a_str);
    mono->add_option("--q1", q1_str);
    mono->add_option("--q2", q2_str);

    CLI::App* verify = app.add_subcommand("verify", "audit against the round-2 oracle");
    verify->add_option("--p", p)->required();
    verify->add_option("--a", a_str)->required();

    CLI::App* sweep = app.add_subcommand("sweep", "JSONL sweep with oracle agreement");
    sweep->add_option("--p", p_list, "comma-separated degrees")->required();
    sweep->add_option("--a", a_range, "base range lo..hi")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(opts, p, a_str);
        if (wief->parsed())
            return cmd_wieferich(opts, q_str, r_str);
        if (disc->parsed())
            return cmd_disc(opts, p, a_str);
        if (basis->parsed())
            return cmd_basis(opts, p, a_str);
        if (mono->parsed()) {
            if (q1_str.empty() != q2_str.empty())
                throw CLI::ValidationError("--q1 and --q2 come together");
            if (q1_str.empty() && a_str.empty())
                throw CLI::ValidationError("need --a or --q1/--q2");
            return cmd_monogenic(opts, p, a_str, q1_str, q2_str);
        }
        if (verify->parsed())
            return cmd_verify(opts, p, a_str);
        if (sweep->parsed())
            return cmd_sweep(opts, p_list, a_range);
    } catch (const po::FactorBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const po::DegreeNotOddPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const po::ReducibleDefiningPoly& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const po::NotCoprime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const po::BaseIsUnit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const po::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
