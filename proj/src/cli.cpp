#include "liecon/cli.hpp"

#include "liecon/constants.hpp"
#include "liecon/derivation.hpp"
#include "liecon/pseudodet.hpp"
#include "liecon/subalgebra.hpp"
#include "liecon/text.hpp"
#include "liecon/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace liecon::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    int jobs = 1;

    void emit(const nlohmann::json& j) const { out << j.dump(2) << '\n'; }
};

MultiDegree parse_multidegree(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("multidegree must look like a,b (got '" + text + "')");
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a = text.substr(0, comma);
        const std::string b = text.substr(comma + 1);
        MultiDegree md{std::stoi(a, &used_a), std::stoi(b, &used_b)};
        if (used_a != a.size() || used_b != b.size() || md.deg_x < 0 || md.deg_y < 0 || md.total() < 1) {
            throw std::invalid_argument("range");
        }
        return md;
    } catch (const std::logic_error&) {
        throw UsageError("multidegree must be two non-negative integers a,b with a + b >= 1 (got '" + text + "')");
    }
}

HallWord parse_hall_word(const std::string& text) {
    const auto word = as_hall_word(parse_monomial(text));
    if (!word) throw UsageError("'" + text + "' is not a Hall basis word");
    return *word;
}

PseudoDetShape parse_shape(const std::string& text) {
    if (text == "all") return PseudoDetShape::all;
    if (text == "k0" || text == "k0-only") return PseudoDetShape::k0_only;
    throw UsageError("shape must be 'all' or 'k0' (got '" + text + "')");
}

void require_degree(int n, int min, const char* what) {
    if (n < min) throw UsageError(std::string(what) + " must be at least " + std::to_string(min));
    if (n > kMaxHallDegree) throw UsageError(std::string(what) + " must be at most " + std::to_string(kMaxHallDegree));
}

std::string md_text(MultiDegree md) {
    std::ostringstream os;
    os << md;
    return os.str();
}

nlohmann::json word_entry(HallWord w) {
    return {{"text", w.to_string()},
            {"word", word_to_json(w)},
            {"deg_x", w.multidegree().deg_x},
            {"deg_y", w.multidegree().deg_y}};
}

nlohmann::json poly_entry(const LiePoly& p) { return {{"text", format(p)}, {"terms", to_json(p)}}; }

std::string pseudodet_label(HallWord a, HallWord b, int m, int k) {
    return "U^(" + std::to_string(m) + "," + std::to_string(k) + ")_{" + a.to_string() + ", " + b.to_string() + "}";
}

// --- commands ---------------------------------------------------------------

int cmd_hall(const Context& ctx, std::optional<int> degree, const std::string& multidegree) {
    if (!degree.has_value() == multidegree.empty()) throw UsageError("hall needs exactly one of --degree or --multidegree");
    std::vector<HallWord> words;
    nlohmann::json j;
    if (degree) {
        require_degree(*degree, 1, "--degree");
        words = hall_basis(*degree);
        j["degree"] = *degree;
    } else {
        const MultiDegree md = parse_multidegree(multidegree);
        require_degree(md.total(), 1, "total degree");
        words = hall_basis_multidegree(md);
        j["deg_x"] = md.deg_x;
        j["deg_y"] = md.deg_y;
    }
    if (ctx.json) {
        auto list = nlohmann::json::array();
        for (HallWord w : words) list.push_back(word_entry(w));
        j["count"] = words.size();
        j["words"] = std::move(list);
        ctx.emit(j);
        return kExitOk;
    }
    ctx.out << words.size() << " Hall word(s)\n";
    for (HallWord w : words) ctx.out << std::setw(8) << md_text(w.multidegree()) << "  " << w << '\n';
    return kExitOk;
}

int cmd_normalize(const Context& ctx, const std::string& expr) {
    const LiePoly p = parse(expr);
    if (ctx.json) {
        ctx.emit({{"input", expr}, {"value", poly_entry(p)}});
    } else {
        ctx.out << format(p) << '\n';
    }
    return kExitOk;
}

int cmd_delta(const Context& ctx, const std::string& expr, int power) {
    if (power < 0) throw UsageError("--power must be non-negative");
    const LiePoly p = parse(expr);
    const LiePoly d = delta_power(p, power);
    if (ctx.json) {
        ctx.emit({{"input", poly_entry(p)}, {"power", power}, {"value", poly_entry(d)}});
    } else {
        ctx.out << format(d) << '\n';
    }
    return kExitOk;
}

int cmd_nilindex(const Context& ctx, const std::string& expr) {
    const LiePoly p = parse(expr);
    if (p.is_zero()) throw UsageError("the nilpotency index of 0 is undefined");
    const int n = nilpotency_index(p);
    if (ctx.json) {
        ctx.emit({{"input", poly_entry(p)}, {"nilpotency_index", n}});
    } else {
        ctx.out << n << '\n';
    }
    return kExitOk;
}

int cmd_constants(const Context& ctx, std::optional<int> max_degree, const std::string& multidegree) {
    if (!max_degree.has_value() == multidegree.empty()) {
        throw UsageError("constants needs exactly one of --max-degree or --multidegree");
    }
    if (max_degree) {
        require_degree(*max_degree, 1, "--max-degree");
        const auto report = constants_up_to(*max_degree, ctx.jobs);
        if (ctx.json) {
            ctx.emit(to_json(report));
        } else {
            ctx.out << format_table(report);
        }
        return kExitOk;
    }
    const MultiDegree md = parse_multidegree(multidegree);
    require_degree(md.total(), 1, "total degree");
    const auto dm = delta_matrix(md);
    const auto basis = kernel_basis(md);
    if (ctx.json) {
        auto list = nlohmann::json::array();
        for (const auto& b : basis) list.push_back(to_json(b));
        nlohmann::json j = {{"deg_x", md.deg_x},
                            {"deg_y", md.deg_y},
                            {"component_dim", dm.columns.size()},
                            {"dim", basis.size()},
                            {"basis", std::move(list)}};
        ctx.emit(j);
        return kExitOk;
    }
    ctx.out << md << ": dim L = " << dm.columns.size() << ", dim ker = " << basis.size() << '\n';
    for (const auto& b : basis) ctx.out << "  " << format(b) << '\n';
    return kExitOk;
}

int cmd_pseudodet(const Context& ctx, const std::vector<std::string>& factors, std::optional<int> m,
                  std::optional<int> k, std::optional<int> max_degree, const std::string& shape_text) {
    if (max_degree) {
        if (!factors.empty() || m || k) throw UsageError("pseudodet takes either A B --m --k or --max-degree");
        require_degree(*max_degree, 2, "--max-degree");
        const PseudoDetShape shape = parse_shape(shape_text);
        const auto list = enumerate_constant_pseudodets(*max_degree, shape, ctx.jobs);
        if (ctx.json) {
            auto items = nlohmann::json::array();
            for (const auto& u : list) items.push_back(to_json(u));
            ctx.emit({{"max_degree", *max_degree},
                      {"shape", to_string(shape)},
                      {"count", list.size()},
                      {"pseudodeterminants", std::move(items)}});
            return kExitOk;
        }
        ctx.out << list.size() << " independent constant pseudodeterminant(s), shape " << to_string(shape) << '\n';
        for (const auto& u : list) {
            ctx.out << std::setw(8) << md_text(*u.value.multidegree()) << "  "
                    << pseudodet_label(u.a, u.b, u.m, u.k) << " = " << format(u.value) << '\n';
        }
        return kExitOk;
    }
    if (factors.size() != 2 || !m || !k) throw UsageError("pseudodet needs two Hall words A B with --m and --k");
    if (*m < 0 || *k < 0) throw UsageError("--m and --k must be non-negative");
    const HallWord a = parse_hall_word(factors[0]);
    const HallWord b = parse_hall_word(factors[1]);
    const PseudoDet u = make_pseudodet(a, b, *m, *k);
    const bool constant = delta(u.value).is_zero();
    if (ctx.json) {
        nlohmann::json j = to_json(u);
        j["text"] = format(u.value);
        j["constant"] = constant;
        ctx.emit(j);
        return kExitOk;
    }
    ctx.out << pseudodet_label(a, b, *m, *k) << " = " << format(u.value) << '\n';
    if (u.sign < 0) ctx.out << "canonical form: -" << pseudodet_label(u.a, u.b, u.m, u.k) << '\n';
    ctx.out << "constant: " << (constant ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_decompose(const Context& ctx, const std::string& expr, int power) {
    if (power < 1) throw UsageError("--power must be positive");
    const LiePoly p = parse(expr);
    if (p.is_zero()) throw UsageError("cannot decompose the zero polynomial");
    const auto pairs = decompose_bracket_power(p, power);
    const LiePoly sum = evaluate_decomposition(pairs, power);
    const LiePoly target = bracket(p, delta_power(p, power));
    if (ctx.json) {
        auto items = nlohmann::json::array();
        for (const auto& w : pairs) {
            items.push_back({{"A", word_to_json(w.a)}, {"B", word_to_json(w.b)}, {"coeff", format_scalar(w.coeff)}});
        }
        ctx.emit({{"input", poly_entry(p)},
                  {"power", power},
                  {"terms", std::move(items)},
                  {"sum", poly_entry(sum)},
                  {"target", poly_entry(target)},
                  {"equal", sum == target}});
        return kExitOk;
    }
    for (const auto& w : pairs) {
        ctx.out << format_scalar(w.coeff) << " * " << pseudodet_label(w.a, w.b, power, 0) << '\n';
    }
    ctx.out << "sum: " << format(sum) << '\n';
    ctx.out << "[p, delta^" << power << "(p)]: " << format(target) << '\n';
    ctx.out << "equal: " << (sum == target ? "yes" : "no") << '\n';
    return sum == target ? kExitOk : kExitUsage;
}

void print_analysis(const Context& ctx, const MonomialAnalysis& a) {
    ctx.out << a.monomial << "  A = " << a.a << "  B = " << a.b << "  r = " << a.r << "  s = " << a.s << "  "
            << to_string(a.kind);
    if (a.alpha) ctx.out << "  alpha = " << format_scalar(*a.alpha);
    if (a.beta) ctx.out << "  beta = " << format_scalar(*a.beta);
    if (a.pseudodet_word) {
        ctx.out << "  M = " << format_scalar(*a.pseudodet_coeff) << " * "
                << pseudodet_label(*a.pseudodet_word, *a.pseudodet_word, 1, 0);
    }
    ctx.out << "  verified: " << (a.verified ? "yes" : "no") << '\n';
}

int cmd_analyze(const Context& ctx, const std::string& expr, std::optional<int> max_degree) {
    if (expr.empty() == !max_degree.has_value()) {
        throw UsageError("analyze-monomial takes either a Hall word or --max-degree");
    }
    if (!max_degree) {
        const auto a = analyze_constant_monomial(parse_hall_word(expr));
        if (ctx.json) {
            ctx.emit(to_json(a));
        } else {
            print_analysis(ctx, a);
        }
        return a.verified ? kExitOk : kExitUsage;
    }
    require_degree(*max_degree, 2, "--max-degree");
    const auto scan = scan_constant_monomials(*max_degree);
    std::map<std::string, int> counts;
    for (auto c : {MonomialClass::both_factors_constant, MonomialClass::one_factor_constant,
                   MonomialClass::neither_factor_constant}) {
        counts[to_string(c)] = 0;
    }
    bool all_verified = true;
    for (const auto& a : scan) {
        ++counts[to_string(a.kind)];
        all_verified = all_verified && a.verified;
    }
    if (ctx.json) {
        auto items = nlohmann::json::array();
        for (const auto& a : scan) items.push_back(to_json(a));
        ctx.emit({{"max_degree", *max_degree},
                  {"count", scan.size()},
                  {"classes", counts},
                  {"all_verified", all_verified},
                  {"monomials", std::move(items)}});
    } else {
        for (const auto& a : scan) print_analysis(ctx, a);
        ctx.out << scan.size() << " constant Hall monomial(s) of degree <= " << *max_degree << ":";
        for (const auto& [name, n] : counts) ctx.out << ' ' << name << '=' << n;
        ctx.out << "\nall verified: " << (all_verified ? "yes" : "no") << '\n';
    }
    return all_verified ? kExitOk : kExitUsage;
}

std::vector<std::string> read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open generator file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

int cmd_subalgebra(const Context& ctx, std::vector<std::string> exprs, const std::string& file, int max_degree,
                   bool membership) {
    require_degree(max_degree, 1, "--max-degree");
    if (!file.empty()) {
        auto more = read_generator_file(file);
        exprs.insert(exprs.end(), more.begin(), more.end());
    }
    if (exprs.empty()) throw UsageError("subalgebra needs at least one generator");
    std::vector<LiePoly> gens;
    for (const auto& e : exprs) {
        LiePoly g = parse(e);
        if (!g.is_zero() && !g.is_homogeneous()) {
            throw UsageError("generator '" + e + "' is not multihomogeneous; split it into homogeneous parts");
        }
        if (g.max_degree() > max_degree) throw UsageError("generator '" + e + "' has degree above --max-degree");
        gens.push_back(std::move(g));
    }
    const auto closure = graded_closure(gens, max_degree, ctx.jobs);
    std::optional<ContainmentReport> report;
    if (membership) report = membership_report(closure, constants_up_to(max_degree, ctx.jobs));
    if (ctx.json) {
        nlohmann::json j = {{"subalgebra", to_json(closure)}};
        if (report) j["membership"] = to_json(*report);
        ctx.emit(j);
    } else {
        ctx.out << format_table(closure);
        if (report) ctx.out << '\n' << format_table(*report);
    }
    return kExitOk;
}

int cmd_verify(const Context& ctx) {
    const auto checks = reproduction_checks();
    const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    if (ctx.json) {
        auto items = nlohmann::json::array();
        for (const auto& c : checks) items.push_back(to_json(c));
        ctx.emit({{"passed", all}, {"checks", std::move(items)}});
    } else {
        for (const auto& c : checks) ctx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
        ctx.out << (all ? "PASS" : "FAIL") << ": " << passed << "/" << checks.size() << " checks\n";
    }
    return all ? kExitOk : kExitUsage;
}

int cmd_conjecture(const Context& ctx, int max_degree, const std::string& shape_text) {
    require_degree(max_degree, 2, "--max-degree");
    const PseudoDetShape shape = parse_shape(shape_text);
    const auto result = conjecture_check(max_degree, shape, ctx.jobs);
    if (ctx.json) {
        ctx.emit(to_json(result));
    } else {
        ctx.out << "generators: x and " << result.pseudodets.size() << " constant pseudodeterminant value(s), shape "
                << to_string(shape) << "\n\n";
        ctx.out << format_table(result.report) << '\n' << "note: " << kConjectureCaveat << '\n';
    }
    return result.report.contained() ? kExitOk : kExitCounterexample;
}

int cmd_dims(const Context& ctx, int max_degree, bool kernel) {
    require_degree(max_degree, 1, "--max-degree");
    std::optional<KernelReport> report;
    if (kernel) report = constants_up_to(max_degree, ctx.jobs);
    auto degrees = nlohmann::json::array();
    auto components = nlohmann::json::array();
    if (!ctx.json) {
        ctx.out << std::setw(6) << "degree" << std::setw(8) << "deg_x" << std::setw(8) << "deg_y" << std::setw(10)
                << "Witt" << std::setw(10) << "Hall";
        if (report) ctx.out << std::setw(10) << "dim ker";
        ctx.out << '\n';
    }
    for (int d = 1; d <= max_degree; ++d) {
        const Integer witt = witt_dim(d);
        const std::size_t hall = hall_basis(d).size();
        degrees.push_back({{"degree", d}, {"witt", witt.get_str()}, {"hall", hall}});
        for (MultiDegree md : multidegrees_up_to(d)) {
            if (md.total() != d) continue;
            const Integer w = witt_dim(md);
            const std::size_t h = hall_basis_multidegree(md).size();
            nlohmann::json c = {{"deg_x", md.deg_x}, {"deg_y", md.deg_y}, {"witt", w.get_str()}, {"hall", h}};
            if (report) c["kernel_dim"] = report->dim(md);
            components.push_back(std::move(c));
            if (!ctx.json) {
                ctx.out << std::setw(6) << d << std::setw(8) << md.deg_x << std::setw(8) << md.deg_y << std::setw(10)
                        << w.get_str() << std::setw(10) << h;
                if (report) ctx.out << std::setw(10) << report->dim(md);
                ctx.out << '\n';
            }
        }
        if (!ctx.json) ctx.out << std::setw(6) << d << std::setw(16) << "total" << std::setw(10) << witt.get_str() << std::setw(10) << hall << '\n';
    }
    if (ctx.json) ctx.emit({{"max_degree", max_degree}, {"degrees", std::move(degrees)}, {"components", std::move(components)}});
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with the derivation x -> 0, y -> x of the free Lie algebra L(x, y)", "liecon"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    int jobs = 1;
    app.add_flag("--json", json, "Emit JSON instead of text");
    app.add_option("--jobs", jobs, "Worker threads; 0 uses every hardware thread")->check(CLI::NonNegativeNumber);

    std::optional<int> degree;
    std::optional<int> max_degree;
    std::string multidegree;
    std::string expr;
    std::vector<std::string> exprs;
    std::string file;
    std::string factor_a;
    std::string factor_b;
    std::string shape = "all";
    std::optional<int> m;
    std::optional<int> k;
    int power = 1;
    bool membership = false;
    bool kernel = false;
    int conjecture_degree = 9;
    int dims_degree = 12;
    int subalgebra_degree = 0;

    auto* hall = app.add_subcommand("hall", "List Hall basis words of a degree or multidegree");
    hall->add_option("--degree", degree, "Total degree");
    hall->add_option("--multidegree", multidegree, "Multidegree a,b");

    auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite an expression in the Hall basis");
    normalize_cmd->add_option("expression", expr, "Expression")->required();

    auto* delta_cmd = app.add_subcommand("delta", "Apply the derivation");
    delta_cmd->add_option("expression", expr, "Expression")->required();
    delta_cmd->add_option("--power", power, "Number of applications")->default_val(1);

    auto* nilindex = app.add_subcommand("nilindex", "Least n with delta^n(p) = 0");
    nilindex->add_option("expression", expr, "Expression")->required();

    auto* constants = app.add_subcommand("constants", "Kernel of the derivation per multidegree");
    constants->add_option("--max-degree", max_degree, "All multidegrees up to this total degree");
    constants->add_option("--multidegree", multidegree, "A single multidegree a,b");

    auto* pseudodet = app.add_subcommand("pseudodet", "Evaluate or enumerate pseudodeterminants");
    // Separate scalar positionals: CLI11 would split a bracketed "[a,b]" given to a vector option.
    pseudodet->add_option("A", factor_a, "First Hall word");
    pseudodet->add_option("B", factor_b, "Second Hall word");
    pseudodet->add_option("-m,--m", m, "Power on the first column");
    pseudodet->add_option("-k,--k", k, "Power on the second column");
    pseudodet->add_option("--max-degree", max_degree, "Enumerate constants with deg A + deg B up to this");
    pseudodet->add_option("--shape", shape, "all or k0")->default_val("all");

    auto* decompose = app.add_subcommand("decompose", "Write [p, delta^k(p)] with (k,0) pseudodeterminants");
    decompose->add_option("expression", expr, "Expression")->required();
    decompose->add_option("--power", power, "k")->default_val(1);

    auto* analyze = app.add_subcommand("analyze-monomial", "Classify constant Hall monomials [A, B]");
    analyze->add_option("word", expr, "A constant Hall word");
    analyze->add_option("--max-degree", max_degree, "Scan every constant Hall word up to this degree");

    auto* subalgebra = app.add_subcommand("subalgebra", "Graded closure of generators given as arguments or in a file");
    // Generator expressions arrive as the unmatched arguments; a vector option would split "[a,b]".
    subalgebra->allow_extras()->fallthrough(false);
    subalgebra->add_flag("--json", json, "Emit JSON instead of text");
    subalgebra->add_option("--jobs", jobs, "Worker threads")->check(CLI::NonNegativeNumber);
    subalgebra->add_option("--generators", file, "File with one generator per line");
    subalgebra->add_option("--max-degree", subalgebra_degree, "Degree bound")->required();
    subalgebra->add_flag("--membership", membership, "Compare against the kernel up to the bound");

    auto* verify = app.add_subcommand("verify-paper", "Re-derive the known small-degree results");

    auto* conjecture = app.add_subcommand("conjecture", "Test generation by x and constant pseudodeterminants");
    conjecture->add_option("--max-degree", conjecture_degree, "Degree bound")->default_val(9);
    conjecture->add_option("--shape", shape, "all or k0")->default_val("all");

    auto* dims = app.add_subcommand("dims", "Witt dimensions against Hall basis counts");
    dims->add_option("--max-degree", dims_degree, "Degree bound")->default_val(12);
    dims->add_flag("--kernel", kernel, "Also report kernel dimensions");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Context ctx{out, err, json, jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : jobs};
    try {
        if (hall->parsed()) return cmd_hall(ctx, degree, multidegree);
        if (normalize_cmd->parsed()) return cmd_normalize(ctx, expr);
        if (delta_cmd->parsed()) return cmd_delta(ctx, expr, power);
        if (nilindex->parsed()) return cmd_nilindex(ctx, expr);
        if (constants->parsed()) return cmd_constants(ctx, max_degree, multidegree);
        if (pseudodet->parsed()) {
            std::vector<std::string> factors;
            for (const auto* f : {&factor_a, &factor_b}) {
                if (!f->empty()) factors.push_back(*f);
            }
            return cmd_pseudodet(ctx, factors, m, k, max_degree, shape);
        }
        if (decompose->parsed()) return cmd_decompose(ctx, expr, power);
        if (analyze->parsed()) return cmd_analyze(ctx, expr, max_degree);
        if (subalgebra->parsed()) {
            exprs = subalgebra->remaining();
            for (const auto& e : exprs) {
                if (e.starts_with("--")) throw UsageError("unknown option " + e + " for subalgebra");
            }
            return cmd_subalgebra(ctx, exprs, file, subalgebra_degree, membership);
        }
        if (verify->parsed()) return cmd_verify(ctx);
        if (conjecture->parsed()) return cmd_conjecture(ctx, conjecture_degree, shape);
        if (dims->parsed()) return cmd_dims(ctx, dims_degree, kernel);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace liecon::cli
