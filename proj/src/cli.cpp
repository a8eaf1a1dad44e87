#include <bgs/cli.hpp>

#include <algorithm>
#include <exception>
#include <filesystem>
#include <ostream>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include <bgs/cache.hpp>
#include <bgs/formula_registry.hpp>
#include <bgs/formulas.hpp>
#include <bgs/harness.hpp>
#include <bgs/report_io.hpp>

namespace bgs::cli
{

namespace
{

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string &s)
{
    if (s == "csv") {
        return OutputFormat::csv;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    return OutputFormat::plain;
}

void add_format_option(CLI::App *cmd, std::string &target)
{
    cmd->add_option("--format", target, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}, CLI::ignore_case))
        ->transform([](std::string s) {
            std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
            return s;
        });
}

FormulaContext context_for_rows(unsigned rows, std::ostream &err)
{
    return FormulaContext(cached_or_built_triangle(rows, err));
}

int cmd_compute(const std::string &name, unsigned n, OutputFormat format, std::ostream &out, std::ostream &err)
{
    const auto id = parse_formula_id(name);
    if (!id) {
        throw usage_error("unknown formula '" + name + "'");
    }
    if (!formula_applicable(*id, n)) {
        throw usage_error(std::string(formula_name(*id)) + " is not applicable at n = " + std::to_string(n));
    }
    const auto ctx = context_for_rows(required_triangle_rows(n), err);
    const Rational v = evaluate_native(*id, n, ctx);
    switch (format) {
        case OutputFormat::plain:
            out << v << '\n';
            break;
        case OutputFormat::csv:
            out << "formula,n,value\n" << formula_name(*id) << ',' << n << ',' << v << '\n';
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["formula"] = std::string(formula_name(*id));
            j["n"] = n;
            j["value"] = v.to_string();
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

int cmd_verify(unsigned max_n, bool strict, bool deterministic, unsigned threads, OutputFormat format,
               std::ostream &out, std::ostream &err)
{
    const auto ctx = context_for_rows(required_triangle_rows(max_n), err);
    const VerificationReport report = verify_range(max_n, ctx, threads);
    const Timing timing = deterministic ? Timing::zeroed : Timing::measured;
    switch (format) {
        case OutputFormat::plain:
            out << report_to_plain(report);
            break;
        case OutputFormat::csv:
            out << report_to_csv(report, timing);
            break;
        case OutputFormat::json:
            out << report_to_json(report, timing).dump(2) << '\n';
            break;
    }
    if (report.verdict == Verdict::trusted_dissent_found) {
        err << "verification failed: a trusted formula disagrees with the series oracle\n";
        return exit_dissent;
    }
    if (strict && report.has_untrusted_dissent()) {
        err << "strict verification failed: an untrusted formula disagrees with the series oracle\n";
        return exit_dissent;
    }
    return exit_ok;
}

void emit_value_table(const std::string &kind, unsigned max_n,
                      const std::vector<std::pair<unsigned, Rational>> &rows, OutputFormat format, std::ostream &out)
{
    switch (format) {
        case OutputFormat::plain:
            for (const auto &[n, v] : rows) {
                out << n << ' ' << v << '\n';
            }
            break;
        case OutputFormat::csv:
            out << "n,value\n";
            for (const auto &[n, v] : rows) {
                out << n << ',' << v << '\n';
            }
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["kind"] = kind;
            j["max_n"] = max_n;
            auto arr = nlohmann::ordered_json::array();
            for (const auto &[n, v] : rows) {
                arr.push_back({{"n", n}, {"value", v.to_string()}});
            }
            j["rows"] = std::move(arr);
            out << j.dump(2) << '\n';
            break;
        }
    }
}

int cmd_table(const std::string &kind, unsigned max_n, OutputFormat format, std::ostream &out, std::ostream &err)
{
    if (kind == "bernoulli") {
        const auto b = bernoulli_series_oracle_sequence(max_n);
        std::vector<std::pair<unsigned, Rational>> rows;
        for (unsigned n = 0; n <= max_n; ++n) {
            rows.emplace_back(n, b[n]);
        }
        emit_value_table(kind, max_n, rows, format, out);
        return exit_ok;
    }
    if (kind == "genocchi") {
        const auto ctx = context_for_rows(max_n, err);
        std::vector<std::pair<unsigned, Rational>> rows;
        for (unsigned n = 1; n <= max_n; ++n) {
            rows.emplace_back(n, genocchi_theorem(n, ctx));
        }
        emit_value_table(kind, max_n, rows, format, out);
        return exit_ok;
    }
    // stirling
    const auto t = cached_or_built_triangle(max_n, err);
    switch (format) {
        case OutputFormat::plain:
            for (unsigned n = 0; n <= max_n; ++n) {
                const auto &row = t->row(n);
                for (std::size_t k = 0; k < row.size(); ++k) {
                    out << (k ? "," : "") << row[k].get_str();
                }
                out << '\n';
            }
            break;
        case OutputFormat::csv:
            out << "n,k,value\n";
            for (unsigned n = 0; n <= max_n; ++n) {
                const auto &row = t->row(n);
                for (std::size_t k = 0; k < row.size(); ++k) {
                    out << n << ',' << k << ',' << row[k].get_str() << '\n';
                }
            }
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["kind"] = kind;
            j["max_n"] = max_n;
            auto arr = nlohmann::ordered_json::array();
            for (unsigned n = 0; n <= max_n; ++n) {
                auto values = nlohmann::ordered_json::array();
                for (const auto &v : t->row(n)) {
                    values.push_back(v.get_str());
                }
                arr.push_back({{"n", n}, {"values", std::move(values)}});
            }
            j["rows"] = std::move(arr);
            out << j.dump(2) << '\n';
            break;
        }
    }
    return exit_ok;
}

// Powers of two from 8 up to max_n; just max_n when that is below 8.
std::vector<unsigned> bench_indices(unsigned max_n)
{
    std::vector<unsigned> ns;
    for (unsigned n = 8; n <= max_n; n *= 2u) {
        ns.push_back(n);
    }
    if (ns.empty()) {
        ns.push_back(max_n);
    }
    return ns;
}

int cmd_bench(unsigned max_n, unsigned reps, bool deterministic, OutputFormat format, std::ostream &out,
              std::ostream &err)
{
    if (reps == 0) {
        throw usage_error("--reps must be at least 1");
    }
    std::vector<FormulaId> formulas;
    for (const auto &info : all_formulas()) {
        if (info.trusted) {
            formulas.push_back(info.id);
        }
    }
    const auto ns = bench_indices(max_n);
    const auto ctx = context_for_rows(required_triangle_rows(*std::max_element(ns.begin(), ns.end())), err);
    const auto records = bench(formulas, ns, reps, ctx);
    const Timing timing = deterministic ? Timing::zeroed : Timing::measured;
    if (format == OutputFormat::json) {
        out << bench_to_json(records, timing).dump(2) << '\n';
    } else {
        out << bench_to_csv(records, timing);
    }
    return exit_ok;
}

int cmd_cache(const std::string &action, unsigned max_n, std::ostream &out, std::ostream &err)
{
    const auto path = cache_file_path();
    if (action == "path") {
        out << path.string() << '\n';
        return exit_ok;
    }
    std::error_code ec;
    if (action == "clear") {
        std::filesystem::remove(path, ec);
        if (ec) {
            err << "error: cannot remove " << path.string() << ": " << ec.message() << '\n';
            return exit_usage;
        }
        return exit_ok;
    }
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
        err << "error: cannot create cache directory " << path.parent_path().string() << ": " << ec.message() << '\n';
        return exit_usage;
    }
    try {
        triangle_save(StirlingTriangle::build(max_n), path);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    out << path.string() << '\n';
    return exit_ok;
}

unsigned pick(const CLI::Option *flag, unsigned flag_value, const CLI::Option *positional, unsigned pos_value,
              unsigned fallback)
{
    if (flag->count() > 0) {
        return flag_value;
    }
    if (positional->count() > 0) {
        return pos_value;
    }
    return fallback;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Bernoulli, Genocchi and Stirling number formulas with differential verification", "bgs"};
    app.require_subcommand(1);

    std::string format_text = "plain";

    auto *compute = app.add_subcommand("compute", "Evaluate one formula at index n");
    std::string formula;
    unsigned compute_n = 0;
    compute->add_option("formula", formula, "Formula identifier (case-insensitive)")->required();
    compute->add_option("n", compute_n, "Bernoulli/Genocchi index")->required();
    add_format_option(compute, format_text);

    auto *verify = app.add_subcommand("verify", "Compare every formula against the series oracle");
    unsigned verify_max = 20;
    unsigned threads = 0;
    bool strict = false;
    bool deterministic = false;
    verify->add_option("--max-n", verify_max, "Largest index to verify");
    verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
    verify->add_flag("--strict", strict, "Treat dissent from untrusted formulas as failure");
    verify->add_flag("--deterministic", deterministic, "Write zero for all timing fields");
    add_format_option(verify, format_text);

    auto *table = app.add_subcommand("table", "Emit a table of exact values");
    std::string kind;
    unsigned table_pos = 0, table_flag = 0;
    table->add_option("kind", kind, "bernoulli, genocchi or stirling")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "genocchi", "stirling"}));
    auto *table_pos_opt = table->add_option("max_n", table_pos, "Largest index");
    auto *table_flag_opt = table->add_option("--max-n", table_flag, "Largest index");
    add_format_option(table, format_text);

    auto *bench_cmd = app.add_subcommand("bench", "Time every trusted formula at n = 8, 16, 32, ...");
    unsigned bench_max = 64;
    unsigned reps = 3;
    bool bench_deterministic = false;
    bench_cmd->add_option("--max-n", bench_max, "Largest index");
    bench_cmd->add_option("--reps", reps, "Timed repetitions per point");
    bench_cmd->add_flag("--deterministic", bench_deterministic, "Write zero for all timing fields");
    add_format_option(bench_cmd, format_text);

    auto *cache = app.add_subcommand("cache", "Manage the Stirling triangle cache");
    std::string action;
    unsigned cache_pos = 0, cache_flag = 0;
    cache->add_option("action", action, "build, path or clear")
        ->required()
        ->check(CLI::IsMember({"build", "path", "clear"}));
    auto *cache_pos_opt = cache->add_option("max_n", cache_pos, "Rows to build");
    auto *cache_flag_opt = cache->add_option("--max-n", cache_flag, "Rows to build");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const OutputFormat format = parse_format(format_text);
    try {
        if (compute->parsed()) {
            return cmd_compute(formula, compute_n, format, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_max, strict, deterministic, threads, format, out, err);
        }
        if (table->parsed()) {
            return cmd_table(kind, pick(table_flag_opt, table_flag, table_pos_opt, table_pos, 18), format, out, err);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench_max, reps, bench_deterministic, format, out, err);
        }
        return cmd_cache(action, pick(cache_flag_opt, cache_flag, cache_pos_opt, cache_pos, 128), out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace bgs::cli
