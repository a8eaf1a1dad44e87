#include <bgs/harness.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace bgs
{

namespace
{

using clock_type = std::chrono::steady_clock;

FormulaEvaluation timed_evaluation(FormulaId id, unsigned n, const FormulaContext &ctx)
{
    FormulaEvaluation ev{id, n, std::nullopt, {}, std::nullopt};
    const auto start = clock_type::now();
    try {
        ev.value = evaluate_bernoulli(id, n, ctx);
    } catch (const std::exception &e) {
        ev.error = e.what();
    }
    ev.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock_type::now() - start);
    return ev;
}

IndexRecord assemble(unsigned n, const std::vector<FormulaEvaluation> &evals)
{
    IndexRecord rec;
    rec.n = n;
    const auto oracle = std::find_if(evals.begin(), evals.end(),
                                     [](const FormulaEvaluation &e) { return e.formula == FormulaId::series_oracle; });
    if (oracle == evals.end() || !oracle->ok()) {
        throw std::logic_error("series oracle failed at n = " + std::to_string(n));
    }
    rec.consensus = *oracle->value;
    for (const auto &info : all_formulas()) {
        if (!formula_applicable(info.id, n)) {
            rec.not_applicable.push_back(info.id);
        }
    }
    for (const auto &e : evals) {
        rec.elapsed.emplace_back(e.formula, e.elapsed);
        if (e.ok() && *e.value == rec.consensus) {
            rec.agreeing.push_back(e.formula);
        } else {
            rec.dissenting.push_back({e.formula, e.value, e.error});
        }
    }
    return rec;
}

} // namespace

std::string_view verdict_name(Verdict v)
{
    return v == Verdict::all_trusted_agree ? "ALL_TRUSTED_AGREE" : "TRUSTED_DISSENT_FOUND";
}

std::vector<FormulaEvaluation> evaluate_all(unsigned n, const FormulaContext &ctx)
{
    ctx.require_rows(required_triangle_rows(n));
    std::vector<FormulaEvaluation> out;
    for (const auto &info : all_formulas()) {
        if (formula_applicable(info.id, n)) {
            out.push_back(timed_evaluation(info.id, n, ctx));
        }
    }
    return out;
}

VerificationReport verify_range(unsigned max_n, const FormulaContext &ctx, unsigned threads)
{
    ctx.require_rows(required_triangle_rows(max_n));
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, max_n + 1u);

    std::vector<IndexRecord> records(max_n + 1u);
    std::vector<std::exception_ptr> failures(max_n + 1u);
    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned n = next++; n <= max_n; n = next++) {
            try {
                records[n] = assemble(n, evaluate_all(n, ctx));
            } catch (...) {
                failures[n] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }

    VerificationReport report;
    report.max_n = max_n;
    report.records = std::move(records);
    auto &s = report.summary;
    s.indices = report.records.size();
    for (const auto &rec : report.records) {
        s.agreements += rec.agreeing.size();
        s.dissents += rec.dissenting.size();
        for (const auto &d : rec.dissenting) {
            if (d.error) {
                ++s.errors;
            }
            if (formula_info(d.formula).trusted) {
                ++s.trusted_dissents;
            } else {
                ++s.untrusted_dissents;
            }
        }
    }
    report.verdict = s.trusted_dissents > 0 ? Verdict::trusted_dissent_found : Verdict::all_trusted_agree;
    return report;
}

VerificationReport verify_range(unsigned max_n, unsigned threads)
{
    return verify_range(max_n, FormulaContext::for_index(max_n), threads);
}

bool same_content(const VerificationReport &a, const VerificationReport &b)
{
    if (a.max_n != b.max_n || a.verdict != b.verdict || a.summary != b.summary
        || a.records.size() != b.records.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        const auto &x = a.records[i];
        const auto &y = b.records[i];
        if (x.n != y.n || x.consensus != y.consensus || x.agreeing != y.agreeing
            || x.not_applicable != y.not_applicable || x.dissenting.size() != y.dissenting.size()) {
            return false;
        }
        for (std::size_t j = 0; j < x.dissenting.size(); ++j) {
            const auto &p = x.dissenting[j];
            const auto &q = y.dissenting[j];
            if (p.formula != q.formula || p.value != q.value || p.error != q.error) {
                return false;
            }
        }
    }
    return true;
}

std::chrono::nanoseconds median_of(std::vector<std::chrono::nanoseconds> samples)
{
    if (samples.empty()) {
        throw std::invalid_argument("median of no samples");
    }
    std::sort(samples.begin(), samples.end());
    const auto mid = samples.size() / 2u;
    if (samples.size() % 2u == 1u) {
        return samples[mid];
    }
    return (samples[mid - 1u] + samples[mid]) / 2;
}

std::vector<BenchRecord> bench(std::span<const FormulaId> formulas, std::span<const unsigned> n_values,
                               unsigned repetitions, const FormulaContext &ctx)
{
    if (repetitions == 0) {
        throw std::invalid_argument("bench needs at least one repetition");
    }
    std::vector<BenchRecord> out;
    for (const FormulaId id : formulas) {
        for (const unsigned n : n_values) {
            if (!formula_applicable(id, n)) {
                continue;
            }
            const std::string digest = evaluate_bernoulli(id, n, ctx).to_string();
            std::vector<std::chrono::nanoseconds> samples;
            samples.reserve(repetitions);
            for (unsigned r = 0; r < repetitions; ++r) {
                const auto start = clock_type::now();
                const Rational v = evaluate_bernoulli(id, n, ctx);
                samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(clock_type::now() - start));
                if (v.to_string() != digest) {
                    throw std::logic_error(std::string(formula_name(id)) + " returned a different value on repetition "
                                           + std::to_string(r + 1u) + " at n = " + std::to_string(n));
                }
            }
            out.push_back({id, n, repetitions, median_of(std::move(samples)), digest});
        }
    }
    return out;
}

} // namespace bgs
