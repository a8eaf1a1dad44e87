#include <bgs/report_io.hpp>

#include <algorithm>
#include <sstream>

namespace bgs
{

namespace
{

long long ns(std::chrono::nanoseconds d, Timing timing)
{
    return timing == Timing::zeroed ? 0 : static_cast<long long>(d.count());
}

nlohmann::ordered_json name_list(const std::vector<FormulaId> &ids)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto id : ids) {
        arr.push_back(std::string(formula_name(id)));
    }
    return arr;
}

std::chrono::nanoseconds elapsed_for(const IndexRecord &rec, FormulaId id)
{
    for (const auto &[f, d] : rec.elapsed) {
        if (f == id) {
            return d;
        }
    }
    return std::chrono::nanoseconds{0};
}

// Error messages go into CSV cells; keep them on one line without commas.
std::string csv_cell(std::string s)
{
    for (auto &c : s) {
        if (c == ',' || c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

} // namespace

nlohmann::ordered_json report_to_json(const VerificationReport &report, Timing timing)
{
    nlohmann::ordered_json j;
    j["max_n"] = report.max_n;
    j["verdict"] = std::string(verdict_name(report.verdict));
    const auto &s = report.summary;
    j["summary"] = {{"indices", s.indices},
                    {"agreements", s.agreements},
                    {"dissents", s.dissents},
                    {"trusted_dissents", s.trusted_dissents},
                    {"untrusted_dissents", s.untrusted_dissents},
                    {"errors", s.errors}};
    auto records = nlohmann::ordered_json::array();
    for (const auto &rec : report.records) {
        nlohmann::ordered_json r;
        r["n"] = rec.n;
        r["consensus"] = rec.consensus.to_string();
        r["agreeing"] = name_list(rec.agreeing);
        auto dissent = nlohmann::ordered_json::array();
        for (const auto &d : rec.dissenting) {
            nlohmann::ordered_json e;
            e["formula"] = std::string(formula_name(d.formula));
            if (d.value) {
                e["value"] = d.value->to_string();
            } else {
                e["error"] = d.error.value_or("unknown error");
            }
            dissent.push_back(std::move(e));
        }
        r["dissenting"] = std::move(dissent);
        r["not_applicable"] = name_list(rec.not_applicable);
        nlohmann::ordered_json el = nlohmann::ordered_json::object();
        for (const auto &[id, d] : rec.elapsed) {
            el[std::string(formula_name(id))] = ns(d, timing);
        }
        r["elapsed_ns"] = std::move(el);
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    return j;
}

std::string report_to_csv(const VerificationReport &report, Timing timing)
{
    std::ostringstream os;
    os << "n,formula,status,value,elapsed_ns\n";
    for (const auto &rec : report.records) {
        // Merge agreeing and dissenting back into FormulaId order.
        for (const auto &info : all_formulas()) {
            const auto id = info.id;
            const bool agrees = std::find(rec.agreeing.begin(), rec.agreeing.end(), id) != rec.agreeing.end();
            const auto d = std::find_if(rec.dissenting.begin(), rec.dissenting.end(),
                                        [id](const Dissent &x) { return x.formula == id; });
            if (!agrees && d == rec.dissenting.end()) {
                continue;
            }
            os << rec.n << ',' << info.name << ',';
            if (agrees) {
                os << "agree," << rec.consensus.to_string();
            } else if (d->value) {
                os << "dissent," << d->value->to_string();
            } else {
                os << "error," << csv_cell(d->error.value_or("unknown error"));
            }
            os << ',' << ns(elapsed_for(rec, id), timing) << '\n';
        }
    }
    return os.str();
}

std::string report_to_plain(const VerificationReport &report)
{
    std::ostringstream os;
    os << "max_n: " << report.max_n << '\n';
    os << "verdict: " << verdict_name(report.verdict) << '\n';
    const auto &s = report.summary;
    os << "agreements: " << s.agreements << ", dissents: " << s.dissents << " (trusted " << s.trusted_dissents
       << ", untrusted " << s.untrusted_dissents << ", errors " << s.errors << ")\n";
    for (const auto &rec : report.records) {
        os << "n=" << rec.n << " consensus=" << rec.consensus << " agree=" << rec.agreeing.size();
        for (const auto &d : rec.dissenting) {
            os << " DISSENT " << formula_name(d.formula) << '=';
            if (d.value) {
                os << *d.value;
            } else {
                os << "ERROR(" << d.error.value_or("unknown error") << ')';
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string bench_to_csv(std::span<const BenchRecord> records, Timing timing)
{
    std::ostringstream os;
    os << bench_csv_header << '\n';
    for (const auto &r : records) {
        os << formula_name(r.formula) << ',' << r.n << ',' << r.repetitions << ',' << ns(r.median, timing) << ','
           << r.value_digest << '\n';
    }
    return os.str();
}

nlohmann::ordered_json bench_to_json(std::span<const BenchRecord> records, Timing timing)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : records) {
        arr.push_back({{"formula", std::string(formula_name(r.formula))},
                       {"n", r.n},
                       {"reps", r.repetitions},
                       {"median_ns", ns(r.median, timing)},
                       {"value", r.value_digest}});
    }
    return arr;
}

} // namespace bgs
