#include <bgs/stirling.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include <bgs/combinatorics.hpp>
#include <bgs/series.hpp>

namespace bgs
{

namespace
{

const BigInt zero_entry{0};

using load_kind = triangle_load_error::kind;

[[noreturn]] void fail(load_kind k, const std::string &msg)
{
    throw triangle_load_error(k, msg);
}

} // namespace

StirlingTriangle StirlingTriangle::build(unsigned max_n)
{
    StirlingTriangle t;
    t.m_rows.reserve(max_n + 1u);
    t.m_rows.push_back({BigInt(1)});
    for (unsigned n = 1; n <= max_n; ++n) {
        const auto &prev = t.m_rows.back();
        std::vector<BigInt> row(n + 1u);
        for (unsigned k = 1; k <= n; ++k) {
            const BigInt same = k < n ? BigInt(prev[k] * k) : BigInt(0);
            row[k] = same + prev[k - 1u];
        }
        t.m_rows.push_back(std::move(row));
    }
    return t;
}

StirlingTriangle StirlingTriangle::from_rows(std::vector<std::vector<BigInt>> rows, TriangleSource source)
{
    if (rows.empty()) {
        fail(load_kind::integrity, "triangle has no rows");
    }
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto &row = rows[n];
        if (row.size() != n + 1u) {
            fail(load_kind::integrity,
                 "row " + std::to_string(n) + " has " + std::to_string(row.size()) + " entries, expected "
                     + std::to_string(n + 1u));
        }
        if (row[n] != 1) {
            fail(load_kind::integrity, "S(" + std::to_string(n) + "," + std::to_string(n) + ") != 1");
        }
        if (n > 0 && row[0] != 0) {
            fail(load_kind::integrity, "S(" + std::to_string(n) + ",0) != 0");
        }
        for (std::size_t k = 1; k < n; ++k) {
            const auto &prev = rows[n - 1u];
            if (row[k] != prev[k] * static_cast<unsigned long>(k) + prev[k - 1u]) {
                fail(load_kind::integrity,
                     "recurrence violated at S(" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
    }
    StirlingTriangle t;
    t.m_rows = std::move(rows);
    t.m_source = source;
    return t;
}

const BigInt &StirlingTriangle::operator()(unsigned n, unsigned k) const
{
    const auto &r = row(n);
    return k < r.size() ? r[k] : zero_entry;
}

const std::vector<BigInt> &StirlingTriangle::row(unsigned n) const
{
    if (n >= m_rows.size()) {
        throw std::out_of_range("Stirling row " + std::to_string(n) + " beyond triangle max_n "
                                + std::to_string(max_n()));
    }
    return m_rows[n];
}

BigInt stirling_explicit(unsigned k, unsigned m)
{
    if (m == 0) {
        return k == 0 ? 1 : 0;
    }
    if (m > k) {
        return 0;
    }
    BigInt sum;
    for (unsigned l = 1; l <= m; ++l) {
        const BigInt term = binomial(m, l) * int_pow(BigInt(l), k);
        if (sign_pow(m - l) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const BigInt mf = factorial(m);
    if (!mpz_divisible_p(sum.get_mpz_t(), mf.get_mpz_t())) {
        throw std::logic_error("explicit Stirling sum for (" + std::to_string(k) + "," + std::to_string(m)
                               + ") is not divisible by m!");
    }
    return sum / mf;
}

BigInt stirling_via_series(unsigned n, unsigned k, std::size_t series_order)
{
    if (k == 0) {
        throw std::invalid_argument("series extraction requires k >= 1");
    }
    if (n > series_order) {
        throw std::invalid_argument("series order " + std::to_string(series_order) + " too small for n = "
                                    + std::to_string(n));
    }
    TruncatedSeries em1 = TruncatedSeries::exp(series_order);
    em1 -= TruncatedSeries(series_order, {Rational(1)});
    const TruncatedSeries p = series_pow(em1, k);
    const Rational v = p[n] * Rational(factorial(n), factorial(k));
    if (!v.is_integer()) {
        throw std::logic_error("series coefficient for S(" + std::to_string(n) + "," + std::to_string(k)
                               + ") is not an integer");
    }
    return v.numerator();
}

namespace
{

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
void count_partitions(unsigned pos, unsigned n, unsigned used_blocks, unsigned k, unsigned long &count)
{
    if (used_blocks > k) {
        return;
    }
    if (pos == n) {
        if (used_blocks == k) {
            ++count;
        }
        return;
    }
    for (unsigned b = 0; b <= used_blocks; ++b) {
        count_partitions(pos + 1u, n, b == used_blocks ? used_blocks + 1u : used_blocks, k, count);
    }
}

} // namespace

BigInt stirling_enumerate(unsigned n, unsigned k)
{
    if (n > max_enumeration_n) {
        throw std::invalid_argument("enumeration limited to n <= " + std::to_string(max_enumeration_n));
    }
    unsigned long count = 0;
    count_partitions(0, n, 0, k, count);
    return BigInt(count);
}

void triangle_write(const StirlingTriangle &t, std::ostream &os)
{
    os << "STIRLING2 v1 max_n=" << t.max_n() << '\n';
    std::size_t lines = 0;
    for (unsigned n = 0; n <= t.max_n(); ++n) {
        const auto &row = t.row(n);
        for (unsigned k = 0; k < row.size(); ++k) {
            os << n << ' ' << k << ' ' << row[k].get_str() << '\n';
            ++lines;
        }
    }
    os << "END " << lines << '\n';
}

namespace
{

bool parse_unsigned(const std::string &s, unsigned long &out)
{
    if (s.empty() || s.size() > 9) {
        return false;
    }
    out = 0;
    for (const char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
        out = out * 10u + static_cast<unsigned long>(c - '0');
    }
    return true;
}

unsigned long parse_header(const std::string &line)
{
    std::istringstream ss(line);
    std::string magic, version, max_field, extra;
    if (!(ss >> magic >> version >> max_field) || (ss >> extra) || magic != "STIRLING2") {
        fail(load_kind::format, "bad header line '" + line + "'");
    }
    if (version.empty() || version[0] != 'v') {
        fail(load_kind::format, "bad version field '" + version + "'");
    }
    if (version != "v1") {
        fail(load_kind::version, "unsupported cache version '" + version + "'");
    }
    unsigned long max_n = 0;
    if (max_field.rfind("max_n=", 0) != 0 || !parse_unsigned(max_field.substr(6), max_n)) {
        fail(load_kind::format, "bad max_n field '" + max_field + "'");
    }
    return max_n;
}

} // namespace

StirlingTriangle triangle_read(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line)) {
        fail(load_kind::format, "empty triangle file");
    }
    const unsigned long max_n = parse_header(line);

    std::vector<std::vector<BigInt>> rows(max_n + 1u);
    std::size_t data_lines = 0;
    bool saw_end = false;
    while (std::getline(is, line)) {
        if (saw_end) {
            if (line.empty()) {
                continue;
            }
            fail(load_kind::format, "content after END line");
        }
        std::istringstream ss(line);
        std::string a, b, c, extra;
        if (!(ss >> a >> b)) {
            fail(load_kind::format, "malformed line '" + line + "'");
        }
        if (a == "END") {
            unsigned long declared = 0;
            if ((ss >> extra) || !parse_unsigned(b, declared)) {
                fail(load_kind::format, "malformed END line '" + line + "'");
            }
            if (declared != data_lines) {
                fail(load_kind::integrity, "END declares " + std::to_string(declared) + " rows, file has "
                                               + std::to_string(data_lines));
            }
            saw_end = true;
            continue;
        }
        unsigned long n = 0, k = 0;
        if (!(ss >> c) || (ss >> extra) || !parse_unsigned(a, n) || !parse_unsigned(b, k)) {
            fail(load_kind::format, "malformed line '" + line + "'");
        }
        BigInt value;
        if (c.empty() || c[0] == '-' || c[0] == '+' || value.set_str(c, 10) != 0) {
            fail(load_kind::format, "malformed value in line '" + line + "'");
        }
        if (n > max_n || k > n) {
            fail(load_kind::integrity, "entry (" + a + "," + b + ") outside declared triangle");
        }
        // Lexicographic (n,k) order: each entry extends row n by one.
        const bool row_started = n == 0 || rows[n - 1u].size() == n;
        if (!row_started || rows[n].size() != k) {
            fail(load_kind::integrity, "entry (" + a + "," + b + ") out of order or row length corrupted");
        }
        rows[n].push_back(std::move(value));
        ++data_lines;
    }
    if (!saw_end) {
        fail(load_kind::format, "missing END line");
    }
    return StirlingTriangle::from_rows(std::move(rows), TriangleSource::cache_file);
}

void triangle_save(const StirlingTriangle &t, const std::filesystem::path &path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    triangle_write(t, os);
    os.flush();
    if (!os) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

StirlingTriangle triangle_load(const std::filesystem::path &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        fail(load_kind::format, "cannot open '" + path.string() + "'");
    }
    return triangle_read(is);
}

} // namespace bgs
