#ifndef BGS_STIRLING_HPP
#define BGS_STIRLING_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <bgs/rational.hpp>

namespace bgs
{

enum class TriangleSource { recurrence, cache_file };

class triangle_load_error : public std::runtime_error
{
public:
    enum class kind {
        // Unparseable header, data line or trailer, or an empty file.
        format,
        // Well-formed header with an unsupported version tag.
        version,
        // Parsed fine but the contents are inconsistent: END count, ordering,
        // row lengths, or a violated recurrence.
        integrity
    };

    triangle_load_error(kind k, const std::string &msg) : std::runtime_error(msg), m_kind(k) {}

    kind error_kind() const
    {
        return m_kind;
    }

private:
    kind m_kind;
};

/// Stirling numbers of the second kind S(n, k) for 0 <= k <= n <= max_n.
///
/// Row n holds S(n,0)..S(n,n). Entries with k > n are zero and not stored.
/// A triangle never changes once constructed. Equality compares contents
/// only, not where the triangle came from.
class StirlingTriangle
{
public:
    // Two-term recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
    static StirlingTriangle build(unsigned max_n);

    // Validates every invariant; throws triangle_load_error(integrity).
    static StirlingTriangle from_rows(std::vector<std::vector<BigInt>> rows, TriangleSource source);

    unsigned max_n() const
    {
        return static_cast<unsigned>(m_rows.size() - 1u);
    }
    TriangleSource source() const
    {
        return m_source;
    }
    // Zero for k > n. Throws std::out_of_range when n > max_n().
    const BigInt &operator()(unsigned n, unsigned k) const;
    const std::vector<BigInt> &row(unsigned n) const;

    friend bool operator==(const StirlingTriangle &a, const StirlingTriangle &b)
    {
        return a.m_rows == b.m_rows;
    }

private:
    StirlingTriangle() = default;

    std::vector<std::vector<BigInt>> m_rows;
    TriangleSource m_source = TriangleSource::recurrence;
};

// Explicit alternating sum (1/m!) sum_{l=1..m} (-1)^(m-l) C(m,l) l^k.
// Outside 1 <= m <= k: S(0,0) = 1, S(k,0) = 0 for k >= 1, zero for m > k.
// Throws std::logic_error if the sum is not divisible by m!.
BigInt stirling_explicit(unsigned k, unsigned m);

// n! [x^n] (e^x - 1)^k / k!, computed with series truncated at series_order.
// Throws std::invalid_argument when k == 0 or n > series_order.
BigInt stirling_via_series(unsigned n, unsigned k, std::size_t series_order);
inline BigInt stirling_via_series(unsigned n, unsigned k)
{
    return stirling_via_series(n, k, n);
}

inline constexpr unsigned max_enumeration_n = 10;

// Counts partitions of {1..n} into exactly k nonempty blocks by walking
// every set partition. Throws std::invalid_argument when n > 10.
BigInt stirling_enumerate(unsigned n, unsigned k);

void triangle_write(const StirlingTriangle &t, std::ostream &os);
StirlingTriangle triangle_read(std::istream &is);

// Throws std::runtime_error when the file cannot be written.
void triangle_save(const StirlingTriangle &t, const std::filesystem::path &path);
// Throws triangle_load_error; an unreadable file is a format error.
StirlingTriangle triangle_load(const std::filesystem::path &path);

} // namespace bgs

#endif
