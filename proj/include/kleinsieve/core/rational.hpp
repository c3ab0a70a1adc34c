#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace kleinsieve {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Parses "7", "-3", "5/2", "-1/6".  Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw DataError("not a rational number: '" + std::string(text) + "'");
    Integer d(std::string{den});
    if (d == 0) throw DataError("zero denominator in '" + std::string(text) + "'");
    std::string n{num};
    if (n.front() == '+') n.erase(0, 1);
    return Rational(Integer(n), d);
}

inline std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Rank of the matrix whose rows are `rows`, by fraction-free (Bareiss)
/// elimination after clearing denominators row by row.
inline std::size_t rank(const std::vector<RationalVector>& rows) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        Integer scale = 1;
        for (const auto& q : row) scale = lcm(scale, Integer(denominator(q)));
        std::vector<Integer> r(ncols);
        for (std::size_t c = 0; c < ncols; ++c) r[c] = numerator(row[c]) * (scale / denominator(row[c]));
        m.push_back(std::move(r));
    }
    const std::size_t nrows = m.size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

} // namespace kleinsieve
