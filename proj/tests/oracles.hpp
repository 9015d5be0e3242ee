#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the library's counting, Witt or TC code.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;

inline std::vector<int> digits(std::uint64_t code, int d, int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(d));
        code /= static_cast<std::uint64_t>(d);
    }
    return w;
}

inline bool cyclically_reduced(const std::vector<int>& w) {
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (w[i] == w[(i + 1) % m]) return false;
    }
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Words of length m over d letters with no two cyclically adjacent letters equal.
inline std::uint64_t brute_word_count(int d, int m) {
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < ipow(static_cast<std::uint64_t>(d), m); ++code) {
        if (cyclically_reduced(digits(code, d, m))) ++count;
    }
    return count;
}

inline std::vector<int> rotate(const std::vector<int>& w, std::size_t k) {
    std::vector<int> r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[(i + k) % w.size()];
    return r;
}

/// Rotation orbits of size exactly s of cyclically reduced words of length s.
inline std::uint64_t brute_necklace_count(int d, int s) {
    std::set<std::vector<int>> seen;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < ipow(static_cast<std::uint64_t>(d), s); ++code) {
        const auto w = digits(code, d, s);
        if (!cyclically_reduced(w) || seen.count(w)) continue;
        std::set<std::vector<int>> orbit;
        for (int k = 0; k < s; ++k) orbit.insert(rotate(w, static_cast<std::size_t>(k)));
        seen.insert(orbit.begin(), orbit.end());
        if (static_cast<int>(orbit.size()) == s) ++count;
    }
    return count;
}

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// (d-1)^m + (-1)^m (d-1), by the chromatic polynomial of the m-cycle.
inline Int closed_words(int d, int m) {
    Int r = 1;
    for (int i = 0; i < m; ++i) r *= (d - 1);
    return m % 2 == 0 ? Int(r + (d - 1)) : Int(r - (d - 1));
}

inline Int necklaces(int d, int s) {
    Int sum = 0;
    for (int j = 1; j <= s; ++j) {
        if (s % j == 0) sum += mobius(s / j) * closed_words(d, j);
    }
    return sum / s;
}

inline Int parity_divisor_sum(int d, int m) {
    Int sum = 0;
    for (int s = 1; s <= m; ++s) {
        if (m % s == 0 && (m - s) % 2 == 0) sum += necklaces(d, s);
    }
    return sum;
}

/// Ghost map of an integral Witt vector.
inline std::vector<Int> ghost(std::int64_t p, const std::vector<Int>& x) {
    std::vector<Int> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Int pj = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            w[i] += pj * boost::multiprecision::pow(x[j], static_cast<unsigned>(ipow(static_cast<std::uint64_t>(p),
                                                                                        static_cast<int>(i - j))));
            pj *= p;
        }
    }
    return w;
}

/// Witt length of each term W_len(k)^mult of K_q, read off the product
/// formula directly: exponent multiset keyed by Witt length.
using LengthTable = std::map<int, Int, std::greater<>>;

inline int cutoff(std::int64_t p, std::int64_t x, std::int64_t m_prime) {
    // unique t >= 1 with p^{t-1} m' <= x < p^t m'
    std::int64_t lower = m_prime;
    for (int t = 1; t < 64; ++t) {
        const std::int64_t upper = lower * p;
        if (lower <= x && x < upper) return t;
        if (lower > x) return 0;
        lower = upper;
    }
    return 0;
}

inline LengthTable product_formula_table(std::int64_t p, int d, std::int64_t q) {
    LengthTable table;
    auto put = [&](int length, const Int& mult) {
        if (length > 0 && mult != 0) table[length] += mult;
    };
    const std::int64_t r = q / 2;
    for (std::int64_t mp = 1; mp <= q + 1; ++mp) {
        if (mp % p == 0) continue;
        for (std::int64_t sp = 1; sp <= mp; ++sp) {
            if (mp % sp != 0) continue;
            if (p > 2 && q % 2 == 0) {
                if (mp % 2 || sp % 2) continue;
                const int t = cutoff(p, 2 * r, mp);
                for (int u = 0; u <= t; ++u) put(t - u, necklaces(d, static_cast<int>(ipow(p, u) * sp)));
            } else if (p > 2) {
                if (mp % 2 == 0) continue;
                const int t = cutoff(p, 2 * r + 1, mp);
                for (int u = 0; u <= t; ++u) put(t - u, necklaces(d, static_cast<int>(ipow(p, u) * sp)));
            } else if (q % 2 == 0) {
                if (mp % 2 == 0) continue;
                const int t = cutoff(2, 2 * r, mp);
                for (int u = 1; u <= t; ++u) put(t - u, necklaces(d, static_cast<int>(ipow(2, u) * sp)));
            } else {
                if (mp % 2 == 0) continue;
                const int t = cutoff(2, 2 * r, mp);
                if (t >= 1) put(1, Int(t + 1) * necklaces(d, static_cast<int>(sp)));
            }
        }
    }
    return table;
}

} // namespace oracle
