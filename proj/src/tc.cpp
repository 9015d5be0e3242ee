#include "axesk/tc.hpp"

#include <algorithm>

#include "axesk/arith.hpp"
#include "axesk/words.hpp"

namespace axesk::tc {

using witt::FieldSpec;
using witt::SymbolicGroupSum;

std::string_view to_string(ParityClass parity) {
    switch (parity) {
    case ParityClass::even_even: return "even-even";
    case ParityClass::odd_odd: return "odd-odd";
    case ParityClass::even_m_odd_s: return "even-m-odd-s";
    }
    return "even-even";
}

ParityClass parity_class_of(std::int64_t p, std::int64_t m, std::int64_t s) {
    require(m >= 1 && s >= 1 && m % s == 0, "summand needs s | m with m, s >= 1");
    if (m % 2 == 0 && s % 2 == 0) return ParityClass::even_even;
    if (m % 2 == 1) return ParityClass::odd_odd;
    if (p != 2) {
        fail(ErrorCategory::domain_error, "summand (m even, s odd) has no homology away from characteristic 2");
    }
    return ParityClass::even_m_odd_s;
}

namespace {

std::int64_t positive_characteristic(const FieldSpec& field) {
    if (field.characteristic() <= 0) {
        fail(ErrorCategory::domain_error, "field " + witt::to_string(field) + " does not have positive characteristic");
    }
    return field.characteristic();
}

// Witt length v - u for B(m, s), after validating the declared parity class.
int summand_level(std::int64_t m, std::int64_t s, const FieldSpec& field, ParityClass parity_class) {
    const std::int64_t p = positive_characteristic(field);
    const ParityClass actual = parity_class_of(p, m, s);
    if (actual != parity_class) {
        fail(ErrorCategory::domain_error, "parity class " + std::string(to_string(parity_class)) +
                                              " does not match summand (m=" + std::to_string(m) +
                                              ", s=" + std::to_string(s) + ")");
    }
    const auto ms = arith::p_adic_split(p, m);
    const auto ss = arith::p_adic_split(p, s);
    return ms.valuation - ss.valuation;
}

bool is_odd(std::int64_t n) { return n % 2 != 0; }

std::int64_t ipow(std::int64_t base, int exponent) {
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace

SymbolicGroupSum tp_groups(std::int64_t m, std::int64_t s, const FieldSpec& field, ParityClass parity_class,
                           std::int64_t degree) {
    const int level = summand_level(m, s, field, parity_class);
    SymbolicGroupSum out(field);
    switch (parity_class) {
    case ParityClass::even_even:
        if (!is_odd(degree)) out.add(level, 1);
        break;
    case ParityClass::odd_odd:
        if (is_odd(degree)) out.add(level, 1);
        break;
    case ParityClass::even_m_odd_s:
        if (is_odd(degree)) out.add(1, 1);
        break;
    }
    return out;
}

SymbolicGroupSum tcminus_groups(std::int64_t m, std::int64_t s, const FieldSpec& field, ParityClass parity_class,
                                std::int64_t degree) {
    const int level = summand_level(m, s, field, parity_class);
    const int length = degree >= m ? level + 1 : level;
    SymbolicGroupSum out(field);
    switch (parity_class) {
    case ParityClass::even_even:
        if (!is_odd(degree)) out.add(length, 1);
        break;
    case ParityClass::odd_odd:
        if (is_odd(degree)) out.add(length, 1);
        break;
    case ParityClass::even_m_odd_s:
        if (is_odd(degree)) out.add(1, 1);
        break;
    }
    return out;
}

SymbolicGroupSum tc_local(std::int64_t m_prime, std::int64_t s_prime, std::int64_t d, const FieldSpec& field,
                          std::int64_t q) {
    const std::int64_t p = positive_characteristic(field);
    require(d >= 1, "tc_local requires d >= 1");
    require(q >= 0, "tc_local requires q >= 0");
    require(m_prime >= 1 && s_prime >= 1 && m_prime % s_prime == 0, "tc_local requires s' | m'");
    require(m_prime % p != 0, "tc_local requires m' coprime to p");

    const std::int64_t r = q / 2;
    const bool odd_degree = is_odd(q);
    SymbolicGroupSum out(field);

    if (p == 2) {
        if (!is_odd(m_prime)) fail(ErrorCategory::domain_error, "for p = 2, m' must be odd");
        const int t = arith::t_even(2, r, m_prime);
        if (!odd_degree) {
            for (int u = 1; u <= t; ++u) out.add(t - u, words::cyc_count(d, ipow(2, u) * s_prime));
        } else if (t >= 1) {
            // One copy of k^{cyc_d(s')} for each 0 <= v <= t_ev.
            out.add(1, BigInt(t + 1) * words::cyc_count(d, s_prime));
        }
        return out;
    }

    if (!odd_degree) {
        if (is_odd(m_prime) || is_odd(s_prime)) {
            fail(ErrorCategory::domain_error, "even degrees need m' and s' even for p > 2");
        }
        const int t = arith::t_even(p, r, m_prime);
        for (int u = 0; u <= t; ++u) out.add(t - u, words::cyc_count(d, ipow(p, u) * s_prime));
    } else {
        if (!is_odd(m_prime)) fail(ErrorCategory::domain_error, "odd degrees need m' odd for p > 2");
        const int t = arith::t_odd(p, r, m_prime);
        for (int u = 0; u <= t; ++u) out.add(t - u, words::cyc_count(d, ipow(p, u) * s_prime));
    }
    return out;
}

std::vector<SummandIndex> decomposition_indices(std::int64_t p, std::int64_t d, std::int64_t q) {
    require(arith::is_prime(p), "decomposition_indices requires p prime");
    require(d >= 2, "decomposition_indices requires d >= 2");
    require(q >= 0, "decomposition_indices requires q >= 0");

    std::vector<SummandIndex> out;
    auto push = [&](std::int64_t m_prime, std::int64_t s_prime, int v, int u, ParityClass parity, int length,
                    std::int64_t word_length) {
        BigInt multiplicity = words::cyc_count(d, word_length);
        if (length <= 0 || multiplicity == 0) return;
        out.push_back(SummandIndex{m_prime, s_prime, v, u, parity, length, multiplicity});
    };

    const std::int64_t r = q / 2;
    const bool odd_degree = is_odd(q);
    // m' is bounded by the degree: a nonzero cut-off needs m' <= q.
    for (std::int64_t m_prime = 1; m_prime <= q; ++m_prime) {
        if (m_prime % p == 0) continue;
        for (std::int64_t s_prime : arith::divisors(m_prime)) {
            if (p > 2 && !odd_degree) {
                if (is_odd(m_prime) || is_odd(s_prime)) continue;
                const int t = arith::t_even(p, r, m_prime);
                for (int u = 0; u < t; ++u)
                    push(m_prime, s_prime, t, u, ParityClass::even_even, t - u, ipow(p, u) * s_prime);
            } else if (p > 2) {
                if (!is_odd(m_prime)) continue;
                const int t = arith::t_odd(p, r, m_prime);
                for (int u = 0; u < t; ++u)
                    push(m_prime, s_prime, t, u, ParityClass::odd_odd, t - u, ipow(p, u) * s_prime);
            } else if (!odd_degree) {
                const int t = arith::t_even(2, r, m_prime);
                for (int u = 1; u < t; ++u)
                    push(m_prime, s_prime, t, u, ParityClass::even_even, t - u, ipow(2, u) * s_prime);
            } else {
                const int t = arith::t_even(2, r, m_prime);
                if (t == 0) continue;
                for (int v = 0; v <= t; ++v) {
                    push(m_prime, s_prime, v, 0, v == 0 ? ParityClass::odd_odd : ParityClass::even_m_odd_s, 1,
                         s_prime);
                }
            }
        }
    }
    return out;
}

GradedGroupAnswer k_groups(std::int64_t d, std::int64_t q, const FieldSpec& field) {
    const std::int64_t p = positive_characteristic(field);
    require(d >= 2, "k_groups requires d >= 2");
    require(q >= 0, "k_groups: negative degree " + std::to_string(q) + " (the relative theory is connective)");

    SymbolicGroupSum total(field);
    const bool odd_degree = is_odd(q);
    for (std::int64_t m_prime = 1; m_prime <= q; ++m_prime) {
        if (m_prime % p == 0) continue;
        if (p == 2 && !is_odd(m_prime)) continue;
        if (p > 2 && is_odd(m_prime) != odd_degree) continue;
        for (std::int64_t s_prime : arith::divisors(m_prime)) {
            if (p > 2 && !odd_degree && is_odd(s_prime)) continue;
            total += tc_local(m_prime, s_prime, d, field, q);
        }
    }
    GradedGroupAnswer answer{q, total, std::nullopt};
    if (field.is_finite()) answer.concrete = witt::concretize(total);
    return answer;
}

SymbolicGroupSum k_groups_from_indices(std::int64_t d, std::int64_t q, const FieldSpec& field) {
    const std::int64_t p = positive_characteristic(field);
    SymbolicGroupSum total(field);
    for (const auto& index : decomposition_indices(p, d, q)) total.add(index.witt_length, index.multiplicity);
    return total;
}

SymbolicGroupSum k2_closed_form(std::int64_t d, const FieldSpec& field) {
    require(d >= 2, "k2_closed_form requires d >= 2");
    if (positive_characteristic(field) == 2) {
        fail(ErrorCategory::domain_error, "k2_closed_form is stated for p > 2");
    }
    SymbolicGroupSum out(field);
    out.add(1, BigInt(d) * (d - 1) / 2);
    return out;
}

} // namespace axesk::tc
