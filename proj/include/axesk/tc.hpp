#pragma once

// Relative K-theory of the coordinate axes A_d = k[x_1..x_d]/(x_i x_j, i != j)
// over a perfect field of characteristic p > 0, via the isomorphism
// K_q(A_d, I_d) ≅ TC_q(A_d, B_d, I_d). The bi-relative THH splits into
// summands B(m, s) indexed by cyclic words; the tables below give TP and TC⁻
// of each summand, the local TC obtained from the equalizer of φ_p and can,
// and the assembled answer.
//
// For completeness: K_q(A_d) ≅ K_q(k) ⊕ K_q(A_d, I_d); only the relative
// part is computed here.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "axesk/witt.hpp"

namespace axesk::tc {

enum class ParityClass {
    even_even,      // m and s even
    odd_odd,        // m and s odd
    even_m_odd_s,   // m even, s odd; contributes only when p = 2
};

std::string_view to_string(ParityClass parity);

/// Parity class of the summand B(m, s) for characteristic p; throws
/// domain_error when (m even, s odd) and p != 2.
ParityClass parity_class_of(std::int64_t p, std::int64_t m, std::int64_t s);

/// One contribution W_{witt_length}(k)^{multiplicity} to TC_q, coming from
/// the summands B(p^v m', p^u s').
struct SummandIndex {
    std::int64_t m_prime = 0;
    std::int64_t s_prime = 0;
    int v = 0;
    int u = 0;
    ParityClass parity_class = ParityClass::even_even;
    int witt_length = 0;
    BigInt multiplicity;

    bool operator==(const SummandIndex&) const = default;
};

/// All nonzero contributions to degree q, sorted by (m', s', v, u).
std::vector<SummandIndex> decomposition_indices(std::int64_t p, std::int64_t d, std::int64_t q);

/// π_degree of (THH(k) ⊗ B(m, s))^{tT}.
witt::SymbolicGroupSum tp_groups(std::int64_t m, std::int64_t s, const witt::FieldSpec& field,
                                 ParityClass parity_class, std::int64_t degree);

/// π_degree of (THH(k) ⊗ B(m, s))^{hT}.
witt::SymbolicGroupSum tcminus_groups(std::int64_t m, std::int64_t s, const witt::FieldSpec& field,
                                      ParityClass parity_class, std::int64_t degree);

/// TC_q(m', s'): the part of TC_q(A_d, B_d, I_d) coming from all summands
/// B(p^v m', p^u s'). Throws domain_error for parity combinations that do
/// not occur in degree q.
witt::SymbolicGroupSum tc_local(std::int64_t m_prime, std::int64_t s_prime, std::int64_t d,
                                const witt::FieldSpec& field, std::int64_t q);

struct GradedGroupAnswer {
    std::int64_t degree = 0;
    witt::SymbolicGroupSum symbolic;
    std::optional<FiniteAbelianGroup> concrete;
};

/// K_q(A_d, I_d) ≅ TC_q(A_d, B_d, I_d) over a field of characteristic p.
GradedGroupAnswer k_groups(std::int64_t d, std::int64_t q, const witt::FieldSpec& field);

/// The same group assembled term by term from decomposition_indices.
witt::SymbolicGroupSum k_groups_from_indices(std::int64_t d, std::int64_t q, const witt::FieldSpec& field);

/// k^{d(d-1)/2}, the expected K_2 for p > 2.
witt::SymbolicGroupSum k2_closed_form(std::int64_t d, const witt::FieldSpec& field);

} // namespace axesk::tc
