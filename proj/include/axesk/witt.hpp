#pragma once

// p-typical Witt vectors of finite length: universal sum (and product)
// polynomials from ghost components, arithmetic over F_p, and the additive
// group structure of W_t(F_{p^n}) that all K- and TC-answers are built from.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "axesk/common.hpp"
#include "axesk/groups.hpp"
#include "axesk/polynomial.hpp"

namespace axesk::witt {

inline constexpr int kDefaultWittLengthBound = 5;
inline constexpr int kProductLengthBound = 3;

/// Base field descriptor.
class FieldSpec {
public:
    struct Finite {
        int degree = 1; // k = F_{p^degree}
        bool operator==(const Finite&) const = default;
    };
    struct SymbolicPerfect {
        bool operator==(const SymbolicPerfect&) const = default;
    };
    struct CharZero {
        std::optional<int> transcendence_degree; // nullopt: symbolic
        bool operator==(const CharZero&) const = default;
    };
    using Detail = std::variant<Finite, SymbolicPerfect, CharZero>;

    static FieldSpec finite(std::int64_t p, int degree);
    static FieldSpec perfect(std::int64_t p);
    static FieldSpec char_zero(std::optional<int> transcendence_degree = std::nullopt);

    std::int64_t characteristic() const noexcept { return characteristic_; }
    const Detail& detail() const noexcept { return detail_; }
    bool is_finite() const noexcept { return std::holds_alternative<Finite>(detail_); }
    /// n for k = F_{p^n}; requires a finite field.
    int finite_degree() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(std::int64_t characteristic, Detail detail) : characteristic_(characteristic), detail_(detail) {}

    std::int64_t characteristic_;
    Detail detail_;
};

/// "F_9", "k (perfect, char 3)", "k (char 0, trdeg 1)"
std::string to_string(const FieldSpec& field);

/// Element of W_t(F_p) in Witt coordinates.
class WittVector {
public:
    WittVector(std::int64_t p, std::vector<std::int64_t> coords);

    static WittVector zero(std::int64_t p, std::size_t length);
    /// Teichmüller lift of 1: (1, 0, ..., 0).
    static WittVector one(std::int64_t p, std::size_t length);

    std::int64_t base() const noexcept { return p_; }
    std::size_t length() const noexcept { return coords_.size(); }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

    auto operator<=>(const WittVector&) const = default;

private:
    std::int64_t p_;
    std::vector<std::int64_t> coords_;
};

/// Ghost components w_i = Σ_{j<=i} p^j x_j^{p^(i-j)} of an integral lift.
std::vector<BigInt> ghost_components(std::int64_t p, const std::vector<BigInt>& lift);

/// S_0, ..., S_{t-1} in variables a_0..a_{t-1}, b_0..b_{t-1} (in that order)
/// with w_i(S) = w_i(a) + w_i(b). Cached per (p, t); thread-safe.
const std::vector<Polynomial>& witt_sum_polynomials(std::int64_t p, int length,
                                                    int max_length = kDefaultWittLengthBound);

/// Product polynomials, w_i(P) = w_i(a) · w_i(b); only for length <= 3.
const std::vector<Polynomial>& witt_product_polynomials(std::int64_t p, int length);

WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_mul(const WittVector& x, const WittVector& y);

/// Additive isomorphism W_t(F_p) -> Z/p^t sending (1, 0, ..., 0) to 1.
std::int64_t witt_to_residue(const WittVector& x);

/// W_t(F_{p^n}) ≅ (Z/p^t)^n as an abelian group.
FiniteAbelianGroup witt_group(const FieldSpec& field, int length);

/// W_t(k)^{⊕ multiplicity}.
struct WittTerm {
    int length = 0;
    BigInt multiplicity;
    bool operator==(const WittTerm&) const = default;
};

/// Finite direct sum ⊕ W_t(k)^{c_t}, canonical: terms sorted by descending
/// length, equal lengths merged, no zero lengths or multiplicities.
class SymbolicGroupSum {
public:
    explicit SymbolicGroupSum(FieldSpec field) : field_(std::move(field)) {}

    void add(int length, const BigInt& multiplicity);
    SymbolicGroupSum& operator+=(const SymbolicGroupSum& other);

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<WittTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Σ length · multiplicity, the W(k)-length of the sum.
    BigInt total_length() const;

    bool operator==(const SymbolicGroupSum&) const = default;

private:
    FieldSpec field_;
    std::vector<WittTerm> terms_;
};

/// "W_2(k)^3 ⊕ W_1(k)^15", "0" when empty.
std::string to_string(const SymbolicGroupSum& sum);

FiniteAbelianGroup concretize(const SymbolicGroupSum& sum);

} // namespace axesk::witt
