#pragma once

// Characteristic zero: relative cyclic homology HC_q((A_d, I_d)/Q) and the
// relative K-theory of A_d over an ind-smooth Q-algebra k, in terms of the
// Hochschild homology HH_j(k) ≅ Ω^j_{k/Q}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axesk/common.hpp"

namespace axesk::charzero {

/// Dimensions of HH_j(k/Q) = Ω^j.
class HHProfile {
public:
    enum class Kind { field_transcendence_degree, explicit_dimensions, symbolic };

    /// Field of transcendence degree τ over Q: dim Ω^j = C(τ, j).
    static HHProfile field(int transcendence_degree);
    static HHProfile explicit_dimensions(std::vector<BigInt> dimensions);
    static HHProfile symbolic();

    Kind kind() const noexcept { return kind_; }
    std::optional<int> transcendence_degree() const noexcept { return trdeg_; }

    /// dim HH_j, or nullopt when unknown (symbolic, or past an explicit list).
    std::optional<BigInt> dimension(std::int64_t j) const;

private:
    Kind kind_ = Kind::symbolic;
    std::optional<int> trdeg_;
    std::vector<BigInt> dimensions_;
};

struct FormTerm {
    std::int64_t form_degree = 0; // j in Ω^j; Ω^0 = k
    BigInt multiplicity;
    bool operator==(const FormTerm&) const = default;
};

/// The infinite summand ⊕_{i>=1} (HH_q)^{⊕d} of relative HC.
struct AxisPart {
    std::int64_t form_degree = 0;
    std::int64_t per_copy_multiplicity = 0;
    bool operator==(const AxisPart&) const = default;
};

struct GradedDimensionAnswer {
    std::int64_t degree = 0;
    /// Ascending form degree; terms known to vanish are omitted.
    std::vector<FormTerm> summands;
    std::optional<AxisPart> axis_part;
    /// HC_0(A_d/Q) ≅ A_d itself.
    bool whole_ring = false;
    /// Σ dim Ω^j · multiplicity, when every dimension is known (finite part only).
    std::optional<BigInt> dimension;

    bool operator==(const GradedDimensionAnswer&) const = default;
};

/// "k^2 ⊕ (Ω^1)^3", "0" when empty.
std::string to_string(const GradedDimensionAnswer& answer);

GradedDimensionAnswer hc_birelative(std::int64_t q, std::int64_t d, const HHProfile& profile);
GradedDimensionAnswer hc_relative(std::int64_t q, std::int64_t d, const HHProfile& profile);
GradedDimensionAnswer k_char_zero(std::int64_t q, std::int64_t d, const HHProfile& profile);

} // namespace axesk::charzero
