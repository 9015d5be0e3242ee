#include "axesk/charzero.hpp"

#include <sstream>

#include "axesk/words.hpp"

namespace axesk::charzero {

HHProfile HHProfile::field(int transcendence_degree) {
    require(transcendence_degree >= 0, "transcendence degree must be nonnegative");
    HHProfile profile;
    profile.kind_ = Kind::field_transcendence_degree;
    profile.trdeg_ = transcendence_degree;
    return profile;
}

HHProfile HHProfile::explicit_dimensions(std::vector<BigInt> dimensions) {
    require(!dimensions.empty() && dimensions.front() >= 1, "explicit HH profile needs dim HH_0 >= 1");
    for (const auto& dim : dimensions) require(dim >= 0, "HH dimensions must be nonnegative");
    HHProfile profile;
    profile.kind_ = Kind::explicit_dimensions;
    profile.dimensions_ = std::move(dimensions);
    return profile;
}

HHProfile HHProfile::symbolic() { return HHProfile{}; }

std::optional<BigInt> HHProfile::dimension(std::int64_t j) const {
    if (j < 0) return BigInt(0);
    switch (kind_) {
    case Kind::field_transcendence_degree: {
        // C(τ, j)
        const std::int64_t tau = *trdeg_;
        if (j > tau) return BigInt(0);
        BigInt c = 1;
        for (std::int64_t i = 0; i < j; ++i) c = c * (tau - i) / (i + 1);
        return c;
    }
    case Kind::explicit_dimensions:
        if (static_cast<std::size_t>(j) < dimensions_.size()) return dimensions_[static_cast<std::size_t>(j)];
        return std::nullopt;
    case Kind::symbolic: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// ⊕_j Ω^j with multiplicity c_{d-1}(top - j) for j = 0 .. top - 2.
GradedDimensionAnswer form_sum(std::int64_t degree, std::int64_t top, std::int64_t d, const HHProfile& profile) {
    GradedDimensionAnswer answer;
    answer.degree = degree;
    BigInt total = 0;
    bool known = true;
    for (std::int64_t j = 0; j <= top - 2; ++j) {
        BigInt multiplicity = words::grw_c(d, top - j);
        if (multiplicity == 0) continue;
        auto dim = profile.dimension(j);
        if (dim && *dim == 0) continue;
        if (dim) {
            total += *dim * multiplicity;
        } else {
            known = false;
        }
        answer.summands.push_back(FormTerm{j, multiplicity});
    }
    if (known) answer.dimension = total;
    return answer;
}

} // namespace

GradedDimensionAnswer hc_birelative(std::int64_t q, std::int64_t d, const HHProfile& profile) {
    require(q >= 0, "hc_birelative requires q >= 0");
    require(d >= 2, "hc_birelative requires d >= 2");
    // m = q + 1 - j ranges over 2 .. q + 1.
    return form_sum(q, q + 1, d, profile);
}

GradedDimensionAnswer hc_relative(std::int64_t q, std::int64_t d, const HHProfile& profile) {
    require(q >= 0, "hc_relative requires q >= 0");
    require(d >= 2, "hc_relative requires d >= 2");
    if (q == 0) {
        GradedDimensionAnswer answer;
        answer.whole_ring = true;
        return answer;
    }
    GradedDimensionAnswer answer = hc_birelative(q, d, profile);
    auto dim = profile.dimension(q);
    if (!dim || *dim != 0) answer.axis_part = AxisPart{q, d};
    return answer;
}

GradedDimensionAnswer k_char_zero(std::int64_t q, std::int64_t d, const HHProfile& profile) {
    require(q >= 0, "k_char_zero requires q >= 0");
    require(d >= 2, "k_char_zero requires d >= 2");
    // Ω^j with multiplicity c_{d-1}(q - j), j = 0 .. q - 2.
    return form_sum(q, q, d, profile);
}

namespace {

std::string form_name(std::int64_t j) { return j == 0 ? "k" : "Ω^" + std::to_string(j); }

std::string power(const std::string& base, const BigInt& multiplicity) {
    if (multiplicity == 1) return base;
    const bool wrap = base.size() > 1;
    return (wrap ? "(" + base + ")" : base) + "^" + multiplicity.str();
}

} // namespace

std::string to_string(const GradedDimensionAnswer& answer) {
    if (answer.whole_ring) return "A_d";
    std::ostringstream out;
    bool first = true;
    for (const auto& term : answer.summands) {
        if (!first) out << " ⊕ ";
        first = false;
        out << power(form_name(term.form_degree), term.multiplicity);
    }
    if (answer.axis_part) {
        if (!first) out << " ⊕ ";
        first = false;
        out << "⊕_{i≥1} "
            << power(form_name(answer.axis_part->form_degree), answer.axis_part->per_copy_multiplicity);
    }
    if (first) return "0";
    return out.str();
}

} // namespace axesk::charzero
