#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "axesk/common.hpp"

namespace axesk {

/// A finite abelian group in primary decomposition: for each prime p a
/// multiset of exponents t, each occurrence standing for a summand Z/p^t.
/// The multiset is stored as exponent -> count, exponents descending, so that
/// very large multiplicities (tens of thousands of copies of k) stay compact.
class FiniteAbelianGroup {
public:
    using ExponentCounts = std::map<int, BigInt, std::greater<>>;
    using PrimaryParts = std::map<std::int64_t, ExponentCounts>;

    FiniteAbelianGroup() = default;

    /// (Z/p^exponent)^count. A zero exponent or count adds nothing.
    static FiniteAbelianGroup cyclic_power(std::int64_t p, int exponent, const BigInt& count = 1);

    /// Z/d_1 ⊕ Z/d_2 ⊕ ... from invariant factors; factors equal to 1 are skipped.
    static FiniteAbelianGroup from_invariant_factors(const std::vector<BigInt>& factors);

    void add_cyclic(std::int64_t p, int exponent, const BigInt& count = 1);
    FiniteAbelianGroup& operator+=(const FiniteAbelianGroup& other);

    const PrimaryParts& primary_parts() const noexcept { return parts_; }
    bool is_trivial() const noexcept { return parts_.empty(); }

    /// Σ t·count over the p-part, i.e. log_p of the order of the p-part.
    BigInt log_order(std::int64_t p) const;
    BigInt order() const;

    /// Exponents of the p-part expanded into a descending list. Only sensible
    /// for small multiplicities.
    std::vector<int> exponents(std::int64_t p) const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    PrimaryParts parts_;
};

FiniteAbelianGroup operator+(FiniteAbelianGroup lhs, const FiniteAbelianGroup& rhs);

/// "(Z/9)^2 ⊕ Z/3", primes ascending, exponents descending; "0" when trivial.
std::string to_string(const FiniteAbelianGroup& group);

} // namespace axesk
