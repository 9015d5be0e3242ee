#include "axesk/groups.hpp"

#include <sstream>

#include "axesk/arith.hpp"

namespace axesk {

FiniteAbelianGroup FiniteAbelianGroup::cyclic_power(std::int64_t p, int exponent, const BigInt& count) {
    FiniteAbelianGroup group;
    group.add_cyclic(p, exponent, count);
    return group;
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(const std::vector<BigInt>& factors) {
    FiniteAbelianGroup group;
    for (const BigInt& factor : factors) {
        BigInt n = abs(factor);
        require(n != 0, "invariant factor 0 describes a free summand, not a finite one");
        if (n == 1) continue;
        require(n <= BigInt(std::numeric_limits<std::int64_t>::max()), "invariant factor too large to factor");
        for (const auto& [prime, exponent] : arith::factorize(static_cast<std::int64_t>(n))) {
            group.add_cyclic(prime, exponent);
        }
    }
    return group;
}

void FiniteAbelianGroup::add_cyclic(std::int64_t p, int exponent, const BigInt& count) {
    require(arith::is_prime(p), "primary part requires a prime, got " + std::to_string(p));
    require(exponent >= 0 && count >= 0, "exponent and multiplicity must be nonnegative");
    if (exponent == 0 || count == 0) return;
    parts_[p][exponent] += count;
}

FiniteAbelianGroup& FiniteAbelianGroup::operator+=(const FiniteAbelianGroup& other) {
    for (const auto& [p, counts] : other.parts_) {
        for (const auto& [t, c] : counts) parts_[p][t] += c;
    }
    return *this;
}

FiniteAbelianGroup operator+(FiniteAbelianGroup lhs, const FiniteAbelianGroup& rhs) {
    lhs += rhs;
    return lhs;
}

BigInt FiniteAbelianGroup::log_order(std::int64_t p) const {
    BigInt total = 0;
    auto it = parts_.find(p);
    if (it == parts_.end()) return total;
    for (const auto& [t, c] : it->second) total += BigInt(t) * c;
    return total;
}

BigInt FiniteAbelianGroup::order() const {
    BigInt result = 1;
    for (const auto& [p, counts] : parts_) {
        BigInt e = log_order(p);
        require(e <= 1'000'000, "group order too large to materialize");
        result *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    }
    return result;
}

std::vector<int> FiniteAbelianGroup::exponents(std::int64_t p) const {
    std::vector<int> out;
    auto it = parts_.find(p);
    if (it == parts_.end()) return out;
    for (const auto& [t, c] : it->second) {
        require(c <= 1'000'000, "multiplicity too large to expand");
        for (BigInt i = 0; i < c; ++i) out.push_back(t);
    }
    return out;
}

std::string to_string(const FiniteAbelianGroup& group) {
    if (group.is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, counts] : group.primary_parts()) {
        for (const auto& [t, c] : counts) {
            if (!first) out << " ⊕ ";
            first = false;
            BigInt modulus = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(t));
            if (c == 1) {
                out << "Z/" << modulus;
            } else {
                out << "(Z/" << modulus << ")^" << c;
            }
        }
    }
    return out.str();
}

} // namespace axesk
