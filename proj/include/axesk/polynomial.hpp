#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "axesk/common.hpp"

namespace axesk {

/// Sparse multivariate polynomial with integer coefficients in a fixed number
/// of variables. Zero coefficients are never stored.
class Polynomial {
public:
    using Monomial = std::vector<std::uint32_t>;
    using Terms = std::map<Monomial, BigInt>;

    explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

    static Polynomial constant(std::size_t variables, const BigInt& value);
    static Polynomial variable(std::size_t variables, std::size_t index);

    std::size_t variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of the given monomial, 0 when absent.
    BigInt coefficient(const Monomial& monomial) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const BigInt& factor);

    /// Exact division of every coefficient; internal error otherwise.
    Polynomial divided_exactly(const BigInt& divisor) const;

    Polynomial pow(std::uint32_t exponent) const;

    BigInt evaluate(const std::vector<BigInt>& values) const;
    /// Evaluation with all arithmetic reduced modulo `modulus`; result in [0, modulus).
    std::int64_t evaluate_mod(const std::vector<std::int64_t>& values, std::int64_t modulus) const;

    bool operator==(const Polynomial&) const = default;

private:
    void add_term(const Monomial& monomial, const BigInt& coefficient);

    std::size_t variables_;
    Terms terms_;

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

/// Human-readable form with named variables, e.g. "a1 + b1 - a0*b0".
std::string to_string(const Polynomial& poly, const std::vector<std::string>& names);

} // namespace axesk
