#include "axesk/polynomial.hpp"

#include <sstream>

namespace axesk {

Polynomial Polynomial::constant(std::size_t variables, const BigInt& value) {
    Polynomial p(variables);
    p.add_term(Monomial(variables, 0), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
    require(index < variables, "variable index out of range");
    Polynomial p(variables);
    Monomial m(variables, 0);
    m[index] = 1;
    p.add_term(m, 1);
    return p;
}

BigInt Polynomial::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Monomial& monomial, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require(variables_ == other.variables_, "polynomial variable count mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require(variables_ == other.variables_, "polynomial variable count mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= factor;
    return *this;
}

Polynomial Polynomial::divided_exactly(const BigInt& divisor) const {
    require(divisor != 0, "division by zero");
    Polynomial out(variables_);
    for (const auto& [m, c] : terms_) {
        if (c % divisor != 0) {
            fail(ErrorCategory::internal_error,
                 "non-exact polynomial division: coefficient " + c.str() + " by " + divisor.str());
        }
        out.terms_.emplace(m, c / divisor);
    }
    return out;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    require(lhs.variables_ == rhs.variables_, "polynomial variable count mismatch");
    Polynomial out(lhs.variables_);
    Polynomial::Monomial m(lhs.variables_);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result = constant(variables_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

BigInt Polynomial::evaluate(const std::vector<BigInt>& values) const {
    require(values.size() == variables_, "evaluate: wrong number of values");
    // powers[i][e] = values[i]^e, filled lazily up to the largest exponent seen.
    std::vector<std::vector<BigInt>> powers(variables_);
    for (std::size_t i = 0; i < variables_; ++i) powers[i].push_back(1);
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < variables_ && term != 0; ++i) {
            if (m[i] == 0) continue;
            auto& table = powers[i];
            while (table.size() <= m[i]) table.push_back(table.back() * values[i]);
            term *= table[m[i]];
        }
        total += term;
    }
    return total;
}

std::int64_t Polynomial::evaluate_mod(const std::vector<std::int64_t>& values, std::int64_t modulus) const {
    require(values.size() == variables_, "evaluate_mod: wrong number of values");
    require(modulus >= 1 && modulus <= (std::int64_t{1} << 31), "evaluate_mod: modulus out of range");
    auto reduce = [modulus](std::int64_t v) { return ((v % modulus) + modulus) % modulus; };
    std::vector<std::vector<std::int64_t>> powers(variables_);
    for (std::size_t i = 0; i < variables_; ++i) powers[i].push_back(1 % modulus);
    std::int64_t total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt cm = c % modulus;
        std::int64_t term = reduce(static_cast<std::int64_t>(cm));
        for (std::size_t i = 0; i < variables_ && term != 0; ++i) {
            if (m[i] == 0) continue;
            auto& table = powers[i];
            while (table.size() <= m[i]) table.push_back(table.back() * reduce(values[i]) % modulus);
            term = term * table[m[i]] % modulus;
        }
        total = (total + term) % modulus;
    }
    return total;
}

std::string to_string(const Polynomial& poly, const std::vector<std::string>& names) {
    require(names.size() == poly.variables(), "to_string: wrong number of variable names");
    if (poly.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Lowest total degree first, so "a1 + b1 - a0*b0" reads naturally.
    std::multimap<std::uint64_t, const Polynomial::Terms::value_type*> ordered;
    for (const auto& term : poly.terms()) {
        std::uint64_t degree = 0;
        for (auto e : term.first) degree += e;
        ordered.emplace(degree, &term);
    }
    for (const auto& [degree, term] : ordered) {
        const auto& [m, c] = *term;
        BigInt magnitude = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1 || degree == 0) {
            out << magnitude;
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) out << "*";
            out << names[i];
            if (m[i] > 1) out << "^" << m[i];
            wrote = true;
        }
    }
    return out.str();
}

} // namespace axesk
