#include "axesk/witt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "axesk/arith.hpp"

namespace axesk::witt {

// --- FieldSpec ---------------------------------------------------------------

FieldSpec FieldSpec::finite(std::int64_t p, int degree) {
    require(arith::is_prime(p), "finite field characteristic must be prime, got " + std::to_string(p));
    require(degree >= 1, "finite field degree must be >= 1");
    return FieldSpec(p, Finite{degree});
}

FieldSpec FieldSpec::perfect(std::int64_t p) {
    require(arith::is_prime(p), "perfect field characteristic must be prime, got " + std::to_string(p));
    return FieldSpec(p, SymbolicPerfect{});
}

FieldSpec FieldSpec::char_zero(std::optional<int> transcendence_degree) {
    require(!transcendence_degree || *transcendence_degree >= 0, "transcendence degree must be nonnegative");
    return FieldSpec(0, CharZero{transcendence_degree});
}

int FieldSpec::finite_degree() const {
    if (!is_finite()) fail(ErrorCategory::domain_error, "field " + to_string(*this) + " is not finite");
    return std::get<Finite>(detail_).degree;
}

std::string to_string(const FieldSpec& field) {
    struct Visitor {
        std::int64_t p;
        std::string operator()(const FieldSpec::Finite& f) const {
            BigInt q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(f.degree));
            return "F_" + q.str();
        }
        std::string operator()(const FieldSpec::SymbolicPerfect&) const {
            return "k (perfect, char " + std::to_string(p) + ")";
        }
        std::string operator()(const FieldSpec::CharZero& f) const {
            if (f.transcendence_degree) return "k (char 0, trdeg " + std::to_string(*f.transcendence_degree) + ")";
            return "k (char 0)";
        }
    };
    return std::visit(Visitor{field.characteristic()}, field.detail());
}

// --- WittVector --------------------------------------------------------------

WittVector::WittVector(std::int64_t p, std::vector<std::int64_t> coords) : p_(p), coords_(std::move(coords)) {
    require(arith::is_prime(p_), "Witt vectors need a prime base, got " + std::to_string(p_));
    for (std::int64_t c : coords_) require(c >= 0 && c < p_, "Witt coordinate outside [0, p)");
}

WittVector WittVector::zero(std::int64_t p, std::size_t length) {
    return WittVector(p, std::vector<std::int64_t>(length, 0));
}

WittVector WittVector::one(std::int64_t p, std::size_t length) {
    std::vector<std::int64_t> coords(length, 0);
    if (length > 0) coords[0] = 1;
    return WittVector(p, std::move(coords));
}

std::vector<BigInt> ghost_components(std::int64_t p, const std::vector<BigInt>& lift) {
    std::vector<BigInt> ghost(lift.size());
    for (std::size_t i = 0; i < lift.size(); ++i) {
        BigInt pj = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            BigInt exponent = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(i - j));
            ghost[i] += pj * boost::multiprecision::pow(lift[j], static_cast<unsigned>(exponent));
            pj *= p;
        }
    }
    return ghost;
}

namespace {

// Ghost polynomial w_i in the variable block starting at `offset`.
Polynomial ghost_polynomial(std::int64_t p, std::size_t i, std::size_t offset, std::size_t variables) {
    Polynomial w(variables);
    BigInt pj = 1;
    for (std::size_t j = 0; j <= i; ++j) {
        auto exponent = static_cast<std::uint32_t>(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(i - j)));
        Polynomial term = Polynomial::variable(variables, offset + j).pow(exponent);
        term *= pj;
        w += term;
        pj *= p;
    }
    return w;
}

// Solves w_n(X_0, ..., X_n) = target_n recursively:
// X_n = (target_n - Σ_{j<n} p^j X_j^{p^(n-j)}) / p^n, exactly over Z.
std::vector<Polynomial> solve_ghost_system(std::int64_t p, int length,
                                           const std::function<Polynomial(std::size_t)>& target) {
    std::vector<Polynomial> solution;
    // frobenius_powers[j][k] = X_j^{p^k}
    std::vector<std::vector<Polynomial>> frobenius_powers;
    BigInt pn = 1;
    for (int n = 0; n < length; ++n) {
        Polynomial rhs = target(static_cast<std::size_t>(n));
        BigInt pj = 1;
        for (int j = 0; j < n; ++j) {
            auto& powers = frobenius_powers[static_cast<std::size_t>(j)];
            while (static_cast<int>(powers.size()) <= n - j) {
                powers.push_back(powers.back().pow(static_cast<std::uint32_t>(p)));
            }
            Polynomial term = powers[static_cast<std::size_t>(n - j)];
            term *= pj;
            rhs -= term;
            pj *= p;
        }
        solution.push_back(rhs.divided_exactly(pn));
        frobenius_powers.push_back({solution.back()});
        pn *= p;
    }
    return solution;
}

enum class Operation { sum, product };

const std::vector<Polynomial>& cached_polynomials(Operation op, std::int64_t p, int length) {
    static std::mutex mutex;
    static std::map<std::tuple<Operation, std::int64_t, int>, std::unique_ptr<const std::vector<Polynomial>>> cache;

    std::lock_guard lock(mutex);
    auto key = std::make_tuple(op, p, length);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    const auto vars = static_cast<std::size_t>(2 * length);
    const auto t = static_cast<std::size_t>(length);
    auto target = [&](std::size_t n) {
        Polynomial a = ghost_polynomial(p, n, 0, vars);
        Polynomial b = ghost_polynomial(p, n, t, vars);
        return op == Operation::sum ? a + b : a * b;
    };
    auto polys = std::make_unique<const std::vector<Polynomial>>(solve_ghost_system(p, length, target));
    const auto& ref = *polys;
    cache.emplace(key, std::move(polys));
    return ref;
}

std::vector<std::int64_t> evaluation_point(const WittVector& x, const WittVector& y) {
    std::vector<std::int64_t> values = x.coords();
    values.insert(values.end(), y.coords().begin(), y.coords().end());
    return values;
}

void check_compatible(const WittVector& x, const WittVector& y) {
    require(x.base() == y.base(), "Witt vectors over different primes");
    require(x.length() == y.length(), "Witt vectors of different lengths");
}

} // namespace

const std::vector<Polynomial>& witt_sum_polynomials(std::int64_t p, int length, int max_length) {
    require(arith::is_prime(p), "witt_sum_polynomials: p must be prime");
    require(length >= 0, "Witt length must be nonnegative");
    if (length > max_length) {
        fail(ErrorCategory::budget_exceeded, "Witt length " + std::to_string(length) + " exceeds degree bound " +
                                                 std::to_string(max_length));
    }
    return cached_polynomials(Operation::sum, p, length);
}

const std::vector<Polynomial>& witt_product_polynomials(std::int64_t p, int length) {
    require(arith::is_prime(p), "witt_product_polynomials: p must be prime");
    require(length >= 0, "Witt length must be nonnegative");
    if (length > kProductLengthBound) {
        fail(ErrorCategory::budget_exceeded, "Witt product polynomials are only built up to length " +
                                                 std::to_string(kProductLengthBound));
    }
    return cached_polynomials(Operation::product, p, length);
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
    check_compatible(x, y);
    const auto& polys = witt_sum_polynomials(x.base(), static_cast<int>(x.length()));
    const auto values = evaluation_point(x, y);
    std::vector<std::int64_t> coords;
    for (const auto& s : polys) coords.push_back(s.evaluate_mod(values, x.base()));
    return WittVector(x.base(), std::move(coords));
}

WittVector witt_mul(const WittVector& x, const WittVector& y) {
    check_compatible(x, y);
    const auto& polys = witt_product_polynomials(x.base(), static_cast<int>(x.length()));
    const auto values = evaluation_point(x, y);
    std::vector<std::int64_t> coords;
    for (const auto& s : polys) coords.push_back(s.evaluate_mod(values, x.base()));
    return WittVector(x.base(), std::move(coords));
}

std::int64_t witt_to_residue(const WittVector& x) {
    const std::int64_t p = x.base();
    const std::size_t t = x.length();
    BigInt order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(t));
    require(order <= 1'000'000, "witt_to_residue: W_t(F_p) too large to walk");
    const WittVector unit = WittVector::one(p, t);
    WittVector acc = WittVector::zero(p, t);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(order); ++k) {
        if (acc == x) return k;
        acc = witt_add(acc, unit);
    }
    fail(ErrorCategory::internal_error, "witt_to_residue: multiples of 1 do not exhaust W_t(F_p)");
}

FiniteAbelianGroup witt_group(const FieldSpec& field, int length) {
    require(length >= 0, "Witt length must be nonnegative");
    const int n = field.finite_degree();
    return FiniteAbelianGroup::cyclic_power(field.characteristic(), length, n);
}

// --- SymbolicGroupSum ----------------------------------------------------------

void SymbolicGroupSum::add(int length, const BigInt& multiplicity) {
    require(length >= 0 && multiplicity >= 0, "Witt term needs nonnegative length and multiplicity");
    if (length == 0 || multiplicity == 0) return;
    auto it = std::find_if(terms_.begin(), terms_.end(), [length](const WittTerm& t) { return t.length <= length; });
    if (it != terms_.end() && it->length == length) {
        it->multiplicity += multiplicity;
    } else {
        terms_.insert(it, WittTerm{length, multiplicity});
    }
}

SymbolicGroupSum& SymbolicGroupSum::operator+=(const SymbolicGroupSum& other) {
    require(field_ == other.field_, "cannot add group sums over different fields");
    for (const auto& term : other.terms_) add(term.length, term.multiplicity);
    return *this;
}

BigInt SymbolicGroupSum::total_length() const {
    BigInt total = 0;
    for (const auto& term : terms_) total += BigInt(term.length) * term.multiplicity;
    return total;
}

std::string to_string(const SymbolicGroupSum& sum) {
    if (sum.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& term : sum.terms()) {
        if (!first) out << " ⊕ ";
        first = false;
        out << "W_" << term.length << "(k)";
        if (term.multiplicity != 1) out << "^" << term.multiplicity;
    }
    return out.str();
}

FiniteAbelianGroup concretize(const SymbolicGroupSum& sum) {
    if (!sum.field().is_finite()) {
        fail(ErrorCategory::domain_error, "cannot concretize over symbolic field " + to_string(sum.field()));
    }
    FiniteAbelianGroup group;
    const int n = sum.field().finite_degree();
    for (const auto& term : sum.terms()) {
        group.add_cyclic(sum.field().characteristic(), term.length, term.multiplicity * n);
    }
    return group;
}

} // namespace axesk::witt
