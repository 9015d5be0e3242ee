#include "axesk/arith.hpp"

#include <algorithm>
#include <sstream>

namespace axesk::arith {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t f = 3; f <= n / f; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    require(n >= 1, "factorize requires n >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t f = 2; f <= n / f; ++f) {
        int e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        if (e > 0) out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require(n >= 1, "divisors requires n >= 1");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t f = 1; f <= n / f; ++f) {
        if (n % f != 0) continue;
        small.push_back(f);
        if (f != n / f) large.push_back(n / f);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::int64_t n) {
    require(n >= 1, "mobius requires n >= 1");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

PAdicSplit p_adic_split(std::int64_t p, std::int64_t m) {
    require(is_prime(p), "p_adic_split: " + std::to_string(p) + " is not prime");
    require(m >= 1, "p_adic_split requires m >= 1");
    PAdicSplit split{p, m, 0, m};
    while (split.unit_part % p == 0) {
        split.unit_part /= p;
        ++split.valuation;
    }
    return split;
}

namespace {

int witt_cutoff(std::int64_t p, const BigInt& bound, std::int64_t m_prime) {
    require(p >= 2, "cut-off requires p >= 2");
    require(m_prime >= 1, "cut-off requires m' >= 1");
    if (BigInt(m_prime) > bound) return 0;
    int t = 1;
    BigInt upper = BigInt(m_prime) * p;
    while (upper <= bound) {
        upper *= p;
        ++t;
    }
    return t;
}

} // namespace

int t_even(std::int64_t p, std::int64_t r, std::int64_t m_prime) {
    require(r >= 0, "t_even requires r >= 0");
    return witt_cutoff(p, BigInt(2) * r, m_prime);
}

int t_odd(std::int64_t p, std::int64_t r, std::int64_t m_prime) {
    require(r >= 0, "t_odd requires r >= 0");
    return witt_cutoff(p, BigInt(2) * r + 1, m_prime);
}

// --- IntMatrix -------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        require(row.size() == cols_, "ragged matrix literal");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& s = (*this)(source, c);
        if (s != 0) (*this)(target, c) += factor * s;
    }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const BigInt& s = (*this)(r, source);
        if (s != 0) (*this)(r, target) += factor * s;
    }
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    require(lhs.cols() == rhs.rows(), "matrix product dimension mismatch");
    IntMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const BigInt& a = lhs(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<BigInt> operator*(const IntMatrix& lhs, const std::vector<BigInt>& rhs) {
    require(lhs.cols() == rhs.size(), "matrix-vector dimension mismatch");
    std::vector<BigInt> out(lhs.rows());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) out[i] += lhs(i, k) * rhs[k];
    return out;
}

// --- Smith normal form -----------------------------------------------------

namespace {

// Elimination state: work = left · input · right at every step.
class SmithEliminator {
public:
    explicit SmithEliminator(const IntMatrix& input)
        : work_(input),
          left_(IntMatrix::identity(input.rows())),
          left_inv_(IntMatrix::identity(input.rows())),
          right_(IntMatrix::identity(input.cols())),
          right_inv_(IntMatrix::identity(input.cols())) {}

    SmithDecomposition run() {
        const std::size_t limit = std::min(work_.rows(), work_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!eliminate_at(t)) break;
        }
        SmithDecomposition out{left_, left_inv_, right_, right_inv_, work_, t};
        return out;
    }

private:
    void row_add(std::size_t target, std::size_t source, const BigInt& f) {
        work_.add_row_multiple(target, source, f);
        left_.add_row_multiple(target, source, f);
        left_inv_.add_col_multiple(source, target, -f);
    }
    void col_add(std::size_t target, std::size_t source, const BigInt& f) {
        work_.add_col_multiple(target, source, f);
        right_.add_col_multiple(target, source, f);
        right_inv_.add_row_multiple(source, target, -f);
    }
    void row_swap(std::size_t a, std::size_t b) {
        work_.swap_rows(a, b);
        left_.swap_rows(a, b);
        left_inv_.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        work_.swap_cols(a, b);
        right_.swap_cols(a, b);
        right_inv_.swap_rows(a, b);
    }
    void row_negate(std::size_t r) {
        work_.negate_row(r);
        left_.negate_row(r);
        for (std::size_t i = 0; i < left_inv_.rows(); ++i) left_inv_(i, r) = -left_inv_(i, r);
    }

    // Moves the smallest nonzero entry of the trailing block to (t, t).
    bool place_pivot(std::size_t t) {
        bool found = false;
        std::size_t best_r = t, best_c = t;
        BigInt best;
        for (std::size_t r = t; r < work_.rows(); ++r)
            for (std::size_t c = t; c < work_.cols(); ++c) {
                const BigInt& v = work_(r, c);
                if (v == 0) continue;
                BigInt a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    best_r = r;
                    best_c = c;
                }
            }
        if (!found) return false;
        row_swap(t, best_r);
        col_swap(t, best_c);
        return true;
    }

    bool eliminate_at(std::size_t t) {
        while (true) {
            if (!place_pivot(t)) return false;
            bool dirty = false;
            for (std::size_t r = t + 1; r < work_.rows(); ++r) {
                if (work_(r, t) == 0) continue;
                BigInt q = work_(r, t) / work_(t, t);
                row_add(r, t, -q);
                if (work_(r, t) != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < work_.cols(); ++c) {
                if (work_(t, c) == 0) continue;
                BigInt q = work_(t, c) / work_(t, t);
                col_add(c, t, -q);
                if (work_(t, c) != 0) dirty = true;
            }
            if (dirty) continue;
            // Pivot must divide the whole trailing block.
            bool divisible = true;
            for (std::size_t r = t + 1; r < work_.rows() && divisible; ++r)
                for (std::size_t c = t + 1; c < work_.cols(); ++c) {
                    if (work_(r, c) % work_(t, t) != 0) {
                        row_add(t, r, 1);
                        divisible = false;
                        break;
                    }
                }
            if (!divisible) continue;
            if (work_(t, t) < 0) row_negate(t);
            return true;
        }
    }

    IntMatrix work_;
    IntMatrix left_;
    IntMatrix left_inv_;
    IntMatrix right_;
    IntMatrix right_inv_;
};

} // namespace

SmithForm SmithDecomposition::form() const {
    SmithForm f;
    f.left_rank = diagonal.rows();
    f.right_rank = diagonal.cols();
    for (std::size_t i = 0; i < rank; ++i) f.diagonal.push_back(diagonal(i, i));
    return f;
}

SmithDecomposition smith_decomposition(const IntMatrix& matrix) {
    return SmithEliminator(matrix).run();
}

SmithForm smith_normal_form(const IntMatrix& matrix) {
    return smith_decomposition(matrix).form();
}

HomologyGroup homology_of_pair(const IntMatrix& boundary_out, const IntMatrix& boundary_in) {
    const std::size_t n = boundary_out.cols();
    require(boundary_in.rows() == n, "homology_of_pair: boundary dimensions do not chain (" +
                                         std::to_string(n) + " vs " + std::to_string(boundary_in.rows()) + ")");
    if (!boundary_out.empty() && !boundary_in.empty()) {
        require((boundary_out * boundary_in).is_zero(),
                "homology_of_pair: composability violation, boundary_out * boundary_in != 0");
    }
    const std::size_t rank_out = boundary_out.empty() ? 0 : smith_normal_form(boundary_out).rank();
    const SmithForm in_form = boundary_in.empty() ? SmithForm{} : smith_normal_form(boundary_in);

    HomologyGroup h;
    h.free_rank = n - rank_out - in_form.rank();
    h.torsion = FiniteAbelianGroup::from_invariant_factors(in_form.diagonal);
    return h;
}

std::string to_string(const HomologyGroup& group) {
    std::ostringstream out;
    bool first = true;
    if (group.free_rank > 0) {
        out << (group.free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(group.free_rank));
        first = false;
    }
    if (!group.torsion.is_trivial()) {
        if (!first) out << " ⊕ ";
        out << axesk::to_string(group.torsion);
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace axesk::arith
