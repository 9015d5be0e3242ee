#pragma once

// Exact number theory and integer linear algebra shared by the other modules.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "axesk/common.hpp"
#include "axesk/groups.hpp"

namespace axesk::arith {

bool is_prime(std::int64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// All positive divisors of n, strictly increasing.
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);

/// m = p^valuation · unit_part with unit_part coprime to p.
struct PAdicSplit {
    std::int64_t base = 0;
    std::int64_t value = 0;
    int valuation = 0;
    std::int64_t unit_part = 0;
};

PAdicSplit p_adic_split(std::int64_t p, std::int64_t m);

/// The unique t >= 1 with p^(t-1)·m' <= 2r < p^t·m', or 0 when m' > 2r.
int t_even(std::int64_t p, std::int64_t r, std::int64_t m_prime);

/// As t_even with 2r replaced by 2r+1.
int t_odd(std::int64_t p, std::int64_t r, std::int64_t m_prime);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor · row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
    void negate_row(std::size_t r);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
std::vector<BigInt> operator*(const IntMatrix& lhs, const std::vector<BigInt>& rhs);

/// Invariant factors d_1 | d_2 | ... | d_k (nonzero entries only).
struct SmithForm {
    std::vector<BigInt> diagonal;
    std::size_t left_rank = 0;  // rows of the input
    std::size_t right_rank = 0; // columns of the input

    std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& matrix);

/// Full decomposition left · matrix · right = diagonal with unimodular
/// left/right, together with their inverses. The diagonal matrix carries the
/// invariant factors in its leading entries.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix left_inverse;
    IntMatrix right;
    IntMatrix right_inverse;
    IntMatrix diagonal;
    std::size_t rank = 0;

    SmithForm form() const;
};

SmithDecomposition smith_decomposition(const IntMatrix& matrix);

/// ker(outgoing) / im(incoming) as a free rank plus a torsion group.
struct HomologyGroup {
    std::size_t free_rank = 0;
    FiniteAbelianGroup torsion;

    bool is_zero() const { return free_rank == 0 && torsion.is_trivial(); }
    bool operator==(const HomologyGroup&) const = default;
};

/// Computes ker(boundary_out)/im(boundary_in) for C_in -> C -> C_out.
/// boundary_out has dim C columns and boundary_in has dim C rows; a matrix
/// with zero rows or columns stands for the zero map, so pass
/// IntMatrix(0, dim C) or IntMatrix(dim C, 0) for an absent neighbour.
HomologyGroup homology_of_pair(const IntMatrix& boundary_out, const IntMatrix& boundary_in);

std::string to_string(const HomologyGroup& group);

} // namespace axesk::arith
