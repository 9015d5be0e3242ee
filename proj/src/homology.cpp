#include "axesk/homology.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace axesk::homology {

using arith::IntMatrix;

Coefficients Coefficients::field(std::int64_t characteristic) {
    require(characteristic == 0 || arith::is_prime(characteristic),
            "field characteristic must be 0 or prime, got " + std::to_string(characteristic));
    return {false, characteristic};
}

std::string to_string(const Coefficients& coefficients) {
    if (coefficients.integers) return "Z";
    return "k (char " + std::to_string(coefficients.characteristic) + ")";
}

std::string to_string(const ModuleDescriptor& module, const Coefficients& coefficients) {
    switch (module.kind) {
    case ModuleKind::zero: return "0";
    case ModuleKind::two_torsion: return "Z/2";
    case ModuleKind::free: {
        std::string ring = coefficients.integers ? "Z" : "k";
        return module.rank == 1 ? ring : ring + "^" + std::to_string(module.rank);
    }
    }
    return "0";
}

std::string_view to_string(HomotopyTag tag) {
    switch (tag) {
    case HomotopyTag::suspension_sphere_smash_orbit: return "suspension-of-sphere-smash-orbit";
    case HomotopyTag::sphere_smash_orbit: return "sphere-smash-orbit";
    case HomotopyTag::sphere_smash_rp2: return "sphere-smash-RP2";
    }
    return "sphere-smash-orbit";
}

SummandHomology closed_form_homology(std::size_t m, std::size_t s, Coefficients coefficients) {
    require(s >= 2, "closed_form_homology: period must be >= 2 (period 1 words always repeat a letter)");
    require(m % s == 0, "closed_form_homology: period " + std::to_string(s) + " does not divide length " +
                            std::to_string(m));
    SummandHomology h;
    h.length = m;
    h.period = s;
    h.blocks = m / s;
    h.coefficients = coefficients;

    const ModuleDescriptor rank_one{ModuleKind::free, 1};
    const ModuleDescriptor zero{ModuleKind::zero, 0};
    if (s % 2 == 0 || h.blocks % 2 == 1) {
        h.degree_table[m - 1] = rank_one;
        h.degree_table[m] = rank_one;
        h.connes_multiplier = static_cast<std::int64_t>(h.blocks);
        h.homotopy_tag = s % 2 == 0 ? HomotopyTag::suspension_sphere_smash_orbit : HomotopyTag::sphere_smash_orbit;
        return h;
    }
    // s odd, i even: R/2R in degree m-1 and R[2] in degree m.
    h.homotopy_tag = HomotopyTag::sphere_smash_rp2;
    h.connes_multiplier = 0;
    if (coefficients.integers) {
        h.degree_table[m - 1] = ModuleDescriptor{ModuleKind::two_torsion, 0};
        h.degree_table[m] = zero;
    } else if (coefficients.characteristic == 2) {
        h.degree_table[m - 1] = rank_one;
        h.degree_table[m] = rank_one;
    } else {
        h.degree_table[m - 1] = zero;
        h.degree_table[m] = zero;
    }
    return h;
}

std::string to_string(const Simplex& simplex) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i > 0) out << ",";
        const auto& e = simplex[i];
        if (e.is_unit()) {
            out << "1";
        } else {
            out << "x" << e.letter;
            if (e.power > 1) out << "^" << e.power;
        }
    }
    out << ")";
    return out.str();
}

IntMatrix IntegerChainComplex::boundary(std::size_t k) const {
    if (k < boundaries.size()) return boundaries[k];
    // Beyond the top degree: zero map from the empty module.
    return IntMatrix(dimension(k - 1), 0);
}

std::int64_t IntegerChainComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(basis[k].size());
    }
    return chi;
}

namespace {

// Monoid product; nullopt is the basepoint 0.
std::optional<MonoidElement> multiply(const MonoidElement& a, const MonoidElement& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    if (a.letter != b.letter) return std::nullopt;
    return MonoidElement{a.letter, a.power + b.power};
}

bool is_degenerate(const Simplex& simplex) {
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        if (simplex[i].is_unit()) return true;
    }
    return false;
}

// Distinct rotations of the representative, as letter sequences.
std::vector<std::vector<int>> distinct_rotations(const words::CyclicWord& word) {
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < word.period; ++k) out.push_back(words::rotate(word.representative, k).letters());
    return out;
}

// All ways to cut `letters` into `pieces` consecutive blocks, each empty or a
// power of one letter. With `normalized`, blocks 1.. must be nonempty.
void factorizations(const std::vector<int>& letters, std::size_t pieces, bool normalized, std::vector<Simplex>& out) {
    Simplex current;
    auto place = [&](auto&& self, std::size_t start) -> void {
        const std::size_t index = current.size();
        if (index + 1 == pieces) {
            // Last block takes the remainder.
            const std::size_t len = letters.size() - start;
            if (normalized && index > 0 && len == 0) return;
            if (len == 0) {
                current.push_back(MonoidElement{});
            } else {
                for (std::size_t i = start; i < letters.size(); ++i)
                    if (letters[i] != letters[start]) return;
                current.push_back(MonoidElement{letters[start], static_cast<std::uint32_t>(len)});
            }
            out.push_back(current);
            current.pop_back();
            return;
        }
        const std::size_t min_len = (normalized && index > 0) ? 1 : 0;
        for (std::size_t len = min_len; start + len <= letters.size(); ++len) {
            if (len > 0 && letters[start + len - 1] != letters[start]) break;
            current.push_back(len == 0 ? MonoidElement{}
                                       : MonoidElement{letters[start], static_cast<std::uint32_t>(len)});
            self(self, start + len);
            current.pop_back();
        }
    };
    place(place, 0);
}

Simplex face(const Simplex& simplex, std::size_t i, bool& is_basepoint) {
    const std::size_t k = simplex.size() - 1;
    Simplex out;
    out.reserve(k);
    is_basepoint = false;
    if (i < k) {
        auto product = multiply(simplex[i], simplex[i + 1]);
        if (!product) {
            is_basepoint = true;
            return out;
        }
        for (std::size_t j = 0; j < i; ++j) out.push_back(simplex[j]);
        out.push_back(*product);
        for (std::size_t j = i + 2; j <= k; ++j) out.push_back(simplex[j]);
    } else {
        auto product = multiply(simplex[k], simplex[0]);
        if (!product) {
            is_basepoint = true;
            return out;
        }
        out.push_back(*product);
        for (std::size_t j = 1; j < k; ++j) out.push_back(simplex[j]);
    }
    return out;
}

std::size_t index_of(const std::vector<Simplex>& basis, const Simplex& simplex) {
    auto it = std::lower_bound(basis.begin(), basis.end(), simplex);
    if (it == basis.end() || *it != simplex) {
        fail(ErrorCategory::internal_error, "face " + to_string(simplex) + " escaped the cyclic subset");
    }
    return static_cast<std::size_t>(it - basis.begin());
}

} // namespace

IntegerChainComplex build_cyclic_bar_complex(const words::CyclicWord& word, const ComplexOptions& options) {
    const std::size_t m = word.length;
    if (m > options.max_length) {
        fail(ErrorCategory::budget_exceeded, "word length " + std::to_string(m) + " exceeds enumeration bound " +
                                                 std::to_string(options.max_length));
    }
    // Normalized: positions 1..k hold letters, so k <= m.
    const std::size_t top = options.normalized ? m : std::max(options.top_degree, m);
    const auto rotations = distinct_rotations(word);

    IntegerChainComplex complex;
    complex.top_degree = top;
    complex.basis.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        auto& basis = complex.basis[k];
        for (const auto& rotation : rotations) factorizations(rotation, k + 1, options.normalized, basis);
        std::sort(basis.begin(), basis.end());
        basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    }

    complex.boundaries.resize(top + 1);
    complex.boundaries[0] = IntMatrix(0, complex.dimension(0));
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix d(complex.dimension(k - 1), complex.dimension(k));
        for (std::size_t col = 0; col < complex.basis[k].size(); ++col) {
            const Simplex& simplex = complex.basis[k][col];
            for (std::size_t i = 0; i <= k; ++i) {
                bool basepoint = false;
                Simplex f = face(simplex, i, basepoint);
                if (basepoint) continue;
                if (options.normalized && is_degenerate(f)) continue;
                d(index_of(complex.basis[k - 1], f), col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        complex.boundaries[k] = std::move(d);
    }

    for (std::size_t k = 2; k <= top; ++k) {
        const IntMatrix& outer = complex.boundaries[k - 1];
        const IntMatrix& inner = complex.boundaries[k];
        if (outer.empty() || inner.empty()) continue;
        if (!(outer * inner).is_zero()) {
            fail(ErrorCategory::internal_error, "boundary of boundary is nonzero in degree " + std::to_string(k));
        }
    }
    return complex;
}

IntegerChainComplex build_cyclic_subset_complex(const words::CyclicWord& word, const ComplexOptions& options) {
    require(words::has_no_cyclic_repetitions(word.representative),
            "build_cyclic_subset_complex: " + words::to_string(word.representative) + " has cyclic repetitions");
    return build_cyclic_bar_complex(word, options);
}

std::map<std::size_t, arith::HomologyGroup> complex_homology(const IntegerChainComplex& complex) {
    std::map<std::size_t, arith::HomologyGroup> out;
    for (std::size_t k = 0; k <= complex.top_degree; ++k) {
        auto h = arith::homology_of_pair(complex.boundary(k), complex.boundary(k + 1));
        if (!h.is_zero()) out.emplace(k, std::move(h));
    }
    return out;
}

std::map<std::size_t, arith::HomologyGroup> oracle_homology(const words::CyclicWord& word, std::size_t max_length) {
    ComplexOptions options;
    options.max_length = max_length;
    return complex_homology(build_cyclic_subset_complex(word, options));
}

IntMatrix connes_operator(const IntegerChainComplex& complex, std::size_t n) {
    require(n + 1 <= complex.top_degree, "connes_operator: degree out of range");
    const auto& source = complex.basis[n];
    const auto& target = complex.basis[n + 1];
    IntMatrix b(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
        Simplex rotated = source[col];
        for (std::size_t j = 0; j <= n; ++j) {
            // rotated = τ^j(simplex), τ(π_0..π_n) = (π_n, π_0, ..., π_{n-1})
            Simplex lifted;
            lifted.reserve(n + 2);
            lifted.push_back(MonoidElement{});
            lifted.insert(lifted.end(), rotated.begin(), rotated.end());
            if (!is_degenerate(lifted)) {
                const int sign = ((n * j) % 2 == 0) ? 1 : -1;
                b(index_of(target, lifted), col) += sign;
            }
            std::rotate(rotated.rbegin(), rotated.rbegin() + 1, rotated.rend());
        }
    }
    return b;
}

namespace {

// Free part of H_k = ker ∂_k / im ∂_{k+1} with explicit generators and the
// coordinate functionals that read a cycle's free coefficients.
struct FreeHomologyBasis {
    std::vector<std::vector<BigInt>> generators;
    // coefficient(c)[j] for cycle c
    IntMatrix kernel_coords; // (kernel dim) x n: rows of right_inverse past the rank
    IntMatrix quotient_left; // L' of the second Smith decomposition
    std::size_t first_free = 0;

    BigInt coefficient(const std::vector<BigInt>& cycle, std::size_t which) const {
        std::vector<BigInt> a = kernel_coords * cycle;
        std::vector<BigInt> b = quotient_left * a;
        return b[first_free + which];
    }
};

FreeHomologyBasis free_homology_basis(const IntegerChainComplex& complex, std::size_t k) {
    const IntMatrix out = complex.boundary(k);
    const IntMatrix in = complex.boundary(k + 1);
    const std::size_t n = complex.dimension(k);

    const arith::SmithDecomposition out_snf =
        out.empty() ? arith::SmithDecomposition{IntMatrix::identity(out.rows()), IntMatrix::identity(out.rows()),
                                                IntMatrix::identity(n), IntMatrix::identity(n), out, 0}
                    : arith::smith_decomposition(out);
    const std::size_t r = out_snf.rank;
    const std::size_t kernel_dim = n - r;

    IntMatrix kernel_basis(n, kernel_dim);
    IntMatrix kernel_coords(kernel_dim, n);
    for (std::size_t j = 0; j < kernel_dim; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            kernel_basis(i, j) = out_snf.right(i, r + j);
            kernel_coords(j, i) = out_snf.right_inverse(r + j, i);
        }
    }
    // Boundaries expressed in kernel coordinates.
    IntMatrix relations(kernel_dim, in.cols());
    if (!in.empty() && kernel_dim > 0) relations = kernel_coords * in;

    const arith::SmithDecomposition rel_snf =
        relations.empty()
            ? arith::SmithDecomposition{IntMatrix::identity(kernel_dim), IntMatrix::identity(kernel_dim),
                                        IntMatrix::identity(relations.cols()), IntMatrix::identity(relations.cols()),
                                        relations, 0}
            : arith::smith_decomposition(relations);

    FreeHomologyBasis basis;
    basis.kernel_coords = kernel_coords;
    basis.quotient_left = rel_snf.left;
    basis.first_free = rel_snf.rank;
    for (std::size_t j = rel_snf.rank; j < kernel_dim; ++j) {
        std::vector<BigInt> unit(kernel_dim);
        for (std::size_t i = 0; i < kernel_dim; ++i) unit[i] = rel_snf.left_inverse(i, j);
        basis.generators.push_back(kernel_basis * unit);
    }
    return basis;
}

} // namespace

std::int64_t oracle_connes(const words::CyclicWord& word, std::size_t max_length) {
    ComplexOptions options;
    options.max_length = max_length;
    const IntegerChainComplex complex = build_cyclic_subset_complex(word, options);
    const std::size_t m = word.length;

    const FreeHomologyBasis lower = free_homology_basis(complex, m - 1);
    const FreeHomologyBasis upper = free_homology_basis(complex, m);
    if (lower.generators.empty() || upper.generators.empty()) return 0;

    const std::vector<BigInt> image = connes_operator(complex, m - 1) * lower.generators.front();
    if (!complex.boundary(m).empty()) {
        for (const BigInt& v : complex.boundary(m) * image) {
            if (v != 0) fail(ErrorCategory::internal_error, "Connes operator produced a non-cycle");
        }
    }
    return static_cast<std::int64_t>(upper.coefficient(image, 0));
}

} // namespace axesk::homology
