#pragma once

// Homology of the cyclic-bar summands B(m, s) attached to cyclic words
// without cyclic repetitions: the closed-form table, and an independent
// oracle that builds the cyclic subset of the cyclic bar construction of the
// pointed monoid {0, 1, x_i^n} (x_i x_j = 0 for i != j), takes its integral
// chain complex and reads off homology and Connes' operator.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "axesk/arith.hpp"
#include "axesk/words.hpp"

namespace axesk::homology {

inline constexpr std::size_t kDefaultMaxWordLength = 7;

/// Coefficient ring R: the integers, or a field of the given characteristic.
struct Coefficients {
    bool integers = true;
    std::int64_t characteristic = 0;

    static Coefficients integral() { return {true, 0}; }
    static Coefficients field(std::int64_t characteristic);

    bool operator==(const Coefficients&) const = default;
};

std::string to_string(const Coefficients& coefficients);

enum class ModuleKind {
    zero,
    free,       // R^rank
    two_torsion // Z/2, only over the integers
};

struct ModuleDescriptor {
    ModuleKind kind = ModuleKind::zero;
    std::size_t rank = 0;

    bool operator==(const ModuleDescriptor&) const = default;
};

std::string to_string(const ModuleDescriptor& module, const Coefficients& coefficients);

/// Equivariant homotopy type of B(ω̄), carried as a label only.
enum class HomotopyTag {
    suspension_sphere_smash_orbit, // s even: ΣB ≃ S^{λ_{m/2}} ∧ (T/C_i)_+
    sphere_smash_orbit,            // s, i odd: B ≃ S^{λ_{(m-1)/2}} ∧ (T/C_i)_+
    sphere_smash_rp2               // s odd, i even: B ≃ S^{λ_{(m-2)/2}} ∧ RP²(i)
};

std::string_view to_string(HomotopyTag tag);

struct SummandHomology {
    std::size_t length = 0;
    std::size_t period = 0;
    std::size_t blocks = 0;
    Coefficients coefficients;
    std::map<std::size_t, ModuleDescriptor> degree_table; // keys m-1 and m
    std::int64_t connes_multiplier = 0;
    HomotopyTag homotopy_tag = HomotopyTag::sphere_smash_orbit;
};

/// Reduced homology of B(m, s) with coefficients in R, and the Connes
/// multiplier d(y) = i·z (0 when s is odd and i even).
SummandHomology closed_form_homology(std::size_t m, std::size_t s, Coefficients coefficients);

/// Entry of B^cy(Π^d)[k]: x_letter^power, letter 0 standing for the unit 1.
struct MonoidElement {
    int letter = 0;
    std::uint32_t power = 0;

    bool is_unit() const noexcept { return letter == 0; }
    auto operator<=>(const MonoidElement&) const = default;
};

using Simplex = std::vector<MonoidElement>;

std::string to_string(const Simplex& simplex);

struct ComplexOptions {
    std::size_t max_length = kDefaultMaxWordLength;
    /// Strike degenerate simplices (any unit entry past position 0).
    bool normalized = true;
    /// Unnormalized only: highest degree built (the complex is infinite).
    std::size_t top_degree = 0;
};

/// Chain complex C_0 <- C_1 <- ... <- C_N of the non-basepoint simplices.
struct IntegerChainComplex {
    std::size_t top_degree = 0;
    /// basis[k] lists the k-simplices spanning C_k, sorted.
    std::vector<std::vector<Simplex>> basis;
    /// boundaries[k] is ∂_k : C_k -> C_{k-1} (dim C_{k-1} x dim C_k);
    /// boundaries[0] is the zero map C_0 -> 0.
    std::vector<arith::IntMatrix> boundaries;

    std::size_t dimension(std::size_t k) const { return k < basis.size() ? basis[k].size() : 0; }
    /// ∂_k, with the zero map beyond the top degree.
    arith::IntMatrix boundary(std::size_t k) const;
    /// Σ (-1)^k dim C_k
    std::int64_t euler_characteristic() const;
};

/// Cyclic subset B^cy(Π^d, ω̄)[-] for a word that may have cyclic repetitions.
IntegerChainComplex build_cyclic_bar_complex(const words::CyclicWord& word, const ComplexOptions& options = {});

/// As build_cyclic_bar_complex, rejecting words with cyclic repetitions.
IntegerChainComplex build_cyclic_subset_complex(const words::CyclicWord& word, const ComplexOptions& options = {});

/// Reduced integral homology, nonzero degrees only.
std::map<std::size_t, arith::HomologyGroup> complex_homology(const IntegerChainComplex& complex);

std::map<std::size_t, arith::HomologyGroup> oracle_homology(const words::CyclicWord& word,
                                                             std::size_t max_length = kDefaultMaxWordLength);

/// Connes' B = (1 - t) s N on normalized chains, as a matrix C_n -> C_{n+1}.
arith::IntMatrix connes_operator(const IntegerChainComplex& complex, std::size_t n);

/// Multiplier c with B(y) = c·z in H_m for generators y of H_{m-1} and z of
/// H_m (free parts); 0 when either free part vanishes. Defined up to sign.
std::int64_t oracle_connes(const words::CyclicWord& word, std::size_t max_length = kDefaultMaxWordLength);

} // namespace axesk::homology
