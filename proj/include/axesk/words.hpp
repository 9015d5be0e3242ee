#pragma once

// Words and cyclic words over the alphabet x_1, ..., x_d, and the counting
// functions for cyclic words without cyclic repetitions.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "axesk/common.hpp"

namespace axesk::words {

/// Default cap on d^s for the necklace enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

/// A nonempty word; letters are 1-based indices into an alphabet of size d.
class Word {
public:
    Word(int alphabet_size, std::vector<int> letters);

    int alphabet_size() const noexcept { return alphabet_size_; }
    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }

    auto operator<=>(const Word&) const = default;

private:
    int alphabet_size_;
    std::vector<int> letters_;
};

/// Parses "x1x2x3". When alphabet_size is 0 it is taken to be the largest letter.
Word parse_word(std::string_view text, int alphabet_size = 0);

/// "x1x2x3"
std::string to_string(const Word& word);

/// Left rotation by k: w_{k+1} ... w_m w_1 ... w_k.
Word rotate(const Word& word, std::size_t k);

bool has_no_cyclic_repetitions(const Word& word);

/// Rotation orbit, represented by its lexicographically least rotation.
struct CyclicWord {
    Word representative;
    std::size_t length = 0;
    std::size_t period = 0;

    int alphabet_size() const noexcept { return representative.alphabet_size(); }
    /// Number of blocks i = m / s.
    std::size_t blocks() const noexcept { return length / period; }

    auto operator<=>(const CyclicWord&) const = default;
};

CyclicWord canonicalize(const Word& word);

/// A_d(m) = (d-1)^m + (-1)^m (d-1): words of length m without cyclic repetitions.
BigInt a_count(std::int64_t d, std::int64_t m);

/// Brute-force list of cyclic words of length s, period exactly s, without
/// cyclic repetitions. Throws budget_exceeded when d^s > budget.
std::vector<CyclicWord> enumerate_aperiodic_necklaces(std::int64_t d, std::int64_t s,
                                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// cyc_d(s) via Möbius inversion of A_d.
BigInt cyc_count(std::int64_t d, std::int64_t s);

/// c_{d-1}(m): cyc_d(s) summed over divisors s of m with s ≡ m (mod 2).
BigInt grw_c(std::int64_t d, std::int64_t m);

/// Σ_{s | m} cyc_d(s): all cyclic words of length m without cyclic repetitions.
BigInt total_no_repetition_necklaces(std::int64_t d, std::int64_t m);

} // namespace axesk::words
