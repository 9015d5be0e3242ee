#include "axesk/words.hpp"

#include <algorithm>
#include <cctype>

#include "axesk/arith.hpp"

namespace axesk::words {

Word::Word(int alphabet_size, std::vector<int> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
    require(alphabet_size_ >= 1, "alphabet size must be at least 1");
    require(!letters_.empty(), "words must be nonempty");
    for (int letter : letters_) {
        require(letter >= 1 && letter <= alphabet_size_,
                "letter x" + std::to_string(letter) + " outside alphabet of size " + std::to_string(alphabet_size_));
    }
}

Word parse_word(std::string_view text, int alphabet_size) {
    std::vector<int> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        require(text[pos] == 'x', "malformed word '" + std::string(text) + "': expected 'x' at position " +
                                      std::to_string(pos));
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        require(pos > start && pos - start <= 6, "malformed word '" + std::string(text) + "': bad letter index");
        letters.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    }
    require(!letters.empty(), "empty word");
    if (alphabet_size == 0) alphabet_size = *std::max_element(letters.begin(), letters.end());
    return Word(alphabet_size, std::move(letters));
}

std::string to_string(const Word& word) {
    std::string out;
    for (int letter : word.letters()) out += "x" + std::to_string(letter);
    return out;
}

Word rotate(const Word& word, std::size_t k) {
    std::vector<int> letters = word.letters();
    std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k % letters.size()), letters.end());
    return Word(word.alphabet_size(), std::move(letters));
}

bool has_no_cyclic_repetitions(const Word& word) {
    const auto& w = word.letters();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == w[(i + 1) % w.size()]) return false;
    }
    return true;
}

namespace {

// Least j >= 1 with rotation by j fixing the word.
std::size_t period_of(const std::vector<int>& w) {
    const std::size_t m = w.size();
    for (std::size_t j = 1; j < m; ++j) {
        if (m % j != 0) continue;
        bool fixed = true;
        for (std::size_t i = 0; i < m && fixed; ++i) fixed = w[i] == w[(i + j) % m];
        if (fixed) return j;
    }
    return m;
}

bool is_least_rotation(const std::vector<int>& w) {
    const std::size_t m = w.size();
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            int a = w[(i + k) % m];
            if (a != w[i]) {
                if (a < w[i]) return false;
                break;
            }
        }
    }
    return true;
}

} // namespace

CyclicWord canonicalize(const Word& word) {
    Word best = word;
    for (std::size_t k = 1; k < word.length(); ++k) {
        Word candidate = rotate(word, k);
        if (candidate.letters() < best.letters()) best = std::move(candidate);
    }
    const std::size_t period = period_of(best.letters());
    return CyclicWord{best, word.length(), period};
}

BigInt a_count(std::int64_t d, std::int64_t m) {
    require(d >= 1 && m >= 1, "a_count requires d >= 1 and m >= 1");
    BigInt base = d - 1;
    BigInt value = boost::multiprecision::pow(base, static_cast<unsigned>(m));
    if (m % 2 == 0) {
        value += base;
    } else {
        value -= base;
    }
    return value;
}

std::vector<CyclicWord> enumerate_aperiodic_necklaces(std::int64_t d, std::int64_t s, std::uint64_t budget) {
    require(d >= 1 && s >= 1, "enumerate_aperiodic_necklaces requires d >= 1 and s >= 1");
    require(s <= 64, "enumerate_aperiodic_necklaces: length too large");
    if (boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(s)) > budget) {
        fail(ErrorCategory::budget_exceeded, "enumeration of " + std::to_string(d) + "^" + std::to_string(s) +
                                                 " words exceeds budget " + std::to_string(budget));
    }

    std::vector<CyclicWord> out;
    std::vector<int> w(static_cast<std::size_t>(s));
    const std::size_t len = w.size();

    // Backtracking over proper colorings of the cycle graph C_s. The least
    // rotation starts with the smallest letter used, so fixing w[0] = a and
    // requiring every later letter to be >= a loses nothing.
    auto extend = [&](auto&& self, std::size_t pos) -> void {
        if (pos == len) {
            if (len > 1 && w[len - 1] == w[0]) return;
            if (len == 1) return; // w_1 = w_m
            if (!is_least_rotation(w) || period_of(w) != len) return;
            out.push_back(CyclicWord{Word(static_cast<int>(d), w), len, len});
            return;
        }
        for (int letter = w[0]; letter <= d; ++letter) {
            if (letter == w[pos - 1]) continue;
            w[pos] = letter;
            self(self, pos + 1);
        }
    };
    for (int first = 1; first <= d; ++first) {
        w[0] = first;
        extend(extend, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt cyc_count(std::int64_t d, std::int64_t s) {
    require(d >= 1 && s >= 1, "cyc_count requires d >= 1 and s >= 1");
    BigInt total = 0;
    for (std::int64_t j : arith::divisors(s)) {
        int mu = arith::mobius(s / j);
        if (mu != 0) total += mu * a_count(d, j);
    }
    if (total % s != 0) {
        fail(ErrorCategory::internal_error,
             "cyc_count: Möbius sum " + total.str() + " not divisible by s = " + std::to_string(s));
    }
    return total / s;
}

BigInt grw_c(std::int64_t d, std::int64_t m) {
    require(d >= 1 && m >= 1, "grw_c requires d >= 1 and m >= 1");
    BigInt total = 0;
    for (std::int64_t s : arith::divisors(m)) {
        if (s % 2 == m % 2) total += cyc_count(d, s);
    }
    return total;
}

BigInt total_no_repetition_necklaces(std::int64_t d, std::int64_t m) {
    require(d >= 1 && m >= 1, "total_no_repetition_necklaces requires d >= 1 and m >= 1");
    BigInt total = 0;
    for (std::int64_t s : arith::divisors(m)) total += cyc_count(d, s);
    return total;
}

} // namespace axesk::words
