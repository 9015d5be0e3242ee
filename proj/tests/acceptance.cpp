// One line per acceptance criterion; exit status is nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "axesk/charzero.hpp"
#include "axesk/homology.hpp"
#include "axesk/tc.hpp"
#include "axesk/witt.hpp"
#include "axesk/words.hpp"
#include "oracles.hpp"

using namespace axesk;
namespace fs = std::filesystem;

namespace {

// Runtime limits, seconds.
constexpr double kTableLimit = 1.0;
constexpr double kCountingLimit = 30.0;
constexpr double kHomologyLimit = 60.0;
constexpr int kGhostLifts = 1000;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(3);
    out << s << " s";
    return out.str();
}

Check tabulated_counts() {
    Check c;
    const std::array<long long, 12> d3{0, 3, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
    const std::array<long long, 12> d4{0, 6, 8, 18, 48, 116, 312, 810, 2184, 5880, 16104, 44220};
    const auto start = std::chrono::steady_clock::now();
    int matched = 0;
    for (int s = 1; s <= 12; ++s) {
        c.expect(words::cyc_count(3, s) == d3[static_cast<std::size_t>(s - 1)], "cyc_3(" + std::to_string(s) + ")");
        c.expect(words::cyc_count(4, s) == d4[static_cast<std::size_t>(s - 1)], "cyc_4(" + std::to_string(s) + ")");
        matched += 2;
    }
    const double t = seconds_since(start);
    c.expect(t < kTableLimit, "runtime " + fmt_seconds(t));
    if (c.ok) c.detail = std::to_string(matched) + " values, " + fmt_seconds(t);
    return c;
}

Check counting_oracles() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    for (int d = 2; d <= 4; ++d) {
        for (int s = 1; s <= 10; ++s) {
            const auto enumerated = words::enumerate_aperiodic_necklaces(d, s);
            c.expect(words::cyc_count(d, s) == enumerated.size(),
                     "cyc_" + std::to_string(d) + "(" + std::to_string(s) + ") vs enumeration");
            c.expect(words::a_count(d, s) == oracle::brute_word_count(d, s),
                     "A_" + std::to_string(d) + "(" + std::to_string(s) + ") vs brute force");
        }
    }
    const double t = seconds_since(start);
    c.expect(t < kCountingLimit, "runtime " + fmt_seconds(t));
    if (c.ok) c.detail = "d in [2,4], lengths 1..10, " + fmt_seconds(t);
    return c;
}

Check partition_identity() {
    Check c;
    for (int d = 1; d <= 6; ++d)
        for (int m = 1; m <= 20; ++m) {
            BigInt sum = 0;
            for (auto s : arith::divisors(m)) sum += s * words::cyc_count(d, s);
            c.expect(sum == words::a_count(d, m), "d=" + std::to_string(d) + " m=" + std::to_string(m));
        }
    if (c.ok) c.detail = "d <= 6, m <= 20";
    return c;
}

// Every cyclic word without cyclic repetitions, length 2..6, over <= 3 letters.
std::vector<words::CyclicWord> small_cyclic_words() {
    std::set<words::CyclicWord> out;
    for (int m = 2; m <= 6; ++m) {
        for (std::uint64_t code = 0; code < oracle::ipow(3, m); ++code) {
            auto letters = oracle::digits(code, 3, m);
            if (!oracle::cyclically_reduced(letters)) continue;
            for (auto& l : letters) ++l;
            out.insert(words::canonicalize(words::Word(3, letters)));
        }
    }
    return {out.begin(), out.end()};
}

std::string render(const std::map<std::size_t, arith::HomologyGroup>& h, std::size_t degree) {
    const auto it = h.find(degree);
    return it == h.end() ? "0" : arith::to_string(it->second);
}

Check homology_oracle(const std::vector<words::CyclicWord>& all) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    bool witness = false;
    for (const auto& w : all) {
        const auto h = homology::oracle_homology(w);
        const auto closed = homology::closed_form_homology(w.length, w.period, homology::Coefficients::integral());
        const std::string name = words::to_string(w.representative);
        for (const auto& [degree, module] : closed.degree_table) {
            c.expect(render(h, degree) == homology::to_string(module, closed.coefficients),
                     name + " degree " + std::to_string(degree));
        }
        for (const auto& [degree, group] : h) {
            c.expect(closed.degree_table.count(degree) > 0, name + " stray degree " + std::to_string(degree));
        }
        if (name == "x1x2x3x1x2x3") witness = render(h, 5) == "Z/2" && render(h, 6) == "0";
    }
    c.expect(witness, "witness (x1x2x3)^2");
    const double t = seconds_since(start);
    c.expect(t < kHomologyLimit, "runtime " + fmt_seconds(t));
    if (c.ok) c.detail = std::to_string(all.size()) + " words, witness H_5 = Z/2, " + fmt_seconds(t);
    return c;
}

Check connes_oracle(const std::vector<words::CyclicWord>& all) {
    Check c;
    for (const auto& w : all) {
        const std::int64_t expected =
            (w.period % 2 == 1 && w.blocks() % 2 == 0) ? 0 : static_cast<std::int64_t>(w.blocks());
        c.expect(std::abs(homology::oracle_connes(w)) == expected, words::to_string(w.representative));
    }
    if (c.ok) c.detail = std::to_string(all.size()) + " words";
    return c;
}

Check witt_suite() {
    Check c;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> coord(-25, 25);
    int lifts = 0;
    for (std::int64_t p : {2, 3, 5}) {
        for (int t = 1; t <= 4; ++t) {
            const auto& polys = witt::witt_sum_polynomials(p, t);
            const int samples = (p == 5 && t == 4) ? kGhostLifts / 10 : kGhostLifts / 4;
            for (int i = 0; i < samples; ++i, ++lifts) {
                std::vector<BigInt> v(2 * static_cast<std::size_t>(t));
                for (auto& x : v) x = coord(rng);
                std::vector<oracle::Int> a(v.begin(), v.begin() + t), b(v.begin() + t, v.end()), s;
                for (const auto& poly : polys) s.push_back(poly.evaluate(v));
                const auto ga = oracle::ghost(p, a), gb = oracle::ghost(p, b), gs = oracle::ghost(p, s);
                for (int k = 0; k < t; ++k) c.expect(gs[k] == ga[k] + gb[k], "ghost additivity p=" + std::to_string(p));
            }
        }
    }
    c.expect(lifts >= kGhostLifts, "too few lifts");

    for (std::int64_t p : {2, 3, 5}) {
        for (std::size_t t = 1; t <= 3; ++t) {
            std::int64_t modulus = 1;
            for (std::size_t i = 0; i < t; ++i) modulus *= p;
            std::vector<witt::WittVector> elems;
            for (std::int64_t code = 0; code < modulus; ++code) {
                std::vector<std::int64_t> coords(t);
                std::int64_t x = code;
                for (auto& y : coords) y = x % p, x /= p;
                elems.emplace_back(p, coords);
            }
            std::set<std::int64_t> image;
            for (const auto& x : elems) image.insert(witt::witt_to_residue(x));
            c.expect(static_cast<std::int64_t>(image.size()) == modulus, "residue map not injective");
            for (const auto& x : elems)
                for (const auto& y : elems) {
                    const auto lhs = witt::witt_to_residue(witt::witt_add(x, y));
                    const auto rhs = (witt::witt_to_residue(x) + witt::witt_to_residue(y)) % modulus;
                    c.expect(lhs == rhs, "residue map not additive");
                }
        }
        for (int n = 1; n <= 3; ++n)
            for (int t = 0; t <= 4; ++t) {
                const auto order = witt::witt_group(witt::FieldSpec::finite(p, n), t).order();
                c.expect(order == boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(t * n)), "group order");
            }
    }
    if (c.ok) c.detail = std::to_string(lifts) + " lifts, residue maps exhaustive for t <= 3";
    return c;
}

Check k_theory_fixtures() {
    Check c;
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t d : {2, 3, 4}) {
            const auto field = witt::FieldSpec::finite(p, 1);
            for (std::int64_t q : {0, 1}) {
                const auto a = tc::k_groups(d, q, field);
                c.expect(a.symbolic.is_zero() && a.concrete && a.concrete->is_trivial(),
                         "K_" + std::to_string(q) + " p=" + std::to_string(p) + " d=" + std::to_string(d));
            }
            if (p == 2) continue;
            const auto k2 = tc::k_groups(d, 2, field);
            const auto pairs = d * (d - 1) / 2;
            c.expect(witt::to_string(k2.symbolic) == "W_1(k)^" + std::to_string(pairs) ||
                         (pairs == 1 && witt::to_string(k2.symbolic) == "W_1(k)"),
                     "K_2 symbolic p=" + std::to_string(p) + " d=" + std::to_string(d));
            const std::string zp = "Z/" + std::to_string(p);
            c.expect(to_string(*k2.concrete) == (pairs == 1 ? zp : "(" + zp + ")^" + std::to_string(pairs)),
                     "K_2 concrete p=" + std::to_string(p) + " d=" + std::to_string(d));
        }
    const auto k3 = tc::k_groups(3, 3, witt::FieldSpec::finite(3, 1));
    c.expect(witt::to_string(k3.symbolic) == "W_1(k)^2", "K_3 symbolic");
    c.expect(to_string(*k3.concrete) == "(Z/3)^2", "K_3 concrete");
    const auto local = tc::tc_local(1, 1, 3, witt::FieldSpec::finite(3, 1), 3);
    c.expect(local == k3.symbolic, "K_3 from (m'=1, s'=1)");
    c.expect(arith::t_odd(3, 1, 1) == 2, "t_od = 2");
    if (c.ok) c.detail = "K_0, K_1, K_2, K_3 fixtures";
    return c;
}

Check assembly_consistency() {
    Check c;
    int cases = 0;
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t d : {2, 3, 4})
            for (std::int64_t q = 0; q <= 12; ++q, ++cases) {
                const auto field = witt::FieldSpec::perfect(p);
                c.expect(tc::k_groups(d, q, field).symbolic == tc::k_groups_from_indices(d, q, field),
                         "p=" + std::to_string(p) + " d=" + std::to_string(d) + " q=" + std::to_string(q));
            }
    if (c.ok) c.detail = std::to_string(cases) + " (p, d, q) cases";
    return c;
}

Check char_zero_suite() {
    Check c;
    const auto tau0 = charzero::HHProfile::field(0);
    for (std::int64_t d = 2; d <= 5; ++d)
        for (std::int64_t q = 0; q <= 12; ++q) {
            const auto k = charzero::k_char_zero(q, d, tau0);
            const BigInt expected = q >= 2 ? BigInt(oracle::parity_divisor_sum(static_cast<int>(d), static_cast<int>(q)))
                                           : BigInt(0);
            const bool collapse = expected == 0 ? k.summands.empty()
                                                : (k.summands.size() == 1 && k.summands[0].form_degree == 0 &&
                                                   k.summands[0].multiplicity == expected);
            c.expect(collapse, "collapse d=" + std::to_string(d) + " q=" + std::to_string(q));
            if (q >= 1) {
                for (const auto& profile : {tau0, charzero::HHProfile::field(2), charzero::HHProfile::symbolic()}) {
                    c.expect(charzero::k_char_zero(q, d, profile).summands ==
                                 charzero::hc_birelative(q - 1, d, profile).summands,
                             "shift d=" + std::to_string(d) + " q=" + std::to_string(q));
                }
            }
        }
    // grw_c against parity-filtered sums of enumerated necklace counts
    for (int d = 2; d <= 4; ++d)
        for (int m = 1; m <= 10; ++m) {
            BigInt sum = 0;
            for (auto s : arith::divisors(m))
                if ((m - s) % 2 == 0) sum += words::enumerate_aperiodic_necklaces(d, s).size();
            c.expect(words::grw_c(d, m) == sum, "grw_c(" + std::to_string(d) + "," + std::to_string(m) + ")");
        }
    if (c.ok) c.detail = "q <= 12, d <= 5";
    return c;
}

std::string run_cli(const std::string& args, int& status) {
    const std::string command = std::string(AXESK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    status = ::pclose(pipe);
    return out;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Check golden_files() {
    Check c;
    std::vector<fs::path> cases;
    for (const auto& entry : fs::directory_iterator(AXESK_GOLDEN_DIR)) {
        if (entry.path().extension() == ".args") cases.push_back(entry.path());
    }
    std::sort(cases.begin(), cases.end());
    std::set<std::string> subcommands;
    bool p2 = false, p_odd = false, verify = false;
    for (const auto& path : cases) {
        std::string args = slurp(path);
        while (!args.empty() && (args.back() == '\n' || args.back() == '\r')) args.pop_back();
        fs::path expected_path = path;
        expected_path.replace_extension(".json");
        int status = 0;
        const std::string actual = run_cli(args, status);
        c.expect(status == 0, path.filename().string() + " exited with " + std::to_string(status));
        c.expect(fs::exists(expected_path) && actual == slurp(expected_path), path.filename().string() + " differs");
        std::istringstream tokens(args);
        std::string first, tok, prev;
        tokens >> first;
        subcommands.insert(first);
        while (tokens >> tok) {
            if (prev == "--p" && tok == "2") p2 = true;
            if (prev == "--p" && tok != "2" && tok != "0") p_odd = true;
            if (tok == "--verify") verify = true;
            prev = tok;
        }
    }
    c.expect(cases.size() >= 12, "only " + std::to_string(cases.size()) + " golden cases");
    for (const char* sub : {"cyc", "k", "tc", "summand", "homology", "hc"}) {
        c.expect(subcommands.count(sub) > 0, std::string("no golden case for ") + sub);
    }
    c.expect(p2 && p_odd, "golden cases must cover p = 2 and p > 2");
    c.expect(verify, "no --verify golden case");
    if (c.ok) c.detail = std::to_string(cases.size()) + " byte-exact cases";
    return c;
}

} // namespace

int main() {
    const auto words_small = small_cyclic_words();
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"tabulated cyclic word counts", tabulated_counts},
        {"counting oracles", counting_oracles},
        {"partition identity", partition_identity},
        {"homology oracle", [&] { return homology_oracle(words_small); }},
        {"Connes operator oracle", [&] { return connes_oracle(words_small); }},
        {"Witt vector suite", witt_suite},
        {"K-theory fixtures", k_theory_fixtures},
        {"assembly consistency", assembly_consistency},
        {"characteristic zero suite", char_zero_suite},
        {"CLI golden files", golden_files},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << (i + 1) << ": " << (result.ok ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << " (" << result.detail << ")\n";
        if (!result.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
