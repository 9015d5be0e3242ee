#include "axesk/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "axesk/charzero.hpp"
#include "axesk/homology.hpp"
#include "axesk/tc.hpp"
#include "axesk/witt.hpp"
#include "axesk/words.hpp"

namespace axesk::cli {

using nlohmann::json;

json to_json(const OutputDocument& document) {
    return json{{"schema_version", document.schema_version},
                {"command", document.command},
                {"query", document.query},
                {"result", document.result},
                {"text", document.text}};
}

OutputDocument document_from_json(const json& value) {
    if (!value.is_object()) fail(ErrorCategory::invalid_argument, "output document must be a JSON object");
    OutputDocument document;
    try {
        document.schema_version = value.at("schema_version").get<std::string>();
        document.command = value.at("command").get<std::string>();
        document.query = value.at("query");
        document.result = value.at("result");
        document.text = value.at("text").get<std::string>();
    } catch (const json::exception& e) {
        fail(ErrorCategory::invalid_argument, std::string("malformed output document: ") + e.what());
    }
    if (document.schema_version != kSchemaVersion) {
        fail(ErrorCategory::invalid_argument, "unsupported schema version " + document.schema_version);
    }
    return document;
}

std::string render_json(const OutputDocument& document) { return to_json(document).dump(2) + "\n"; }

json big_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(value));
    }
    return json(value.str());
}

std::uint64_t enumeration_budget() {
    const char* raw = std::getenv(kBudgetEnvVar);
    if (raw == nullptr || *raw == '\0') return words::kDefaultEnumerationBudget;
    const std::string text(raw);
    if (!std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
        fail(ErrorCategory::invalid_argument, std::string(kBudgetEnvVar) + " must be a nonnegative integer, got '" +
                                                  text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        fail(ErrorCategory::invalid_argument, std::string(kBudgetEnvVar) + " is out of range");
    }
}

namespace {

json terms_json(const witt::SymbolicGroupSum& sum) {
    json terms = json::array();
    for (const auto& term : sum.terms()) {
        terms.push_back(json{{"length", term.length}, {"multiplicity", big_to_json(term.multiplicity)}});
    }
    return terms;
}

json witt_sum_json(const witt::SymbolicGroupSum& sum) {
    json out{{"kind", "witt_sum"},
             {"field", witt::to_string(sum.field())},
             {"symbolic", witt::to_string(sum)},
             {"terms", terms_json(sum)},
             {"total_length", big_to_json(sum.total_length())}};
    if (sum.field().is_finite()) {
        const auto group = witt::concretize(sum);
        out["concrete"] = axesk::to_string(group);
        out["log_order"] = big_to_json(group.log_order(sum.field().characteristic()));
    }
    return out;
}

std::string witt_sum_text(const witt::SymbolicGroupSum& sum) {
    if (sum.is_zero()) return "0";
    std::string text = witt::to_string(sum);
    if (sum.field().is_finite()) text += " ≅ " + axesk::to_string(witt::concretize(sum));
    return text;
}

json graded_json(const charzero::GradedDimensionAnswer& answer) {
    json summands = json::array();
    for (const auto& term : answer.summands) {
        summands.push_back(json{{"form_degree", term.form_degree}, {"multiplicity", big_to_json(term.multiplicity)}});
    }
    json out{{"kind", "graded_dimension"},
             {"degree", answer.degree},
             {"summands", summands},
             {"rendering", charzero::to_string(answer)},
             {"whole_ring", answer.whole_ring}};
    out["dimension"] = answer.dimension ? big_to_json(*answer.dimension) : json(nullptr);
    if (answer.axis_part) {
        out["infinite_axis_part"] =
            json{{"form_degree", answer.axis_part->form_degree},
                 {"per_copy_multiplicity", answer.axis_part->per_copy_multiplicity}};
    } else {
        out["infinite_axis_part"] = nullptr;
    }
    return out;
}

charzero::HHProfile profile_from(const std::optional<int>& trdeg) {
    return trdeg ? charzero::HHProfile::field(*trdeg) : charzero::HHProfile::symbolic();
}

witt::FieldSpec positive_field(std::int64_t p, const std::optional<int>& n) {
    require(arith::is_prime(p), "p must be prime, got " + std::to_string(p));
    return n ? witt::FieldSpec::finite(p, *n) : witt::FieldSpec::perfect(p);
}

json field_query(const std::optional<int>& n) { return n ? json(*n) : json(nullptr); }

// ---- cyc ----------------------------------------------------------------

struct CycArgs {
    std::int64_t d = 0;
    std::optional<std::int64_t> s;
    std::optional<std::int64_t> table;
    bool verify = false;
};

BigInt verified_cyc(std::int64_t d, std::int64_t s, bool verify) {
    BigInt value = words::cyc_count(d, s);
    if (verify) {
        const auto necklaces = words::enumerate_aperiodic_necklaces(d, s, enumeration_budget());
        if (BigInt(necklaces.size()) != value) {
            fail(ErrorCategory::internal_error, "cyc_" + std::to_string(d) + "(" + std::to_string(s) + ") = " +
                                                    value.str() + " but enumeration found " +
                                                    std::to_string(necklaces.size()));
        }
    }
    return value;
}

OutputDocument cmd_cyc(const CycArgs& args) {
    require(args.d >= 1, "--d must be >= 1");
    OutputDocument doc;
    doc.command = "cyc";
    doc.query = json{{"d", args.d}, {"verify", args.verify}};
    if (args.table) {
        require(*args.table >= 1, "--table must be >= 1");
        doc.query["table"] = *args.table;
        json rows = json::array();
        std::ostringstream text;
        text << "s cyc_" << args.d << "(s)";
        for (std::int64_t s = 1; s <= *args.table; ++s) {
            const BigInt value = verified_cyc(args.d, s, args.verify);
            rows.push_back(json::array({s, big_to_json(value)}));
            text << "\n" << s << " " << value;
        }
        doc.result = json{{"kind", "integer_table"}, {"columns", json::array({"s", "cyc"})}, {"rows", rows}};
        doc.text = text.str();
    } else {
        require(args.s.has_value(), "cyc needs --s or --table");
        require(*args.s >= 1, "--s must be >= 1");
        doc.query["s"] = *args.s;
        const BigInt value = verified_cyc(args.d, *args.s, args.verify);
        doc.result = json{{"kind", "integer"}, {"value", big_to_json(value)}};
        doc.text = value.str();
    }
    if (args.verify) doc.result["verified"] = true;
    return doc;
}

// ---- k and tc -------------------------------------------------------------

struct GroupArgs {
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::int64_t q = 0;
    std::optional<int> n;
    std::optional<int> trdeg;
    bool verify = false;
};

void verify_assembly(const tc::GradedGroupAnswer& answer, std::int64_t d, std::int64_t q,
                     const witt::FieldSpec& field) {
    const auto from_indices = tc::k_groups_from_indices(d, q, field);
    if (!(from_indices == answer.symbolic)) {
        fail(ErrorCategory::internal_error, "k_groups " + witt::to_string(answer.symbolic) +
                                                " disagrees with the index assembly " + witt::to_string(from_indices));
    }
}

OutputDocument cmd_k(const GroupArgs& args) {
    OutputDocument doc;
    doc.command = "k";
    doc.query = json{{"p", args.p}, {"d", args.d}, {"q", args.q}, {"verify", args.verify}};
    if (args.p == 0) {
        require(args.trdeg.has_value(), "p = 0 needs --trdeg");
        require(!args.n.has_value(), "--n is only meaningful for p > 0");
        doc.query["trdeg"] = *args.trdeg;
        const auto profile = profile_from(args.trdeg);
        const auto answer = charzero::k_char_zero(args.q, args.d, profile);
        if (args.verify && args.q >= 1) {
            if (!(charzero::hc_birelative(args.q - 1, args.d, profile).summands == answer.summands)) {
                fail(ErrorCategory::internal_error, "K_q and HC_{q-1} bi-relative disagree");
            }
        }
        doc.result = graded_json(answer);
        doc.text = charzero::to_string(answer);
    } else {
        require(!args.trdeg.has_value(), "--trdeg is only meaningful for p = 0");
        const auto field = positive_field(args.p, args.n);
        doc.query["n"] = field_query(args.n);
        const auto answer = tc::k_groups(args.d, args.q, field);
        if (args.verify) verify_assembly(answer, args.d, args.q, field);
        doc.result = witt_sum_json(answer.symbolic);
        doc.text = witt_sum_text(answer.symbolic);
    }
    if (args.verify) doc.result["verified"] = true;
    return doc;
}

OutputDocument cmd_tc(const GroupArgs& args) {
    const auto field = positive_field(args.p, args.n);
    require(args.d >= 2, "--d must be >= 2");
    OutputDocument doc;
    doc.command = "tc";
    doc.query = json{{"p", args.p}, {"d", args.d}, {"q", args.q}, {"n", field_query(args.n)},
                     {"verify", args.verify}};
    const auto answer = tc::k_groups(args.d, args.q, field);
    if (args.verify) verify_assembly(answer, args.d, args.q, field);

    json contributions = json::array();
    std::ostringstream text;
    text << witt_sum_text(answer.symbolic);
    for (const auto& index : tc::decomposition_indices(args.p, args.d, args.q)) {
        contributions.push_back(json{{"m_prime", index.m_prime},
                                     {"s_prime", index.s_prime},
                                     {"v", index.v},
                                     {"u", index.u},
                                     {"parity_class", std::string(tc::to_string(index.parity_class))},
                                     {"witt_length", index.witt_length},
                                     {"multiplicity", big_to_json(index.multiplicity)}});
        text << "\n  m'=" << index.m_prime << " s'=" << index.s_prime << " v=" << index.v << " u=" << index.u
             << ": W_" << index.witt_length << "(k)^" << index.multiplicity;
    }
    doc.result = witt_sum_json(answer.symbolic);
    doc.result["contributions"] = contributions;
    if (args.verify) doc.result["verified"] = true;
    doc.text = text.str();
    return doc;
}

// ---- summand ------------------------------------------------------------------

struct SummandArgs {
    std::int64_t m = 0;
    std::int64_t s = 0;
    std::int64_t p = 0;
    std::optional<int> n;
    bool tp = false;
    bool tcminus = false;
    std::int64_t degree = 0;
};

OutputDocument cmd_summand(const SummandArgs& args) {
    require(args.tp != args.tcminus, "summand needs exactly one of --tp and --tcminus");
    const auto field = positive_field(args.p, args.n);
    const auto parity = tc::parity_class_of(args.p, args.m, args.s);
    const auto groups = args.tp ? tc::tp_groups(args.m, args.s, field, parity, args.degree)
                                : tc::tcminus_groups(args.m, args.s, field, parity, args.degree);
    OutputDocument doc;
    doc.command = "summand";
    doc.query = json{{"m", args.m},         {"s", args.s},
                     {"p", args.p},         {"n", field_query(args.n)},
                     {"degree", args.degree}, {"theory", args.tp ? "TP" : "TC-"}};
    doc.result = witt_sum_json(groups);
    doc.result["parity_class"] = std::string(tc::to_string(parity));
    doc.text = witt_sum_text(groups);
    return doc;
}

// ---- homology -------------------------------------------------------------------

struct HomologyArgs {
    std::optional<std::string> word;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> s;
    std::string coeff = "Z";
    std::size_t max_length = homology::kDefaultMaxWordLength;
};

homology::Coefficients parse_coefficients(const std::string& text) {
    if (text == "Z") return homology::Coefficients::integral();
    std::int64_t characteristic = -1;
    try {
        std::size_t used = 0;
        characteristic = std::stoll(text, &used);
        if (used != text.size()) characteristic = -1;
    } catch (const std::exception&) {
        characteristic = -1;
    }
    require(characteristic >= 0, "--coeff must be Z or a field characteristic (0 or a prime), got '" + text + "'");
    return homology::Coefficients::field(characteristic);
}

// Universal coefficients: H_n(C; k) from the integral homology.
std::string field_rendering(const std::map<std::size_t, arith::HomologyGroup>& integral, std::size_t degree,
                            const homology::Coefficients& coefficients) {
    auto torsion_count = [&](std::size_t n) -> std::size_t {
        const auto it = integral.find(n);
        if (it == integral.end() || coefficients.characteristic == 0) return 0;
        const auto& parts = it->second.torsion.primary_parts();
        const auto p_part = parts.find(coefficients.characteristic);
        if (p_part == parts.end()) return 0;
        BigInt count = 0;
        for (const auto& [exponent, c] : p_part->second) count += c;
        return static_cast<std::size_t>(count);
    };
    std::size_t dim = torsion_count(degree);
    if (degree > 0) dim += torsion_count(degree - 1);
    if (const auto it = integral.find(degree); it != integral.end()) dim += it->second.free_rank;
    const homology::ModuleDescriptor module{dim == 0 ? homology::ModuleKind::zero : homology::ModuleKind::free, dim};
    return homology::to_string(module, coefficients);
}

OutputDocument cmd_homology(const HomologyArgs& args) {
    const auto coefficients = parse_coefficients(args.coeff);
    OutputDocument doc;
    doc.command = "homology";
    doc.query = json{{"coeff", args.coeff}};

    std::size_t m = 0;
    std::size_t s = 0;
    std::optional<words::CyclicWord> cyclic;
    if (args.word) {
        require(!args.m && !args.s, "give either --word or --m/--s");
        const auto word = words::parse_word(*args.word);
        require(words::has_no_cyclic_repetitions(word), "word " + *args.word + " has cyclic repetitions");
        cyclic = words::canonicalize(word);
        m = cyclic->length;
        s = cyclic->period;
        doc.query["word"] = *args.word;
    } else {
        require(args.m && args.s, "homology needs --word or both --m and --s");
        require(*args.m >= 1 && *args.s >= 1, "--m and --s must be positive");
        m = static_cast<std::size_t>(*args.m);
        s = static_cast<std::size_t>(*args.s);
        doc.query["m"] = *args.m;
        doc.query["s"] = *args.s;
    }

    const auto closed = homology::closed_form_homology(m, s, coefficients);
    std::map<std::size_t, std::string> closed_text;
    for (const auto& [degree, module] : closed.degree_table) {
        closed_text[degree] = homology::to_string(module, coefficients);
    }

    std::map<std::size_t, std::string> oracle_text;
    std::optional<std::int64_t> oracle_connes;
    if (cyclic) {
        const auto integral = homology::oracle_homology(*cyclic, args.max_length);
        std::set<std::size_t> degrees;
        for (const auto& [degree, group] : integral) degrees.insert(degree), degrees.insert(degree + 1);
        for (const auto& [degree, text] : closed_text) degrees.insert(degree);
        for (std::size_t degree : degrees) {
            std::string rendered;
            if (coefficients.integers) {
                const auto it = integral.find(degree);
                rendered = it == integral.end() ? "0" : arith::to_string(it->second);
            } else {
                rendered = field_rendering(integral, degree, coefficients);
            }
            if (rendered != "0" || closed_text.count(degree)) oracle_text[degree] = rendered;
        }
        if (coefficients.integers) oracle_connes = homology::oracle_connes(*cyclic, args.max_length);
    }

    json degrees = json::array();
    std::ostringstream text;
    bool agree = true;
    std::set<std::size_t> all_degrees;
    for (const auto& [degree, t] : closed_text) all_degrees.insert(degree);
    for (const auto& [degree, t] : oracle_text) all_degrees.insert(degree);
    bool first = true;
    for (std::size_t degree : all_degrees) {
        const std::string closed_value = closed_text.count(degree) ? closed_text[degree] : "0";
        json row{{"degree", degree}, {"closed_form", closed_value}};
        if (cyclic) {
            const std::string oracle_value = oracle_text.count(degree) ? oracle_text[degree] : "0";
            row["oracle"] = oracle_value;
            agree = agree && oracle_value == closed_value;
        }
        degrees.push_back(row);
        if (!first) text << "\n";
        first = false;
        text << "degree " << degree << ": " << closed_value;
    }

    doc.result = json{{"kind", "homology"},
                      {"m", m},
                      {"s", s},
                      {"blocks", closed.blocks},
                      {"coefficients", homology::to_string(coefficients)},
                      {"degrees", degrees},
                      {"homotopy_type", std::string(homology::to_string(closed.homotopy_tag))},
                      {"connes_closed_form", closed.connes_multiplier}};
    text << "\nconnes: " << closed.connes_multiplier;
    if (cyclic) {
        doc.result["representative"] = words::to_string(cyclic->representative);
        if (oracle_connes) {
            doc.result["connes_oracle_abs"] = std::abs(*oracle_connes);
            agree = agree && std::abs(*oracle_connes) == std::abs(closed.connes_multiplier);
        }
        doc.result["agree"] = agree;
        text << "\n" << (agree ? "oracle=closed-form" : "oracle!=closed-form");
        if (!agree) {
            fail(ErrorCategory::internal_error, "oracle and closed form disagree for " + *args.word);
        }
    }
    doc.text = text.str();
    return doc;
}

// ---- hc -------------------------------------------------------------------------

struct HcArgs {
    std::int64_t q = 0;
    std::int64_t d = 0;
    std::optional<int> trdeg;
    bool birelative = false;
};

OutputDocument cmd_hc(const HcArgs& args) {
    const auto profile = profile_from(args.trdeg);
    const auto answer = args.birelative ? charzero::hc_birelative(args.q, args.d, profile)
                                        : charzero::hc_relative(args.q, args.d, profile);
    OutputDocument doc;
    doc.command = "hc";
    doc.query = json{{"q", args.q}, {"d", args.d}, {"birelative", args.birelative}};
    doc.query["trdeg"] = args.trdeg ? json(*args.trdeg) : json(nullptr);
    doc.result = graded_json(answer);
    doc.text = charzero::to_string(answer);
    return doc;
}

void emit_error(std::ostream& out, std::ostream& err, bool as_json, ErrorCategory category,
                const std::string& message) {
    err << "error [" << category_name(category) << "]: " << message << "\n";
    if (as_json) {
        json doc{{"schema_version", kSchemaVersion},
                 {"error", json{{"category", std::string(category_name(category))}, {"message", message}}}};
        out << doc.dump(2) << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact K-theory of coordinate axes: counts, Witt groups, homology"};
    app.name("axesk");
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print canonical JSON instead of text");

    std::function<OutputDocument()> action;

    CycArgs cyc;
    auto* cyc_cmd = app.add_subcommand("cyc", "Cyclic words without cyclic repetitions, cyc_d(s)");
    cyc_cmd->add_option("--d", cyc.d, "Alphabet size")->required();
    auto* cyc_s = cyc_cmd->add_option("--s", cyc.s, "Word length");
    auto* cyc_table = cyc_cmd->add_option("--table", cyc.table, "Tabulate s = 1..N");
    cyc_s->excludes(cyc_table);
    cyc_cmd->add_flag("--verify", cyc.verify, "Check against brute-force enumeration");
    cyc_cmd->callback([&] { action = [&] { return cmd_cyc(cyc); }; });

    GroupArgs k_args;
    auto* k_cmd = app.add_subcommand("k", "Relative K-theory K_q(A_d, I_d)");
    k_cmd->add_option("--p", k_args.p, "Characteristic (0 or prime)")->required();
    k_cmd->add_option("--d", k_args.d, "Number of axes")->required();
    k_cmd->add_option("--q", k_args.q, "Degree")->required();
    k_cmd->add_option("--n", k_args.n, "k = F_{p^n}");
    k_cmd->add_option("--trdeg", k_args.trdeg, "Transcendence degree (p = 0)");
    k_cmd->add_flag("--verify", k_args.verify, "Cross-check two assembly paths");
    k_cmd->callback([&] { action = [&] { return cmd_k(k_args); }; });

    GroupArgs tc_args;
    auto* tc_cmd = app.add_subcommand("tc", "Bi-relative TC_q(A_d, B_d, I_d) with its contributions");
    tc_cmd->add_option("--p", tc_args.p, "Characteristic (prime)")->required();
    tc_cmd->add_option("--d", tc_args.d, "Number of axes")->required();
    tc_cmd->add_option("--q", tc_args.q, "Degree")->required();
    tc_cmd->add_option("--n", tc_args.n, "k = F_{p^n}");
    tc_cmd->add_flag("--verify", tc_args.verify, "Cross-check two assembly paths");
    tc_cmd->callback([&] { action = [&] { return cmd_tc(tc_args); }; });

    SummandArgs summand;
    auto* summand_cmd = app.add_subcommand("summand", "TP or TC^- of a single summand B(m, s)");
    summand_cmd->add_option("--m", summand.m, "Word length")->required();
    summand_cmd->add_option("--s", summand.s, "Period")->required();
    summand_cmd->add_option("--p", summand.p, "Characteristic (prime)")->required();
    summand_cmd->add_option("--n", summand.n, "k = F_{p^n}");
    auto* tp_flag = summand_cmd->add_flag("--tp", summand.tp, "Periodic topological cyclic homology");
    auto* tcm_flag = summand_cmd->add_flag("--tcminus", summand.tcminus, "Negative topological cyclic homology");
    tp_flag->excludes(tcm_flag);
    summand_cmd->add_option("--degree", summand.degree, "Homotopy degree")->required();
    summand_cmd->callback([&] { action = [&] { return cmd_summand(summand); }; });

    HomologyArgs hom;
    auto* hom_cmd = app.add_subcommand("homology", "Homology of B(m, s), closed form and oracle");
    auto* hom_word = hom_cmd->add_option("--word", hom.word, "Cyclic word, e.g. x1x2x3");
    auto* hom_m = hom_cmd->add_option("--m", hom.m, "Word length");
    auto* hom_s = hom_cmd->add_option("--s", hom.s, "Period");
    hom_word->excludes(hom_m)->excludes(hom_s);
    hom_cmd->add_option("--coeff", hom.coeff, "Z, or a field characteristic");
    hom_cmd->add_option("--max-length", hom.max_length, "Largest word length the oracle accepts");
    hom_cmd->callback([&] { action = [&] { return cmd_homology(hom); }; });

    HcArgs hc;
    auto* hc_cmd = app.add_subcommand("hc", "Relative cyclic homology over Q");
    hc_cmd->add_option("--q", hc.q, "Degree")->required();
    hc_cmd->add_option("--d", hc.d, "Number of axes")->required();
    hc_cmd->add_option("--trdeg", hc.trdeg, "Transcendence degree of k (omit for symbolic)");
    hc_cmd->add_flag("--birelative", hc.birelative, "Bi-relative variant");
    hc_cmd->callback([&] { action = [&] { return cmd_hc(hc); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        // --json may not have been parsed yet.
        const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
        emit_error(out, err, wants_json, ErrorCategory::invalid_argument, e.what());
        return exit_code(ErrorCategory::invalid_argument);
    }

    try {
        const OutputDocument doc = action();
        if (as_json) {
            out << render_json(doc);
        } else {
            out << doc.text << "\n";
        }
        return 0;
    } catch (const Error& e) {
        emit_error(out, err, as_json, e.category(), e.what());
        return exit_code(e.category());
    } catch (const std::exception& e) {
        emit_error(out, err, as_json, ErrorCategory::internal_error, e.what());
        return exit_code(ErrorCategory::internal_error);
    }
}

} // namespace axesk::cli
