#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "axesk/charzero.hpp"
#include "axesk/cli.hpp"
#include "axesk/homology.hpp"
#include "axesk/tc.hpp"
#include "axesk/witt.hpp"
#include "axesk/words.hpp"

namespace py = pybind11;
using namespace axesk;

namespace {

py::int_ to_py(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

witt::FieldSpec field_of(std::int64_t p, std::optional<int> n) {
    return n ? witt::FieldSpec::finite(p, *n) : witt::FieldSpec::perfect(p);
}

py::dict witt_sum_dict(const witt::SymbolicGroupSum& sum) {
    py::dict out;
    py::list terms;
    for (const auto& term : sum.terms()) terms.append(py::make_tuple(term.length, to_py(term.multiplicity)));
    out["symbolic"] = witt::to_string(sum);
    out["terms"] = terms;
    if (sum.field().is_finite()) out["concrete"] = axesk::to_string(witt::concretize(sum));
    return out;
}

charzero::HHProfile profile_of(std::optional<int> trdeg) {
    return trdeg ? charzero::HHProfile::field(*trdeg) : charzero::HHProfile::symbolic();
}

py::dict graded_dict(const charzero::GradedDimensionAnswer& answer) {
    py::dict out;
    py::list summands;
    for (const auto& t : answer.summands) summands.append(py::make_tuple(t.form_degree, to_py(t.multiplicity)));
    out["summands"] = summands;
    out["rendering"] = charzero::to_string(answer);
    out["dimension"] = answer.dimension ? py::object(to_py(*answer.dimension)) : py::object(py::none());
    out["infinite_axis_part"] =
        answer.axis_part ? py::object(py::make_tuple(answer.axis_part->form_degree, answer.axis_part->per_copy_multiplicity))
                         : py::object(py::none());
    return out;
}

} // namespace

PYBIND11_MODULE(_axesk, m) {
    m.doc() = "Exact K-theory of coordinate axes";

    py::register_exception<Error>(m, "AxeskError", PyExc_ValueError);

    m.def("a_count", [](std::int64_t d, std::int64_t n) { return to_py(words::a_count(d, n)); }, py::arg("d"),
          py::arg("m"));
    m.def("cyc_count", [](std::int64_t d, std::int64_t s) { return to_py(words::cyc_count(d, s)); }, py::arg("d"),
          py::arg("s"));
    m.def("grw_c", [](std::int64_t d, std::int64_t n) { return to_py(words::grw_c(d, n)); }, py::arg("d"),
          py::arg("m"));
    m.def(
        "enumerate_necklaces",
        [](std::int64_t d, std::int64_t s) {
            std::vector<std::string> out;
            for (const auto& c : words::enumerate_aperiodic_necklaces(d, s, cli::enumeration_budget()))
                out.push_back(words::to_string(c.representative));
            return out;
        },
        py::arg("d"), py::arg("s"));

    m.def(
        "k_groups",
        [](std::int64_t p, std::int64_t d, std::int64_t q, std::optional<int> n) {
            return witt_sum_dict(tc::k_groups(d, q, field_of(p, n)).symbolic);
        },
        py::arg("p"), py::arg("d"), py::arg("q"), py::arg("n") = py::none());
    m.def(
        "tc_local",
        [](std::int64_t m_prime, std::int64_t s_prime, std::int64_t d, std::int64_t p, std::int64_t q,
           std::optional<int> n) { return witt_sum_dict(tc::tc_local(m_prime, s_prime, d, field_of(p, n), q)); },
        py::arg("m_prime"), py::arg("s_prime"), py::arg("d"), py::arg("p"), py::arg("q"), py::arg("n") = py::none());

    m.def(
        "homology",
        [](const std::string& word) {
            const auto c = words::canonicalize(words::parse_word(word));
            py::dict out;
            for (const auto& [degree, group] : homology::oracle_homology(c)) out[py::int_(degree)] = arith::to_string(group);
            return out;
        },
        py::arg("word"));
    m.def(
        "connes",
        [](const std::string& word) { return homology::oracle_connes(words::canonicalize(words::parse_word(word))); },
        py::arg("word"));

    m.def(
        "k_char_zero",
        [](std::int64_t q, std::int64_t d, std::optional<int> trdeg) {
            return graded_dict(charzero::k_char_zero(q, d, profile_of(trdeg)));
        },
        py::arg("q"), py::arg("d"), py::arg("trdeg") = py::none());
    m.def(
        "hc",
        [](std::int64_t q, std::int64_t d, std::optional<int> trdeg, bool birelative) {
            const auto profile = profile_of(trdeg);
            return graded_dict(birelative ? charzero::hc_birelative(q, d, profile)
                                          : charzero::hc_relative(q, d, profile));
        },
        py::arg("q"), py::arg("d"), py::arg("trdeg") = py::none(), py::arg("birelative") = false);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
