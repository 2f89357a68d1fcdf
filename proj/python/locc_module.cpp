// Copyright 2026 The locc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locc/certify.hpp"
#include "locc/copies.hpp"
#include "locc/report.hpp"
#include "locc/sampler.hpp"
#include "locc/search.hpp"

namespace py = pybind11;

namespace {

// Exact-mode inputs go through str(), so Python floats arrive as their
// shortest decimal repr (0.493 -> "0.493" -> 493/1000).
std::vector<std::string> as_literals(const py::sequence &seq) {
    std::vector<std::string> out;
    out.reserve(py::len(seq));
    for (const auto &item : seq) {
        out.push_back(py::str(item).cast<std::string>());
    }
    return out;
}

locc::Spectrum float_spectrum(const py::sequence &seq) {
    std::vector<double> raw;
    raw.reserve(py::len(seq));
    for (const auto &item : seq) {
        if (py::isinstance<py::str>(item)) {
            raw.push_back(locc::parse_double(item.cast<std::string>()));
        } else {
            raw.push_back(item.cast<double>());
        }
    }
    return locc::make_spectrum(std::move(raw));
}

locc::ExactSpectrum exact_spectrum(const py::sequence &seq) {
    auto literals = as_literals(seq);
    return locc::make_spectrum<locc::Rational>(std::span<const std::string>(literals));
}

py::list to_py(const locc::Spectrum &s) {
    py::list out;
    for (double x : s.values()) {
        out.append(x);
    }
    return out;
}

py::list to_py(const locc::ExactSpectrum &s) {
    py::list out;
    for (const auto &x : s.values()) {
        out.append(locc::to_string(x));
    }
    return out;
}

py::object json_to_py(const nlohmann::json &doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

template <typename Fn>
py::object dispatch(const py::sequence &a, bool exact, Fn &&fn) {
    if (exact) {
        return fn(exact_spectrum(a));
    }
    return fn(float_spectrum(a));
}

template <typename Fn>
py::object dispatch_pair(const py::sequence &psi, const py::sequence &phi, bool exact, Fn &&fn) {
    if (exact) {
        return fn(locc::make_state_pair(exact_spectrum(psi), exact_spectrum(phi)));
    }
    return fn(locc::make_state_pair(float_spectrum(psi), float_spectrum(phi)));
}

}  // namespace

PYBIND11_MODULE(_locc, m) {
    m.doc() = "Exact LOCC transformability of bipartite pure states (Nielsen majorization) and k-copy search";

    py::register_exception<locc::Error>(m, "LoccError", PyExc_ValueError);

    py::class_<locc::MajorizationVerdict>(m, "Verdict")
        .def_readonly("holds", &locc::MajorizationVerdict::holds)
        .def_readonly("first_violation", &locc::MajorizationVerdict::first_violation)
        .def("__bool__", [](const locc::MajorizationVerdict &v) { return v.holds; })
        .def("__repr__", [](const locc::MajorizationVerdict &v) {
            return std::string("Verdict(holds=") + (v.holds ? "True" : "False") + ", first_violation=" +
                   (v.first_violation ? std::to_string(*v.first_violation) : "None") + ")";
        });

    m.def(
        "make_spectrum",
        [](const py::sequence &raw, bool exact) {
            return dispatch(raw, exact, [](const auto &s) -> py::object { return to_py(s); });
        },
        py::arg("raw"), py::arg("exact") = false,
        "Sorted, normalized spectrum. Exact mode returns 'p/q' strings.");

    m.def(
        "prefix_sums",
        [](const py::sequence &raw, bool exact) {
            return dispatch(raw, exact, [](const auto &s) -> py::object {
                py::list out;
                for (const auto &x : locc::prefix_sums(s).partial) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
                        out.append(x);
                    } else {
                        out.append(locc::to_string(x));
                    }
                }
                return out;
            });
        },
        py::arg("spectrum"), py::arg("exact") = false);

    m.def(
        "majorizes",
        [](const py::sequence &target, const py::sequence &source, bool exact) {
            if (exact) {
                return locc::majorizes(exact_spectrum(target), exact_spectrum(source));
            }
            return locc::majorizes(float_spectrum(target), float_spectrum(source));
        },
        py::arg("target"), py::arg("source"), py::arg("exact") = false,
        "Whether |source> -> |target> is possible by LOCC.");

    m.def(
        "entropy",
        [](const py::sequence &raw, bool exact) {
            return dispatch(raw, exact, [](const auto &s) -> py::object { return py::float_(locc::entropy(s)); });
        },
        py::arg("spectrum"), py::arg("exact") = false, "Shannon entropy in bits.");

    m.def(
        "tensor_power",
        [](const py::sequence &raw, unsigned k, bool exact, std::size_t max_entries) {
            return dispatch(raw, exact, [&](const auto &s) -> py::object {
                return to_py(locc::tensor_power(s, k, {max_entries}));
            });
        },
        py::arg("spectrum"), py::arg("k"), py::arg("exact") = false,
        py::arg("max_entries") = locc::kDefaultMaxTensorEntries);

    m.def(
        "transformable_k",
        [](const py::sequence &psi, const py::sequence &phi, unsigned k, bool exact) {
            return dispatch_pair(psi, phi, exact, [&](const auto &pair) -> py::object {
                return py::cast(locc::transformable_k(pair, k));
            });
        },
        py::arg("psi"), py::arg("phi"), py::arg("k"), py::arg("exact") = false);

    m.def(
        "necessary_condition",
        [](const py::sequence &psi, const py::sequence &phi, bool exact) {
            return dispatch_pair(psi, phi, exact, [](const auto &pair) -> py::object {
                return py::bool_(locc::necessary_condition(pair));
            });
        },
        py::arg("psi"), py::arg("phi"), py::arg("exact") = false);

    m.def(
        "embed",
        [](const py::sequence &raw, std::size_t d_target, bool exact) {
            return dispatch(raw, exact, [&](const auto &s) -> py::object { return to_py(locc::embed(s, d_target)); });
        },
        py::arg("spectrum"), py::arg("d_target"), py::arg("exact") = false);

    m.def(
        "sample_spectrum",
        [](std::size_t d, std::uint64_t seed, std::uint64_t stream_index, const std::string &measure) {
            return to_py(locc::sample_spectrum(d, {seed, stream_index}, locc::parse_measure(measure)));
        },
        py::arg("d"), py::arg("seed"), py::arg("stream_index") = 0, py::arg("measure") = "uniform-entries");

    m.def(
        "sample_oriented_pair",
        [](std::size_t d, std::uint64_t seed, std::uint64_t stream_index, const std::string &measure) {
            auto pair = locc::sample_oriented_pair(d, {seed, stream_index}, locc::parse_measure(measure));
            return py::make_tuple(to_py(pair.psi), to_py(pair.phi));
        },
        py::arg("d"), py::arg("seed"), py::arg("stream_index") = 0, py::arg("measure") = "uniform-entries");

    m.def(
        "classify_pair",
        [](const py::sequence &psi, const py::sequence &phi, unsigned k_success, unsigned k_fail, bool exact,
           bool fast_path) {
            locc::SearchConfig cfg;
            cfg.k_success = k_success;
            cfg.k_fail = k_fail;
            return dispatch_pair(psi, phi, exact, [&](const auto &pair) -> py::object {
                cfg.d = pair.dimension();
                auto c = locc::classify_pair(pair, cfg, fast_path);
                return py::make_tuple(c.event_I, c.event_II);
            });
        },
        py::arg("psi"), py::arg("phi"), py::arg("k_success") = 2, py::arg("k_fail") = 3, py::arg("exact") = false,
        py::arg("fast_path") = true, "Returns (event_I, event_II).");

    m.def("binomial_stderr", &locc::binomial_stderr, py::arg("successes"), py::arg("trials"));

    m.def(
        "run_search",
        [](std::size_t d, std::uint64_t samples, std::uint64_t seed, unsigned k_success, unsigned k_fail,
           const std::string &mode, const std::string &measure, std::size_t max_store, unsigned threads) {
            locc::SearchConfig cfg;
            cfg.d = d;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.k_success = k_success;
            cfg.k_fail = k_fail;
            cfg.mode = locc::parse_search_mode(mode);
            cfg.measure = locc::parse_measure(measure);
            cfg.max_counterexamples_stored = max_store;
            locc::SearchReport report;
            {
                py::gil_scoped_release release;
                report = locc::run_search(cfg, threads);
            }
            return json_to_py(locc::to_json(report));
        },
        py::arg("d"), py::arg("samples"), py::arg("seed") = 0, py::arg("k_success") = 2, py::arg("k_fail") = 3,
        py::arg("mode") = "rational-confirm", py::arg("measure") = "uniform-entries", py::arg("max_store") = 1000,
        py::arg("threads") = 1, "Runs the Monte Carlo search and returns the JSON report as a dict.");

    m.def("verify_paper", []() {
        auto fixtures = locc::published_counterexamples();
        auto cert = locc::certify(fixtures);
        py::list checks;
        for (const auto &c : cert.checks) {
            py::dict item;
            item["fixture"] = c.fixture;
            item["property"] = c.property;
            item["passed"] = c.passed;
            item["first_violation"] =
                c.verdict && c.verdict->first_violation ? py::cast(*c.verdict->first_violation) : py::none();
            item["violation_gap"] = c.violation_gap ? py::cast(locc::to_string(*c.violation_gap)) : py::none();
            checks.append(item);
        }
        py::dict out;
        out["all_passed"] = cert.all_passed();
        out["checks"] = checks;
        return out;
    });
}
