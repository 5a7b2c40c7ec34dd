#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bnsync/bnet.hpp"
#include "bnsync/construct.hpp"
#include "bnsync/harness.hpp"
#include "bnsync/reductions.hpp"
#include "bnsync/sdigraph.hpp"
#include "bnsync/syncdet.hpp"

namespace py = pybind11;
using namespace bnsync;

PYBIND11_MODULE(_bnsync, m) {
    m.doc() = "Synchronizing words for asynchronous Boolean networks on signed digraphs";

    py::class_<SignedDigraph>(m, "SignedDigraph")
        .def(py::init<int>(), py::arg("n"))
        .def("add_arc", &SignedDigraph::add_arc, py::arg("src"), py::arg("dst"), py::arg("sign"))
        .def("size", &SignedDigraph::size)
        .def("in_degree", &SignedDigraph::in_degree)
        .def("is_simple", &SignedDigraph::is_simple)
        .def("__str__", [](const SignedDigraph& g) { return to_sdg(g); });

    m.def("parse_sdg", &parse_sdg, py::arg("text"));
    m.def("to_sdg", &to_sdg, py::arg("g"));
    m.def("is_strong", &is_strong, py::arg("g"));
    m.def("is_cycle_graph", &is_cycle_graph, py::arg("g"));
    m.def("switch_graph", &switch_graph, py::arg("g"), py::arg("vertices"));
    m.def(
        "cycle_signs",
        [](const SignedDigraph& g) {
            CycleSignProfile p = cycle_sign_profile(g);
            return py::make_tuple(p.positive, p.negative);
        },
        py::arg("g"), "Counts of (positive, negative) simple cycles.");
    m.def("min_feedback_vertex_set", &min_feedback_vertex_set, py::arg("g"));

    py::class_<BooleanNetwork>(m, "BooleanNetwork");

    py::class_<AndOrNet, BooleanNetwork>(m, "AndOrNet")
        .def("size", &AndOrNet::size)
        .def("component", &AndOrNet::component, py::arg("i"), py::arg("x"))
        .def("apply_word", &AndOrNet::apply_word, py::arg("word"), py::arg("x"))
        .def("__str__", [](const AndOrNet& f) { return to_aon(f); });

    m.def("parse_aon", &parse_aon, py::arg("text"));
    m.def("and_net", &and_net, py::arg("g"));
    m.def("or_net", &or_net, py::arg("g"));
    m.def(
        "bn_switch",
        [](const AndOrNet& f, const std::vector<int>& I) { return bn_switch(f, I); },
        py::arg("f"), py::arg("vertices"));
    m.def("interaction_digraph",
          [](const AndOrNet& f) { return interaction_digraph(f); }, py::arg("f"));
    m.def("enumerate_and_or_nets", &enumerate_and_or_nets, py::arg("g"));

    m.def("fixed_points",
          [](const AndOrNet& f) { return fixed_points(f); }, py::arg("f"));
    m.def("is_synchronizing",
          [](const AndOrNet& f) { return is_synchronizing(f); }, py::arg("f"));
    m.def(
        "shortest_sync_word",
        [](const AndOrNet& f) { return shortest_sync_word(f); }, py::arg("f"),
        "Shortest synchronizing word, or None. n <= 4.");
    m.def(
        "apply_word_all",
        [](const AndOrNet& f, const Word& w) {
            return apply_word_set(f, w, StateSet::full(f.size())).to_vector();
        },
        py::arg("f"), py::arg("word"), "Image of the full state space under the word.");

    m.def("global_sync_word",
          [](const AndOrNet& f) { return global_sync_word(f); }, py::arg("f"));
    m.def(
        "fast_sync",
        [](const SignedDigraph& g) {
            FastSync fs = fast_sync(g);
            return py::make_tuple(fs.net, fs.word);
        },
        py::arg("g"), "An and-or-net on g and a short synchronizing word for it.");
    m.def("tau1_word", &tau1_word, py::arg("g"));
    m.def("n_complete_word", &n_complete_word, py::arg("n"));
    m.def("is_n_complete", &is_n_complete, py::arg("word"), py::arg("n"));
    m.def("word_to_string", &word_to_string, py::arg("word"));
    m.def("word_from_string", &word_from_string, py::arg("text"));
    m.def("config_to_string", &config_to_string, py::arg("x"), py::arg("n"));
    m.def("config_from_string", &config_from_string, py::arg("text"));

    py::class_<Cnf3>(m, "Cnf3")
        .def("n", &Cnf3::n)
        .def("m", &Cnf3::m);
    m.def("parse_dimacs_string", &parse_dimacs_string, py::arg("text"));
    m.def("sat_solve", &sat_solve, py::arg("psi"));
    m.def("strong_reduction_graph", &strong_reduction_graph, py::arg("psi"));
    m.def("negative_reduction_graph", &negative_reduction_graph, py::arg("psi"));
    m.def("strong_universal_word", &strong_universal_word, py::arg("psi"));
    m.def(
        "reduction_equivalence_check",
        [](const Cnf3& psi, int sample, unsigned seed) {
            EquivalenceReport r = equivalence_check(psi, sample, seed);
            py::dict d;
            d["satisfiable"] = r.satisfiable;
            d["consistent"] = r.consistent;
            d["strong_nets_checked"] = r.strong_nets_checked;
            return d;
        },
        py::arg("psi"), py::arg("sample") = 0, py::arg("seed") = 0);

    m.def(
        "run_suite",
        [](const std::string& name, int n, int samples, unsigned seed) {
            SuiteReport r = run_suite_by_name(name, n, samples, seed);
            py::dict d;
            d["name"] = r.name;
            d["params"] = r.params;
            d["checked"] = r.checked;
            d["failures"] = r.failures;
            d["notes"] = r.notes;
            d["seconds"] = r.seconds;
            d["passed"] = r.passed();
            return d;
        },
        py::arg("name"), py::arg("n") = 3, py::arg("samples") = 5, py::arg("seed") = 1);
    m.def("suite_names", &suite_names);
}
