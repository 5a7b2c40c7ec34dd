#pragma once

// Exhaustive and sampled verification suites over small signed digraphs and
// the Boolean networks on them. Each suite checks one family of properties
// on every enumerated instance and reports the number of instances checked
// and the failures found.

#include <cstdint>
#include <string>
#include <vector>

#include "bnsync/sdigraph.hpp"

namespace bnsync {

struct SuiteReport {
    std::string name;
    std::string params;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_examples;  // capped at a few entries
    std::string notes;
    double seconds = 0.0;

    bool passed() const { return failures == 0 && checked > 0; }
};

// For every simple strong signed digraph without positive cycles: cycle
// graphs admit no synchronizing network, and on every other graph every
// and-or-net is synchronizing with a verified constructed word within the
// Fibonacci budget.
SuiteReport run_dichotomy_suite(int n);

// Word-length budgets of the constructions (flip, fix-to-zero, pair merge,
// feedback-one word, fast word) on enumerated instances; configurations are
// fully enumerated for n <= 3 and sampled otherwise.
SuiteReport run_budget_suite(int n, int samples, unsigned seed);

// Unique terminal component of the asynchronous state diagram with at least
// n+1 configurations, for every and-or-net (exhaustive) and sampled general
// networks on strong nontrivial graphs without positive cycles.
SuiteReport run_attractor_suite(int n, int general_samples, unsigned seed);

// Fixed-point counts against cycle signs and sources, on all general
// networks (n <= 3).
SuiteReport run_fixed_point_general_suite(int n);

// Fixed-point counts against cycle signs and sources, on all and-or-nets on
// all simple signed digraphs (n <= 4).
SuiteReport run_fixed_point_and_or_suite(int n);

// The repeated-identity word (1..n)^n synchronizes every network with an
// acyclic interaction digraph; for each permutation, a word missing it fails
// on the corresponding chain counterexample.
SuiteReport run_complete_word_suite(int n);

// Majority networks on simple graphs without in-degree-0/2 vertices realize
// the graph exactly and preserve opposite configuration pairs. Both checks
// decompose per vertex, so validating every local choice covers all graphs.
SuiteReport run_majority_suite(int n);

// SAT reduction equivalences over all three-variable formulas with at most
// two clauses.
SuiteReport run_reduction_suite(int full_check_sample, unsigned seed);

// Random strong simple signed digraphs without positive cycles (one negative
// Hamiltonian cycle plus a few extra arcs).
std::vector<SignedDigraph> strong_negative_sample(int n, int count, unsigned seed);

std::vector<std::string> suite_names();
SuiteReport run_suite_by_name(const std::string& name, int n, int samples, unsigned seed);

std::string report_to_json(const SuiteReport& rep);

}  // namespace bnsync
