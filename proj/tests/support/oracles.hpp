#pragma once

// Reference implementations used only by tests. Each one is deliberately naive:
// it restates a definition directly instead of sharing code with the library.

#include <cstdint>
#include <random>
#include <vector>

#include "isoimp/application_set.hpp"
#include "isoimp/constraint.hpp"
#include "isoimp/graph.hpp"

namespace isoimp::testing {

// Closure of the satisfying tuples under a coordinate-wise operation, checked over
// all pairs or triples.
bool closed_under_and(const Constraint& c);
bool closed_under_or(const Constraint& c);
bool closed_under_majority(const Constraint& c);
bool closed_under_xor3(const Constraint& c);

// "T equals the models of every clause from the pool that T implies." Pools over
// the constraint's own arguments (arity ≤ 3), each including the empty clause.
bool horn_by_clauses(const Constraint& c);         // ≤ 1 positive literal
bool anti_horn_by_clauses(const Constraint& c);    // ≤ 1 negative literal
bool bijunctive_by_clauses(const Constraint& c);   // ≤ 2 literals
bool affine_by_equations(const Constraint& c);     // parity equations
bool two_affine_by_equations(const Constraint& c); // parity equations on ≤ 2 variables
bool literal_conjunction_by_units(const Constraint& c);

/// All 2^(2^k) functions of arity k, named F<k>_<bits>.
std::vector<Constraint> all_functions(unsigned arity);

/// π(S) ⇒ U for some π, checked with apply_permutation and semantics::implies.
bool iso_implies_naive(const ApplicationSet& s, const ApplicationSet& u);
bool isomorphic_naive(const ApplicationSet& s, const ApplicationSet& u);

/// Is `pi` a witness for π(S) ⇒ U? Works over the union universe, left first.
bool is_witness(const Permutation& pi, const ApplicationSet& s, const ApplicationSet& u);
bool is_iso_witness(const Permutation& pi, const ApplicationSet& s, const ApplicationSet& u);

/// Graphs without isolated vertices on 1..max_vertices vertices, one per isomorphism class.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t max_vertices);

/// A random set over the given universe, drawing up to max_apps applications from the
/// constraint pool with arguments that are variables or, with probability p_const, constants.
ApplicationSet random_set(std::mt19937_64& rng, const std::vector<ConstraintPtr>& pool,
                          const std::vector<std::string>& universe, std::size_t max_apps,
                          double p_const = 0.1);

/// Random instance pair over a joint universe of at most max_vars variables. About one
/// in four pairs is a planted yes-instance: U is a permuted subset of S.
std::pair<ApplicationSet, ApplicationSet> random_pair(std::mt19937_64& rng,
                                                      const std::vector<ConstraintPtr>& pool,
                                                      std::size_t max_vars, std::size_t max_apps,
                                                      double p_const = 0.1);

/// complement_set with the constants 0 and 1 exchanged as well, so that
/// dual_set(S)(a) = S(ā) holds even when S mentions constants.
ApplicationSet dual_set(const ApplicationSet& s);

}  // namespace isoimp::testing
