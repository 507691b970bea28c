#pragma once

// Test-only reference implementations. Nothing here calls into the binding
// module, so agreement with it is evidence rather than tautology.

#include <random>
#include <string>
#include <vector>

#include "goalclone/clones.hpp"
#include "goalclone/generalize.hpp"
#include "goalclone/term.hpp"

namespace goalclone::testing {

/// Nameless rendering: bound occurrences become de Bruijn indices, free
/// names stay as text, binder names vanish. Two terms are alpha-equivalent
/// iff their renderings are equal.
std::string nameless(const Term& t);

bool oracle_alpha_eq(const Term& a, const Term& b);

/// nameless() of t with u placed at every free occurrence of x. Done in the
/// nameless world, where capture cannot happen.
std::string nameless_substitute(const Term& t, const Name& x, const Term& u);

/// Free names, computed by a separate traversal.
std::vector<std::string> oracle_free_names(const Term& t);

/// Renames every binder to a globally fresh `q<N>` name throughout its scope.
Term rename_all_bound(const Term& t, std::size_t& counter);

/// Renames the binder occurrence with preorder index `which` (mod the number
/// of binders) to `fresh`, throughout its scope. Returns t when it has none.
Term rename_one_bound(const Term& t, std::size_t which, const Name& fresh);

/// Replaces free occurrences of `from` with the name `to`.
Term rename_free(const Term& t, const Name& from, const Name& to);

std::size_t count_binders(const Term& t);

struct GenConfig {
	std::vector<std::string> names = {"x", "y", "z", "f", "g", "h"};
	std::vector<SortKind> sorts = {SortKind::Set, SortKind::Prop, SortKind::Type};
	int max_depth = 6;
};

Term random_term(std::mt19937_64& rng, const GenConfig& config);
Term random_term(std::mt19937_64& rng, const GenConfig& config, int depth);

/// A prover-like context, where each hypothesis type mentions only globals
/// and earlier hypotheses, with a goal over both.
struct ContextInstance {
	Context context;
	Term goal;
};

ContextInstance random_context_instance(std::mt19937_64& rng);

/// Every term of depth <= `depth` (leaves have depth 1) in a fixed small
/// grammar: leaves x, y, z, Set, Prop and eleven one-hole constructor
/// families covering each binder form.
std::vector<Term> enumerate_terms(int depth);

/// Brute-force clone search: quadratic dedupe via prod_body-free suffix
/// peeling on structural equality, then nameless comparison of every pair.
/// Returns (left index, right index) pairs into the *original* records.
std::vector<std::pair<std::size_t, std::size_t>> oracle_clone_pairs(
	const std::vector<GoalRecord>& records, std::size_t min_proof_size);

} // namespace goalclone::testing
