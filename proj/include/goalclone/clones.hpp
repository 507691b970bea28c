#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "goalclone/proof_forest.hpp"
#include "goalclone/term.hpp"

namespace goalclone {

/// One proof-tree node, flattened: the goal, its generalization over the
/// local context, and the tactics of its sub-proof.
struct GoalRecord {
	Term goal;
	Term generalized;
	std::vector<std::string> proof;
	std::string file;
	std::string theorem;
	NodeId node;
};

/// Total order used for records: (file, theorem, node).
bool record_order(const GoalRecord& a, const GoalRecord& b);

struct ClonePair {
	GoalRecord left;
	GoalRecord right;
	/// Positions of the two records in the list given to find_clones.
	std::size_t left_index;
	std::size_t right_index;
};

/// Records for every node of `trace`'s proof tree, in node order. Nodes
/// whose goal did not parse, or whose context cannot be generalized, are
/// left out with a diagnostic.
std::vector<GoalRecord> flatten_trace(const TheoremTrace& trace, std::vector<std::string>& diagnostics);

/// flatten_trace over all traces, sorted by record_order.
std::vector<GoalRecord> flatten(const std::vector<TheoremTrace>& traces, std::vector<std::string>& diagnostics);

/// Drops every record whose generalized goal is the body of some other
/// record's generalized goal under one or more quantifiers. All records
/// sharing such a generalized goal are dropped. Order is preserved.
std::vector<GoalRecord> dedupe(const std::vector<GoalRecord>& records);

struct CloneOptions {
	/// Minimum proof length, in tactic sentences, required of both members.
	std::size_t min_proof_size = 5;
	bool skip_same_theorem = false;
};

/// All pairs i < j with alpha-equivalent generalized goals whose proofs
/// both meet the size threshold, sorted by
/// (left file, left theorem, right file, right theorem, goal text).
/// Throws std::invalid_argument when the threshold is zero.
std::vector<ClonePair> find_clones(const std::vector<GoalRecord>& records, const CloneOptions& options = {});

} // namespace goalclone
