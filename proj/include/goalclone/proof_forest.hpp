#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goalclone/generalize.hpp"
#include "goalclone/term.hpp"

namespace goalclone {

/// A hypothesis entry as printed by the prover; `x y : T` has two names.
struct RawHypothesis {
	std::vector<std::string> names;
	std::string type;

	friend bool operator==(const RawHypothesis&, const RawHypothesis&) = default;
};

/// One goal of a prover state: local context plus conclusion.
///
/// States built from text keep the printed form. When any hypothesis or the
/// conclusion fails to parse the state is marked skipped; it still takes part
/// in tree reconstruction, identified by its raw text.
class GoalState {
public:
	GoalState(Context context, Term conclusion);

	static GoalState from_text(std::vector<RawHypothesis> hypotheses, std::string conclusion);

	const Context& context() const noexcept { return context_; }
	/// Empty for skipped states.
	const std::optional<Term>& conclusion() const noexcept { return conclusion_; }
	const std::string& raw_conclusion() const noexcept { return raw_conclusion_; }
	const std::vector<RawHypothesis>& raw_hypotheses() const noexcept { return raw_hypotheses_; }

	bool skipped() const noexcept { return !conclusion_.has_value(); }
	const std::string& skip_reason() const noexcept { return skip_reason_; }

	/// Goal identity used for diffing consecutive states: canonical context
	/// and conclusion text, or the raw text for skipped states.
	const std::string& key() const noexcept { return key_; }

private:
	GoalState() = default;

	Context context_;
	std::optional<Term> conclusion_;
	std::string raw_conclusion_;
	std::vector<RawHypothesis> raw_hypotheses_;
	std::string skip_reason_;
	std::string key_;
};

struct TraceStep {
	std::string tactic;
	std::vector<GoalState> goals_after;
};

struct TheoremTrace {
	std::string file;
	std::string theorem;
	std::string coq_version;
	std::vector<GoalState> initial_goals;
	std::vector<TraceStep> steps;
};

using NodeId = std::size_t;

struct ProofNode {
	NodeId id;
	GoalState goal;
	/// The tactic that eliminated this goal.
	std::string tactic;
	std::vector<NodeId> children;
	/// Index of the eliminating step within the trace.
	std::size_t step;
};

class EmptyTrace : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

class UnknownNode : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

/// Nodes are stored in creation order, so `nodes()[id].id == id`. The graph
/// is acyclic but may share children when one step eliminates several goals.
class ProofTree {
public:
	const std::vector<ProofNode>& nodes() const noexcept { return nodes_; }
	const std::vector<NodeId>& roots() const noexcept { return roots_; }
	const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

	const ProofNode& node(NodeId id) const;

private:
	friend ProofTree build_tree(const TheoremTrace& trace);

	std::vector<ProofNode> nodes_;
	std::vector<NodeId> roots_;
	std::vector<std::string> diagnostics_;
};

/**
	Replays a theorem trace. At each step, every goal of the previous state
	that is absent from the new state becomes a node carrying the step's
	tactic, and its children are the goals that are new in this step. A child
	link resolves to the node created when that goal is itself eliminated.

	Throws EmptyTrace when the trace has no steps. Unresolved children,
	steps eliminating several goals at once, and unfinished proofs are
	reported as diagnostics.
*/
ProofTree build_tree(const TheoremTrace& trace);

/// All nodes in creation order.
const std::vector<ProofNode>& get_nodes(const ProofTree& tree);

/// Preorder tactic listing of the sub-proof rooted at `node`. Shared children
/// are visited once per path. Throws UnknownNode.
std::vector<std::string> get_proof(const ProofTree& tree, NodeId node);

} // namespace goalclone
