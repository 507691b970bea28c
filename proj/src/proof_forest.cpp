#include "goalclone/proof_forest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "goalclone/parser.hpp"

namespace goalclone {

namespace {

void append_field(std::string& out, std::string_view text) {
	out += std::to_string(text.size());
	out += ':';
	out += text;
}

std::string parsed_key(const Context& ctx, const Term& conclusion) {
	std::string key = "P";
	for (const auto& h : ctx.hypotheses()) {
		append_field(key, h.name.text());
		append_field(key, print(h.type));
	}
	key += '|';
	append_field(key, print(conclusion));
	return key;
}

std::string raw_key(const std::vector<RawHypothesis>& hyps, const std::string& conclusion) {
	std::string key = "R";
	for (const auto& h : hyps) {
		key += std::to_string(h.names.size());
		for (const auto& n : h.names) {
			append_field(key, n);
		}
		append_field(key, h.type);
	}
	key += '|';
	append_field(key, conclusion);
	return key;
}

std::string short_text(const std::string& text) {
	constexpr std::size_t limit = 80;
	if (text.size() <= limit) {
		return text;
	}
	return text.substr(0, limit) + "...";
}

} // namespace

GoalState::GoalState(Context context, Term conclusion)
	: context_(std::move(context)), conclusion_(std::move(conclusion)) {
	raw_conclusion_ = print(*conclusion_);
	for (const auto& h : context_.hypotheses()) {
		raw_hypotheses_.push_back({{h.name.text()}, print(h.type)});
	}
	key_ = parsed_key(context_, *conclusion_);
}

GoalState GoalState::from_text(std::vector<RawHypothesis> hypotheses, std::string conclusion) {
	GoalState state;
	state.raw_hypotheses_ = std::move(hypotheses);
	state.raw_conclusion_ = std::move(conclusion);
	try {
		Context ctx;
		for (const auto& h : state.raw_hypotheses_) {
			Term type = parse(h.type);
			for (const auto& n : h.names) {
				ctx.add({Name(n), type});
			}
		}
		Term concl = parse(state.raw_conclusion_);
		state.key_ = parsed_key(ctx, concl);
		state.context_ = std::move(ctx);
		state.conclusion_ = std::move(concl);
	} catch (const std::exception& e) {
		state.skip_reason_ = e.what();
		state.key_ = raw_key(state.raw_hypotheses_, state.raw_conclusion_);
	}
	return state;
}

const ProofNode& ProofTree::node(NodeId id) const {
	if (id >= nodes_.size()) {
		throw UnknownNode("no proof node with id " + std::to_string(id));
	}
	return nodes_[id];
}

ProofTree build_tree(const TheoremTrace& trace) {
	if (trace.steps.empty()) {
		throw EmptyTrace("trace of '" + trace.theorem + "' has no steps");
	}
	const std::string where = trace.file + ": " + trace.theorem + ": ";

	// Goal sets in state order, duplicates collapsed.
	auto distinct = [](const std::vector<GoalState>& goals) {
		std::vector<const GoalState*> out;
		std::set<std::string> seen;
		for (const auto& g : goals) {
			if (seen.insert(g.key()).second) {
				out.push_back(&g);
			}
		}
		return out;
	};
	auto keys_of = [](const std::vector<const GoalState*>& goals) {
		std::set<std::string> keys;
		for (const auto* g : goals) {
			keys.insert(g->key());
		}
		return keys;
	};

	ProofTree tree;
	struct Slot {
		NodeId parent;
		std::size_t index;
	};
	std::map<std::string, std::vector<Slot>> pending;
	std::vector<std::vector<std::optional<NodeId>>> links;
	std::vector<bool> has_parent;

	auto prev = distinct(trace.initial_goals);
	auto prev_keys = keys_of(prev);
	const auto initial_keys = prev_keys;

	for (std::size_t s = 0; s < trace.steps.size(); ++s) {
		const auto& step = trace.steps[s];
		auto curr = distinct(step.goals_after);
		auto curr_keys = keys_of(curr);

		std::vector<const GoalState*> gone;
		for (const auto* g : prev) {
			if (!curr_keys.contains(g->key())) {
				gone.push_back(g);
			}
		}
		std::vector<const GoalState*> fresh;
		for (const auto* g : curr) {
			if (!prev_keys.contains(g->key())) {
				fresh.push_back(g);
			}
		}
		if (gone.size() > 1 && !fresh.empty()) {
			tree.diagnostics_.push_back(where + "step " + std::to_string(s) + " ('" + short_text(step.tactic) +
				"') eliminated " + std::to_string(gone.size()) + " goals; its " + std::to_string(fresh.size()) +
				" new goals are attached to each of them");
		}

		for (const auto* g : gone) {
			const NodeId id = tree.nodes_.size();
			tree.nodes_.push_back(ProofNode{id, *g, step.tactic, {}, s});
			links.emplace_back(fresh.size());
			has_parent.push_back(false);
			if (auto it = pending.find(g->key()); it != pending.end()) {
				for (const auto& slot : it->second) {
					links[slot.parent][slot.index] = id;
					has_parent[id] = true;
				}
				pending.erase(it);
			}
			for (std::size_t c = 0; c < fresh.size(); ++c) {
				pending[fresh[c]->key()].push_back({id, c});
			}
		}

		prev = std::move(curr);
		prev_keys = std::move(curr_keys);
	}

	if (!prev.empty()) {
		tree.diagnostics_.push_back(where + "proof ends with " + std::to_string(prev.size()) + " open goal(s)");
	}
	for (const auto& [key, slots] : pending) {
		for (const auto& slot : slots) {
			tree.diagnostics_.push_back(where + "child goal of node " + std::to_string(slot.parent) +
				" was never eliminated; link dropped");
		}
	}

	for (NodeId id = 0; id < tree.nodes_.size(); ++id) {
		for (const auto& link : links[id]) {
			if (link) {
				tree.nodes_[id].children.push_back(*link);
			}
		}
		if (!has_parent[id]) {
			tree.roots_.push_back(id);
			if (!initial_keys.contains(tree.nodes_[id].goal.key())) {
				tree.diagnostics_.push_back(where + "node " + std::to_string(id) +
					" has no parent and is not an initial goal");
			}
		}
	}
	return tree;
}

const std::vector<ProofNode>& get_nodes(const ProofTree& tree) {
	return tree.nodes();
}

namespace {

void collect_proof(const ProofTree& tree, NodeId id, std::vector<bool>& on_path, std::vector<std::string>& out) {
	if (on_path[id]) {
		return;
	}
	const ProofNode& n = tree.nodes()[id];
	out.push_back(n.tactic);
	on_path[id] = true;
	for (NodeId child : n.children) {
		collect_proof(tree, child, on_path, out);
	}
	on_path[id] = false;
}

} // namespace

std::vector<std::string> get_proof(const ProofTree& tree, NodeId node) {
	tree.node(node);
	std::vector<bool> on_path(tree.nodes().size(), false);
	std::vector<std::string> out;
	collect_proof(tree, node, on_path, out);
	return out;
}

} // namespace goalclone
