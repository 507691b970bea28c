#include "goalclone/clones.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "goalclone/binding.hpp"
#include "goalclone/generalize.hpp"

namespace goalclone {

bool record_order(const GoalRecord& a, const GoalRecord& b) {
	return std::tie(a.file, a.theorem, a.node) < std::tie(b.file, b.theorem, b.node);
}

std::vector<GoalRecord> flatten_trace(const TheoremTrace& trace, std::vector<std::string>& diagnostics) {
	const std::string where = trace.file + ": " + trace.theorem + ": ";
	std::vector<GoalRecord> records;
	ProofTree tree;
	try {
		tree = build_tree(trace);
	} catch (const EmptyTrace& e) {
		diagnostics.push_back(where + e.what());
		return records;
	}
	diagnostics.insert(diagnostics.end(), tree.diagnostics().begin(), tree.diagnostics().end());

	for (const auto& node : get_nodes(tree)) {
		const GoalState& state = node.goal;
		if (state.skipped()) {
			diagnostics.push_back(where + "node " + std::to_string(node.id) + " skipped: " + state.skip_reason());
			continue;
		}
		try {
			Term generalized = generalize(state.context(), *state.conclusion());
			records.push_back(GoalRecord{*state.conclusion(), std::move(generalized), get_proof(tree, node.id),
				trace.file, trace.theorem, node.id});
		} catch (const CycleError& e) {
			diagnostics.push_back(where + "node " + std::to_string(node.id) + " skipped: " + e.what());
		}
	}
	return records;
}

std::vector<GoalRecord> flatten(const std::vector<TheoremTrace>& traces, std::vector<std::string>& diagnostics) {
	std::vector<GoalRecord> records;
	for (const auto& trace : traces) {
		auto part = flatten_trace(trace, diagnostics);
		records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
	}
	std::stable_sort(records.begin(), records.end(), record_order);
	return records;
}

std::vector<GoalRecord> dedupe(const std::vector<GoalRecord>& records) {
	// Canonical text is injective on terms, so prod_body(a, b) holds exactly
	// when print(b) is the text of a strict body of a's forall prefix. A term
	// is never its own strict body, which covers the i != j requirement.
	std::unordered_set<std::string> nested_bodies;
	for (const auto& r : records) {
		for (const auto* product = r.generalized.as<Forall>(); product != nullptr;
			 product = product->body.as<Forall>()) {
			nested_bodies.insert(print(product->body));
		}
	}
	std::vector<GoalRecord> kept;
	kept.reserve(records.size());
	for (const auto& r : records) {
		if (!nested_bodies.contains(print(r.generalized))) {
			kept.push_back(r);
		}
	}
	return kept;
}

std::vector<ClonePair> find_clones(const std::vector<GoalRecord>& records, const CloneOptions& options) {
	if (options.min_proof_size == 0) {
		throw std::invalid_argument("minimum proof size must be at least 1");
	}
	std::vector<ClonePair> pairs;
	for (std::size_t i = 0; i < records.size(); ++i) {
		const auto& left = records[i];
		if (left.proof.size() < options.min_proof_size) {
			continue;
		}
		for (std::size_t j = i + 1; j < records.size(); ++j) {
			const auto& right = records[j];
			if (right.proof.size() < options.min_proof_size) {
				continue;
			}
			if (options.skip_same_theorem && left.file == right.file && left.theorem == right.theorem) {
				continue;
			}
			if (alpha_eq(left.generalized, right.generalized)) {
				pairs.push_back(ClonePair{left, right, i, j});
			}
		}
	}

	std::vector<std::string> goal_text;
	goal_text.reserve(pairs.size());
	std::vector<std::size_t> order(pairs.size());
	for (std::size_t k = 0; k < pairs.size(); ++k) {
		goal_text.push_back(print(pairs[k].left.generalized));
		order[k] = k;
	}
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		const auto& p = pairs[a];
		const auto& q = pairs[b];
		return std::tie(p.left.file, p.left.theorem, p.right.file, p.right.theorem, goal_text[a], p.left_index,
				   p.right_index) < std::tie(q.left.file, q.left.theorem, q.right.file, q.right.theorem,
									   goal_text[b], q.left_index, q.right_index);
	});
	std::vector<ClonePair> sorted;
	sorted.reserve(pairs.size());
	for (std::size_t k : order) {
		sorted.push_back(std::move(pairs[k]));
	}
	return sorted;
}

} // namespace goalclone
