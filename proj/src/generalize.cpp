#include "goalclone/generalize.hpp"

#include <algorithm>

namespace goalclone {

Context::Context(std::vector<Hypothesis> hypotheses) {
	hypotheses_.reserve(hypotheses.size());
	for (auto& h : hypotheses) {
		add(std::move(h));
	}
}

void Context::add(Hypothesis h) {
	if (contains(h.name)) {
		throw std::invalid_argument("duplicate hypothesis '" + h.name.text() + "'");
	}
	hypotheses_.push_back(std::move(h));
}

const Hypothesis* Context::find(const Name& name) const {
	auto it = std::find_if(hypotheses_.begin(), hypotheses_.end(), [&](const auto& h) { return h.name == name; });
	return it == hypotheses_.end() ? nullptr : &*it;
}

NameSet Context::names() const {
	NameSet out;
	for (const auto& h : hypotheses_) {
		out.insert(h.name);
	}
	return out;
}

std::string Context::print() const {
	std::string out;
	for (const auto& h : hypotheses_) {
		if (!out.empty()) {
			out += '\n';
		}
		out += h.name.text();
		out += " : ";
		out += goalclone::print(h.type);
	}
	return out;
}

std::vector<Name> dependency_order(const Context& ctx, const NameSet& fvs) {
	const auto& hyps = ctx.hypotheses();
	const std::size_t n = hyps.size();

	// deps[i]: context positions mentioned free in the type of hypothesis i.
	std::vector<std::vector<std::size_t>> deps(n);
	for (std::size_t i = 0; i < n; ++i) {
		const NameSet mentioned = free_vars(hyps[i].type);
		for (std::size_t j = 0; j < n; ++j) {
			if (mentioned.contains(hyps[j].name)) {
				deps[i].push_back(j);
			}
		}
	}

	std::vector<bool> wanted(n, false);
	std::vector<std::size_t> work;
	for (std::size_t i = 0; i < n; ++i) {
		if (fvs.contains(hyps[i].name)) {
			wanted[i] = true;
			work.push_back(i);
		}
	}
	while (!work.empty()) {
		const std::size_t i = work.back();
		work.pop_back();
		for (std::size_t j : deps[i]) {
			if (!wanted[j]) {
				wanted[j] = true;
				work.push_back(j);
			}
		}
	}

	// Repeatedly emit the earliest wanted hypothesis whose dependencies are
	// all emitted.
	std::vector<bool> emitted(n, false);
	std::vector<Name> order;
	const auto total = static_cast<std::size_t>(std::count(wanted.begin(), wanted.end(), true));
	while (order.size() < total) {
		bool progressed = false;
		for (std::size_t i = 0; i < n; ++i) {
			if (!wanted[i] || emitted[i]) {
				continue;
			}
			const bool ready = std::all_of(deps[i].begin(), deps[i].end(), [&](std::size_t j) { return emitted[j]; });
			if (ready) {
				emitted[i] = true;
				order.push_back(hyps[i].name);
				progressed = true;
				break;
			}
		}
		if (!progressed) {
			std::string members;
			for (std::size_t i = 0; i < n; ++i) {
				if (wanted[i] && !emitted[i]) {
					members += members.empty() ? "" : ", ";
					members += hyps[i].name.text();
				}
			}
			throw CycleError("cyclic hypothesis dependencies among: " + members);
		}
	}
	return order;
}

Term generalize(const Context& ctx, const Term& goal) {
	NameSet fvs;
	for (const auto& name : free_vars(goal)) {
		if (ctx.contains(name)) {
			fvs.insert(name);
		}
	}
	if (fvs.empty()) {
		return goal;
	}
	const auto order = dependency_order(ctx, fvs);
	Term result = goal;
	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		result = forall(*it, ctx.find(*it)->type, std::move(result));
	}
	return result;
}

} // namespace goalclone
