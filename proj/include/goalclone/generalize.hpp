#pragma once

#include <stdexcept>
#include <vector>

#include "goalclone/binding.hpp"
#include "goalclone/term.hpp"

namespace goalclone {

struct Hypothesis {
	Name name;
	Term type;
};

/// Local context of a goal, in prover display order. Names are unique.
class Context {
public:
	Context() = default;
	/// Throws std::invalid_argument on a duplicate hypothesis name.
	explicit Context(std::vector<Hypothesis> hypotheses);

	void add(Hypothesis h);

	const Hypothesis* find(const Name& name) const;
	bool contains(const Name& name) const { return find(name) != nullptr; }

	const std::vector<Hypothesis>& hypotheses() const noexcept { return hypotheses_; }
	std::size_t size() const noexcept { return hypotheses_.size(); }
	bool empty() const noexcept { return hypotheses_.empty(); }

	NameSet names() const;

	/// One `name : type` line per hypothesis, joined by newlines.
	std::string print() const;

private:
	std::vector<Hypothesis> hypotheses_;
};

class CycleError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Orders `fvs`, closed under the hypotheses their types mention, so that
/// every variable comes after the variables its type depends on.
/// Independent variables keep their context order.
std::vector<Name> dependency_order(const Context& ctx, const NameSet& fvs);

/// Prefixes `goal` with `forall (v : T),` for each context variable it uses
/// (plus their type dependencies), outermost first in dependency order.
Term generalize(const Context& ctx, const Term& goal);

} // namespace goalclone
