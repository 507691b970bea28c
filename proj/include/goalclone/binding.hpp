#pragma once

#include <set>
#include <utility>
#include <vector>

#include "goalclone/term.hpp"

namespace goalclone {

using NameSet = std::set<Name>;

/// Scoped correspondence between bound names of two terms under comparison.
/// Lookups resolve to the innermost binding, so shadowed pairs are hidden.
class Renaming {
public:
	void push(const Name& left, const Name& right) { pairs_.emplace_back(left, right); }
	void pop() { pairs_.pop_back(); }
	std::size_t size() const noexcept { return pairs_.size(); }

	/// True iff `left` and `right` are bound by the same pair, or both are
	/// unbound and textually equal.
	bool relates(const Name& left, const Name& right) const;

private:
	std::vector<std::pair<Name, Name>> pairs_;
};

NameSet free_vars(const Term& t);

bool occurs_free(const Name& x, const Term& t);

/// Every name appearing anywhere in `t`, bound or free, binder positions included.
NameSet all_names(const Term& t);

/// `base` if it is not in `avoid`, otherwise the first of `base'`, `base''`, ...
/// that is not.
Name fresh_name(const Name& base, const NameSet& avoid);

/// Capture-avoiding substitution of `u` for the free occurrences of `x` in
/// `t`. Binders that would capture a free name of `u` are renamed first.
Term substitute(const Term& t, const Name& x, const Term& u);

/// Alpha-equivalence: equality up to consistent renaming of bound names.
/// Free names must match exactly.
bool alpha_eq(const Term& a, const Term& b);

/// True iff `t` is `forall (x : T), body` and `body` structurally equals
/// `target` or recursively satisfies prod_body against it.
bool prod_body(const Term& t, const Term& target);

} // namespace goalclone
