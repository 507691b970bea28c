#include "goalclone/binding.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace goalclone {

bool Renaming::relates(const Name& left, const Name& right) const {
	auto lhs = std::find_if(pairs_.rbegin(), pairs_.rend(), [&](const auto& p) { return p.first == left; });
	auto rhs = std::find_if(pairs_.rbegin(), pairs_.rend(), [&](const auto& p) { return p.second == right; });
	if (lhs == pairs_.rend() && rhs == pairs_.rend()) {
		return left == right;
	}
	return lhs == rhs;
}

namespace {

class FreeVarCollector {
public:
	explicit FreeVarCollector(NameSet& out) : out_(out) {}

	void visit(const Term& t) {
		std::visit([this](const auto& n) { on(n); }, t.node().value);
	}

private:
	void on(const Sort&) {}
	void on(const Var& n) {
		if (std::find(bound_.begin(), bound_.end(), n.name) == bound_.end()) {
			out_.insert(n.name);
		}
	}
	void on(const App& n) {
		visit(n.fn);
		visit(n.arg);
	}
	void on(const Forall& n) { binder(n.binder_type, n.binder, n.body); }
	void on(const Fun& n) { binder(n.binder_type, n.binder, n.body); }
	void on(const Let& n) {
		visit(n.bound);
		binder(n.binder_type, n.binder, n.body);
	}
	void on(const Fix& n) {
		visit(n.binder_type);
		visit(n.return_type);
		bound_.push_back(n.fn_name);
		bound_.push_back(n.binder);
		visit(n.body);
		bound_.erase(bound_.end() - 2, bound_.end());
	}
	void on(const Match& n) {
		visit(n.scrutinee);
		visit(n.return_type);
		for (const auto& clause : n.clauses) {
			bound_.insert(bound_.end(), clause.atoms.begin(), clause.atoms.end());
			visit(clause.body);
			bound_.erase(bound_.end() - static_cast<std::ptrdiff_t>(clause.atoms.size()), bound_.end());
		}
	}

	void binder(const Term& type, const Name& name, const Term& body) {
		visit(type);
		bound_.push_back(name);
		visit(body);
		bound_.pop_back();
	}

	NameSet& out_;
	std::vector<Name> bound_;
};

void collect_names(const Term& t, NameSet& out) {
	std::visit(
		[&out](const auto& n) {
			using T = std::decay_t<decltype(n)>;
			if constexpr (std::is_same_v<T, Var>) {
				out.insert(n.name);
			} else if constexpr (std::is_same_v<T, App>) {
				collect_names(n.fn, out);
				collect_names(n.arg, out);
			} else if constexpr (std::is_same_v<T, Forall> || std::is_same_v<T, Fun>) {
				out.insert(n.binder);
				collect_names(n.binder_type, out);
				collect_names(n.body, out);
			} else if constexpr (std::is_same_v<T, Let>) {
				out.insert(n.binder);
				collect_names(n.binder_type, out);
				collect_names(n.bound, out);
				collect_names(n.body, out);
			} else if constexpr (std::is_same_v<T, Fix>) {
				out.insert(n.fn_name);
				out.insert(n.binder);
				collect_names(n.binder_type, out);
				collect_names(n.return_type, out);
				collect_names(n.body, out);
			} else if constexpr (std::is_same_v<T, Match>) {
				collect_names(n.scrutinee, out);
				collect_names(n.return_type, out);
				for (const auto& clause : n.clauses) {
					out.insert(clause.atoms.begin(), clause.atoms.end());
					collect_names(clause.body, out);
				}
			}
		},
		t.node().value);
}

bool binds(const std::vector<Name>& binders, const Name& x) {
	return std::find(binders.begin(), binders.end(), x) != binders.end();
}

class Substitution {
public:
	Substitution(const Name& x, const Term& u) : x_(x), u_(u), u_free_(free_vars(u)) {}

	Term apply(const Term& t) const {
		return std::visit([&](const auto& n) { return on(t, n); }, t.node().value);
	}

private:
	Term on(const Term& t, const Sort&) const { return t; }

	Term on(const Term& t, const Var& n) const { return n.name == x_ ? u_ : t; }

	Term on(const Term& t, const App& n) const {
		Term fn = apply(n.fn);
		Term arg = apply(n.arg);
		if (fn.same_object(n.fn) && arg.same_object(n.arg)) {
			return t;
		}
		return app(std::move(fn), std::move(arg));
	}

	Term on(const Term&, const Forall& n) const {
		auto [names, body] = under_binders({n.binder}, n.body);
		return forall(names[0], apply(n.binder_type), std::move(body));
	}

	Term on(const Term&, const Fun& n) const {
		auto [names, body] = under_binders({n.binder}, n.body);
		return fun(names[0], apply(n.binder_type), std::move(body));
	}

	Term on(const Term&, const Let& n) const {
		auto [names, body] = under_binders({n.binder}, n.body);
		return let(names[0], apply(n.binder_type), apply(n.bound), std::move(body));
	}

	Term on(const Term&, const Fix& n) const {
		auto [names, body] = under_binders({n.fn_name, n.binder}, n.body);
		return fix(names[0], names[1], apply(n.binder_type), apply(n.return_type), std::move(body));
	}

	Term on(const Term&, const Match& n) const {
		std::vector<Clause> clauses;
		clauses.reserve(n.clauses.size());
		for (const auto& clause : n.clauses) {
			auto [atoms, body] = under_binders(clause.atoms, clause.body);
			clauses.push_back(Clause{std::move(atoms), std::move(body)});
		}
		return match(apply(n.scrutinee), apply(n.return_type), std::move(clauses));
	}

	// Substitutes into `body` under `binders`. Shadowing stops substitution;
	// binders that would capture a free name of u are freshened first.
	std::pair<std::vector<Name>, Term> under_binders(std::vector<Name> binders, const Term& body) const {
		if (binds(binders, x_) || !occurs_free(x_, body)) {
			return {std::move(binders), body};
		}
		Term renamed = body;
		NameSet avoid = u_free_;
		avoid.merge(free_vars(body));
		avoid.insert(x_);
		avoid.insert(binders.begin(), binders.end());
		for (std::size_t i = 0; i < binders.size(); ++i) {
			const Name original = binders[i];
			if (!u_free_.contains(original)) {
				continue;
			}
			Name replacement = fresh_name(original, avoid);
			avoid.insert(replacement);
			// Only the last binder of a given name is visible in the body.
			const bool visible = std::find(binders.begin() + static_cast<std::ptrdiff_t>(i) + 1, binders.end(),
									 original) == binders.end();
			if (visible) {
				renamed = substitute(renamed, original, var(replacement));
			}
			binders[i] = std::move(replacement);
		}
		return {std::move(binders), apply(renamed)};
	}

	const Name& x_;
	const Term& u_;
	NameSet u_free_;
};

bool alpha_eq_under(const Term& a, const Term& b, Renaming& ren);

bool alpha_eq_binders(std::span<const Name> left, std::span<const Name> right, const Term& a, const Term& b,
	Renaming& ren) {
	if (left.size() != right.size()) {
		return false;
	}
	for (std::size_t i = 0; i < left.size(); ++i) {
		ren.push(left[i], right[i]);
	}
	const bool result = alpha_eq_under(a, b, ren);
	for (std::size_t i = 0; i < left.size(); ++i) {
		ren.pop();
	}
	return result;
}

bool alpha_eq_under(const Term& a, const Term& b, Renaming& ren) {
	const auto& lhs = a.node().value;
	const auto& rhs = b.node().value;
	if (lhs.index() != rhs.index()) {
		return false;
	}
	return std::visit(
		[&](const auto& l) -> bool {
			using T = std::decay_t<decltype(l)>;
			const auto& r = std::get<T>(rhs);
			if constexpr (std::is_same_v<T, Sort>) {
				return l.kind == r.kind;
			} else if constexpr (std::is_same_v<T, Var>) {
				return ren.relates(l.name, r.name);
			} else if constexpr (std::is_same_v<T, App>) {
				return alpha_eq_under(l.fn, r.fn, ren) && alpha_eq_under(l.arg, r.arg, ren);
			} else if constexpr (std::is_same_v<T, Forall> || std::is_same_v<T, Fun>) {
				return alpha_eq_under(l.binder_type, r.binder_type, ren) &&
					alpha_eq_binders({&l.binder, 1}, {&r.binder, 1}, l.body, r.body, ren);
			} else if constexpr (std::is_same_v<T, Let>) {
				return alpha_eq_under(l.binder_type, r.binder_type, ren) && alpha_eq_under(l.bound, r.bound, ren) &&
					alpha_eq_binders({&l.binder, 1}, {&r.binder, 1}, l.body, r.body, ren);
			} else if constexpr (std::is_same_v<T, Fix>) {
				return alpha_eq_under(l.binder_type, r.binder_type, ren) &&
					alpha_eq_under(l.return_type, r.return_type, ren) &&
					alpha_eq_binders(std::array{l.fn_name, l.binder}, std::array{r.fn_name, r.binder}, l.body, r.body, ren);
			} else {
				if (!alpha_eq_under(l.scrutinee, r.scrutinee, ren) ||
					!alpha_eq_under(l.return_type, r.return_type, ren) || l.clauses.size() != r.clauses.size()) {
					return false;
				}
				for (std::size_t i = 0; i < l.clauses.size(); ++i) {
					if (!alpha_eq_binders(l.clauses[i].atoms, r.clauses[i].atoms, l.clauses[i].body,
							r.clauses[i].body, ren)) {
						return false;
					}
				}
				return true;
			}
		},
		lhs);
}

} // namespace

NameSet free_vars(const Term& t) {
	NameSet out;
	FreeVarCollector(out).visit(t);
	return out;
}

bool occurs_free(const Name& x, const Term& t) {
	return std::visit(
		[&x](const auto& n) -> bool {
			using T = std::decay_t<decltype(n)>;
			if constexpr (std::is_same_v<T, Sort>) {
				return false;
			} else if constexpr (std::is_same_v<T, Var>) {
				return n.name == x;
			} else if constexpr (std::is_same_v<T, App>) {
				return occurs_free(x, n.fn) || occurs_free(x, n.arg);
			} else if constexpr (std::is_same_v<T, Forall> || std::is_same_v<T, Fun>) {
				return occurs_free(x, n.binder_type) || (n.binder != x && occurs_free(x, n.body));
			} else if constexpr (std::is_same_v<T, Let>) {
				return occurs_free(x, n.binder_type) || occurs_free(x, n.bound) ||
					(n.binder != x && occurs_free(x, n.body));
			} else if constexpr (std::is_same_v<T, Fix>) {
				return occurs_free(x, n.binder_type) || occurs_free(x, n.return_type) ||
					(n.fn_name != x && n.binder != x && occurs_free(x, n.body));
			} else {
				if (occurs_free(x, n.scrutinee) || occurs_free(x, n.return_type)) {
					return true;
				}
				return std::any_of(n.clauses.begin(), n.clauses.end(),
					[&x](const Clause& c) { return !binds(c.atoms, x) && occurs_free(x, c.body); });
			}
		},
		t.node().value);
}

NameSet all_names(const Term& t) {
	NameSet out;
	collect_names(t, out);
	return out;
}

Name fresh_name(const Name& base, const NameSet& avoid) {
	std::string candidate = base.text();
	while (avoid.contains(Name(candidate))) {
		candidate += '\'';
	}
	return Name(std::move(candidate));
}

Term substitute(const Term& t, const Name& x, const Term& u) {
	return Substitution(x, u).apply(t);
}

bool alpha_eq(const Term& a, const Term& b) {
	if (a.same_object(b)) {
		return true;
	}
	Renaming ren;
	return alpha_eq_under(a, b, ren);
}

bool prod_body(const Term& t, const Term& target) {
	const Term* current = &t;
	while (const auto* product = current->as<Forall>()) {
		if (product->body == target) {
			return true;
		}
		current = &product->body;
	}
	return false;
}

} // namespace goalclone
