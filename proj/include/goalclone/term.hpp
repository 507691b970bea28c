#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace goalclone {

/// An identifier atom: `[?@]?[A-Za-z_][A-Za-z0-9_'.]*`, excluding the
/// reserved words of the term grammar. Qualified names (`Coq.Init.Nat.add`),
/// existential variables (`?x0`) and explicit-application heads (`@eq`) are
/// all single opaque atoms.
class Name {
public:
	/// Throws std::invalid_argument if `text` is not a valid atom.
	explicit Name(std::string text);

	static bool is_valid(std::string_view text);
	static bool is_reserved(std::string_view text);

	const std::string& text() const noexcept { return text_; }

	friend bool operator==(const Name&, const Name&) = default;
	friend auto operator<=>(const Name&, const Name&) = default;

private:
	std::string text_;
};

enum class SortKind { Set, Prop, Type };

std::string_view sort_keyword(SortKind kind);

struct TermNode;

/// Immutable, cheaply copyable handle to a term tree.
class Term {
public:
	const TermNode& node() const noexcept { return *node_; }

	template <typename T>
	const T* as() const noexcept;

	bool same_object(const Term& other) const noexcept { return node_ == other.node_; }

	/// Structural equality: same variants, byte-equal names, clause lists in order.
	friend bool operator==(const Term& a, const Term& b);

private:
	explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
	template <typename T>
	friend Term make_term(T value);

	std::shared_ptr<const TermNode> node_;
};

struct Sort {
	SortKind kind;
};

struct Var {
	Name name;
};

struct App {
	Term fn;
	Term arg;
};

struct Forall {
	Name binder;
	Term binder_type;
	Term body;
};

struct Fun {
	Name binder;
	Term binder_type;
	Term body;
};

struct Let {
	Name binder;
	Term binder_type;
	Term bound;
	Term body;
};

/// `fix fn_name (binder : binder_type) : return_type := body`. Both names
/// scope over `body` only.
struct Fix {
	Name fn_name;
	Name binder;
	Term binder_type;
	Term return_type;
	Term body;
};

/// `| c x1 .. xn => body`; `atoms` holds the constructor followed by the
/// pattern variables and is never empty. Every atom binds in `body`.
struct Clause {
	std::vector<Name> atoms;
	Term body;
};

struct Match {
	Term scrutinee;
	Term return_type;
	std::vector<Clause> clauses;
};

struct TermNode {
	std::variant<Sort, Var, App, Forall, Fun, Let, Fix, Match> value;
};

template <typename T>
const T* Term::as() const noexcept {
	return std::get_if<T>(&node_->value);
}

template <typename T>
Term make_term(T value) {
	return Term(std::make_shared<const TermNode>(TermNode{std::move(value)}));
}

Term sort(SortKind kind);
Term var(Name name);
Term var(std::string name);
Term app(Term fn, Term arg);
/// Left-nested application `head a1 a2 ...`.
Term app(Term head, std::initializer_list<Term> args);
Term forall(Name binder, Term binder_type, Term body);
Term fun(Name binder, Term binder_type, Term body);
Term let(Name binder, Term binder_type, Term bound, Term body);
Term fix(Name fn_name, Name binder, Term binder_type, Term return_type, Term body);
Term match(Term scrutinee, Term return_type, std::vector<Clause> clauses);

/// Canonical form: every compound term is parenthesized and tokens are
/// separated by single spaces, e.g. `((f x) y)`,
/// `(forall (x : nat), (P x))`. `parse(print(t)) == t` for every term.
std::string print(const Term& t);

} // namespace goalclone

template <>
struct std::hash<goalclone::Name> {
	std::size_t operator()(const goalclone::Name& n) const noexcept {
		return std::hash<std::string>{}(n.text());
	}
};
