#include "goalclone/term.hpp"

#include <array>
#include <stdexcept>

namespace goalclone {

namespace {

bool is_ident_start(char c) {
	return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_ident_cont(char c) {
	return is_ident_start(c) || (c >= '0' && c <= '9') || c == '\'' || c == '.';
}

constexpr std::array<std::string_view, 12> reserved_words = {
	"forall", "fun", "let", "in", "fix", "match", "return", "with", "end", "Set", "Prop", "Type",
};

} // namespace

Name::Name(std::string text) : text_(std::move(text)) {
	if (!is_valid(text_)) {
		throw std::invalid_argument("invalid name: '" + text_ + "'");
	}
}

bool Name::is_reserved(std::string_view text) {
	for (auto word : reserved_words) {
		if (word == text) {
			return true;
		}
	}
	return false;
}

bool Name::is_valid(std::string_view text) {
	std::size_t i = 0;
	if (i < text.size() && (text[i] == '?' || text[i] == '@')) {
		++i;
	}
	if (i >= text.size() || !is_ident_start(text[i])) {
		return false;
	}
	for (++i; i < text.size(); ++i) {
		if (!is_ident_cont(text[i])) {
			return false;
		}
	}
	return !is_reserved(text);
}

std::string_view sort_keyword(SortKind kind) {
	switch (kind) {
	case SortKind::Set:
		return "Set";
	case SortKind::Prop:
		return "Prop";
	case SortKind::Type:
		return "Type";
	}
	throw std::logic_error("unhandled sort kind");
}

bool operator==(const Term& a, const Term& b) {
	if (a.same_object(b)) {
		return true;
	}
	const auto& lhs = a.node().value;
	const auto& rhs = b.node().value;
	if (lhs.index() != rhs.index()) {
		return false;
	}
	return std::visit(
		[&rhs](const auto& l) -> bool {
			using T = std::decay_t<decltype(l)>;
			const auto& r = std::get<T>(rhs);
			if constexpr (std::is_same_v<T, Sort>) {
				return l.kind == r.kind;
			} else if constexpr (std::is_same_v<T, Var>) {
				return l.name == r.name;
			} else if constexpr (std::is_same_v<T, App>) {
				return l.fn == r.fn && l.arg == r.arg;
			} else if constexpr (std::is_same_v<T, Forall> || std::is_same_v<T, Fun>) {
				return l.binder == r.binder && l.binder_type == r.binder_type && l.body == r.body;
			} else if constexpr (std::is_same_v<T, Let>) {
				return l.binder == r.binder && l.binder_type == r.binder_type && l.bound == r.bound &&
					l.body == r.body;
			} else if constexpr (std::is_same_v<T, Fix>) {
				return l.fn_name == r.fn_name && l.binder == r.binder && l.binder_type == r.binder_type &&
					l.return_type == r.return_type && l.body == r.body;
			} else {
				static_assert(std::is_same_v<T, Match>);
				if (!(l.scrutinee == r.scrutinee && l.return_type == r.return_type) ||
					l.clauses.size() != r.clauses.size()) {
					return false;
				}
				for (std::size_t i = 0; i < l.clauses.size(); ++i) {
					if (l.clauses[i].atoms != r.clauses[i].atoms || !(l.clauses[i].body == r.clauses[i].body)) {
						return false;
					}
				}
				return true;
			}
		},
		lhs);
}

Term sort(SortKind kind) {
	return make_term(Sort{kind});
}

Term var(Name name) {
	return make_term(Var{std::move(name)});
}

Term var(std::string name) {
	return var(Name(std::move(name)));
}

Term app(Term fn, Term arg) {
	return make_term(App{std::move(fn), std::move(arg)});
}

Term app(Term head, std::initializer_list<Term> args) {
	for (const auto& arg : args) {
		head = app(std::move(head), arg);
	}
	return head;
}

Term forall(Name binder, Term binder_type, Term body) {
	return make_term(Forall{std::move(binder), std::move(binder_type), std::move(body)});
}

Term fun(Name binder, Term binder_type, Term body) {
	return make_term(Fun{std::move(binder), std::move(binder_type), std::move(body)});
}

Term let(Name binder, Term binder_type, Term bound, Term body) {
	return make_term(Let{std::move(binder), std::move(binder_type), std::move(bound), std::move(body)});
}

Term fix(Name fn_name, Name binder, Term binder_type, Term return_type, Term body) {
	return make_term(Fix{std::move(fn_name), std::move(binder), std::move(binder_type),
		std::move(return_type), std::move(body)});
}

Term match(Term scrutinee, Term return_type, std::vector<Clause> clauses) {
	for (const auto& clause : clauses) {
		if (clause.atoms.empty()) {
			throw std::invalid_argument("match clause needs at least one atom");
		}
	}
	return make_term(Match{std::move(scrutinee), std::move(return_type), std::move(clauses)});
}

namespace {

void print_to(const Term& t, std::string& out) {
	std::visit(
		[&out](const auto& n) {
			using T = std::decay_t<decltype(n)>;
			if constexpr (std::is_same_v<T, Sort>) {
				out += sort_keyword(n.kind);
			} else if constexpr (std::is_same_v<T, Var>) {
				out += n.name.text();
			} else if constexpr (std::is_same_v<T, App>) {
				out += '(';
				print_to(n.fn, out);
				out += ' ';
				print_to(n.arg, out);
				out += ')';
			} else if constexpr (std::is_same_v<T, Forall>) {
				out += "(forall (";
				out += n.binder.text();
				out += " : ";
				print_to(n.binder_type, out);
				out += "), ";
				print_to(n.body, out);
				out += ')';
			} else if constexpr (std::is_same_v<T, Fun>) {
				out += "(fun (";
				out += n.binder.text();
				out += " : ";
				print_to(n.binder_type, out);
				out += ") => ";
				print_to(n.body, out);
				out += ')';
			} else if constexpr (std::is_same_v<T, Let>) {
				out += "(let ";
				out += n.binder.text();
				out += " : ";
				print_to(n.binder_type, out);
				out += " := ";
				print_to(n.bound, out);
				out += " in ";
				print_to(n.body, out);
				out += ')';
			} else if constexpr (std::is_same_v<T, Fix>) {
				out += "(fix ";
				out += n.fn_name.text();
				out += " (";
				out += n.binder.text();
				out += " : ";
				print_to(n.binder_type, out);
				out += ") : ";
				print_to(n.return_type, out);
				out += " := ";
				print_to(n.body, out);
				out += ')';
			} else {
				out += "(match ";
				print_to(n.scrutinee, out);
				out += " return ";
				print_to(n.return_type, out);
				out += " with";
				for (const auto& clause : n.clauses) {
					out += " |";
					for (const auto& atom : clause.atoms) {
						out += ' ';
						out += atom.text();
					}
					out += " => ";
					print_to(clause.body, out);
				}
				out += " end)";
			}
		},
		t.node().value);
}

} // namespace

std::string print(const Term& t) {
	std::string out;
	print_to(t, out);
	return out;
}

} // namespace goalclone
