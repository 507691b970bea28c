#include "goalclone/parser.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

namespace goalclone {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
	: std::runtime_error([&] {
		  std::string msg = "parse error at offset " + std::to_string(offset) + ": " + detail;
		  if (!expected.empty()) {
			  msg += " (expected";
			  for (std::size_t i = 0; i < expected.size(); ++i) {
				  msg += i == 0 ? " " : ", ";
				  msg += expected[i];
			  }
			  msg += ")";
		  }
		  return msg;
	  }()),
	  offset_(offset), expected_(std::move(expected)) {
	std::sort(expected_.begin(), expected_.end());
	expected_.erase(std::unique(expected_.begin(), expected_.end()), expected_.end());
}

namespace {

std::atomic<std::uint64_t> parse_calls{0};

constexpr int max_depth = 512;

enum class Tok {
	Ident,
	Forall,
	Fun,
	Let,
	In,
	Fix,
	Match,
	Return,
	With,
	End,
	Set,
	Prop,
	Type,
	LParen,
	RParen,
	Colon,
	ColonEq,
	DArrow,
	Comma,
	Bar,
	Eof,
};

struct Token {
	Tok kind;
	std::size_t offset;
	std::string_view text;
};

std::string describe(Tok kind) {
	switch (kind) {
	case Tok::Ident:
		return "name";
	case Tok::Forall:
		return "'forall'";
	case Tok::Fun:
		return "'fun'";
	case Tok::Let:
		return "'let'";
	case Tok::In:
		return "'in'";
	case Tok::Fix:
		return "'fix'";
	case Tok::Match:
		return "'match'";
	case Tok::Return:
		return "'return'";
	case Tok::With:
		return "'with'";
	case Tok::End:
		return "'end'";
	case Tok::Set:
		return "'Set'";
	case Tok::Prop:
		return "'Prop'";
	case Tok::Type:
		return "'Type'";
	case Tok::LParen:
		return "'('";
	case Tok::RParen:
		return "')'";
	case Tok::Colon:
		return "':'";
	case Tok::ColonEq:
		return "':='";
	case Tok::DArrow:
		return "'=>'";
	case Tok::Comma:
		return "','";
	case Tok::Bar:
		return "'|'";
	case Tok::Eof:
		return "end of input";
	}
	return "?";
}

bool is_space(char c) {
	return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_ident_start(char c) {
	return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_ident_cont(char c) {
	return is_ident_start(c) || (c >= '0' && c <= '9') || c == '\'' || c == '.';
}

Tok keyword_kind(std::string_view word) {
	static constexpr std::pair<std::string_view, Tok> keywords[] = {
		{"forall", Tok::Forall}, {"fun", Tok::Fun},	  {"let", Tok::Let},	   {"in", Tok::In},
		{"fix", Tok::Fix},		 {"match", Tok::Match}, {"return", Tok::Return}, {"with", Tok::With},
		{"end", Tok::End},		 {"Set", Tok::Set},	  {"Prop", Tok::Prop},	   {"Type", Tok::Type},
	};
	for (const auto& [text, kind] : keywords) {
		if (text == word) {
			return kind;
		}
	}
	return Tok::Ident;
}

std::vector<Token> tokenize(std::string_view input) {
	std::vector<Token> tokens;
	std::size_t pos = 0;
	while (true) {
		while (pos < input.size() && is_space(input[pos])) {
			++pos;
		}
		if (pos >= input.size()) {
			tokens.push_back({Tok::Eof, pos, {}});
			return tokens;
		}
		const std::size_t start = pos;
		const char c = input[pos];
		auto single = [&](Tok kind, std::size_t len) {
			tokens.push_back({kind, start, input.substr(start, len)});
			pos += len;
		};
		if (is_ident_start(c) || ((c == '?' || c == '@') && pos + 1 < input.size() && is_ident_start(input[pos + 1]))) {
			++pos;
			while (pos < input.size() && is_ident_cont(input[pos])) {
				++pos;
			}
			auto word = input.substr(start, pos - start);
			Tok kind = keyword_kind(word);
			tokens.push_back({kind, start, word});
			if (kind == Tok::Type && input.substr(pos, 2) == "@{") {
				++pos;
				int level = 0;
				do {
					if (pos >= input.size()) {
						throw ParseError(pos, {"'}'"}, "unterminated universe annotation");
					}
					if (input[pos] == '{') {
						++level;
					} else if (input[pos] == '}') {
						--level;
					}
					++pos;
				} while (level > 0);
			}
			continue;
		}
		switch (c) {
		case '(':
			single(Tok::LParen, 1);
			continue;
		case ')':
			single(Tok::RParen, 1);
			continue;
		case ',':
			single(Tok::Comma, 1);
			continue;
		case '|':
			single(Tok::Bar, 1);
			continue;
		case ':':
			if (input.substr(pos, 2) == ":=") {
				single(Tok::ColonEq, 2);
			} else {
				single(Tok::Colon, 1);
			}
			continue;
		case '=':
			if (input.substr(pos, 2) == "=>") {
				single(Tok::DArrow, 2);
				continue;
			}
			throw ParseError(pos, {"'=>'"}, "stray '='");
		default:
			throw ParseError(pos, {}, "unexpected character");
		}
	}
}

class Parser {
public:
	explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

	Term parse_all() {
		Term t = parse_term();
		expect(Tok::Eof);
		return t;
	}

private:
	struct DepthGuard {
		explicit DepthGuard(Parser& p) : parser(p) {
			if (++parser.depth_ > max_depth) {
				throw ParseError(parser.peek().offset, {}, "term nesting too deep");
			}
		}
		~DepthGuard() { --parser.depth_; }
		Parser& parser;
	};

	struct Binder {
		Name name;
		Term type;
	};

	const Token& peek() const { return tokens_[pos_]; }

	bool at(Tok kind) const { return peek().kind == kind; }

	const Token& advance() {
		const Token& t = tokens_[pos_];
		if (t.kind != Tok::Eof) {
			++pos_;
		}
		return t;
	}

	[[noreturn]] void fail(std::vector<Tok> expected, const std::string& detail) const {
		std::vector<std::string> names;
		names.reserve(expected.size());
		for (Tok k : expected) {
			names.push_back(describe(k));
		}
		throw ParseError(peek().offset, std::move(names), detail);
	}

	const Token& expect(Tok kind) {
		if (!at(kind)) {
			fail({kind}, "unexpected " + describe(peek().kind));
		}
		return advance();
	}

	Name expect_name() {
		return Name(std::string(expect(Tok::Ident).text));
	}

	static bool starts_atom(Tok kind) {
		return kind == Tok::Ident || kind == Tok::Set || kind == Tok::Prop || kind == Tok::Type ||
			kind == Tok::LParen || kind == Tok::Match;
	}

	Term parse_term() {
		DepthGuard guard(*this);
		switch (peek().kind) {
		case Tok::Forall: {
			advance();
			auto binders = parse_binders();
			expect(Tok::Comma);
			Term body = parse_term();
			for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
				body = forall(it->name, it->type, std::move(body));
			}
			return body;
		}
		case Tok::Fun: {
			advance();
			auto binders = parse_binders();
			expect(Tok::DArrow);
			Term body = parse_term();
			for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
				body = fun(it->name, it->type, std::move(body));
			}
			return body;
		}
		case Tok::Let: {
			advance();
			Name name = expect_name();
			expect(Tok::Colon);
			Term type = parse_term();
			expect(Tok::ColonEq);
			Term bound = parse_term();
			expect(Tok::In);
			Term body = parse_term();
			return let(std::move(name), std::move(type), std::move(bound), std::move(body));
		}
		case Tok::Fix: {
			advance();
			Name fn_name = expect_name();
			expect(Tok::LParen);
			Name binder = expect_name();
			expect(Tok::Colon);
			Term binder_type = parse_term();
			expect(Tok::RParen);
			expect(Tok::Colon);
			Term return_type = parse_term();
			expect(Tok::ColonEq);
			Term body = parse_term();
			return fix(std::move(fn_name), std::move(binder), std::move(binder_type), std::move(return_type),
				std::move(body));
		}
		default:
			return parse_application();
		}
	}

	std::vector<Binder> parse_binders() {
		std::vector<Binder> binders;
		if (at(Tok::LParen)) {
			while (at(Tok::LParen)) {
				advance();
				auto names = parse_binder_names();
				expect(Tok::Colon);
				Term type = parse_term();
				expect(Tok::RParen);
				for (auto& n : names) {
					binders.push_back({std::move(n), type});
				}
			}
			return binders;
		}
		if (!at(Tok::Ident)) {
			fail({Tok::LParen, Tok::Ident}, "binder expected");
		}
		const std::size_t group_start = peek().offset;
		auto names = parse_binder_names();
		if (!at(Tok::Colon)) {
			throw ParseError(group_start, {describe(Tok::Colon), describe(Tok::LParen)},
				"binder '" + names.front().text() + "' has no type annotation");
		}
		advance();
		Term type = parse_term();
		for (auto& n : names) {
			binders.push_back({std::move(n), type});
		}
		return binders;
	}

	std::vector<Name> parse_binder_names() {
		std::vector<Name> names;
		names.push_back(expect_name());
		while (at(Tok::Ident)) {
			names.push_back(expect_name());
		}
		return names;
	}

	Term parse_application() {
		Term head = parse_atom();
		while (starts_atom(peek().kind)) {
			head = app(std::move(head), parse_atom());
		}
		return head;
	}

	Term parse_atom() {
		DepthGuard guard(*this);
		switch (peek().kind) {
		case Tok::Ident:
			return var(expect_name());
		case Tok::Set:
			advance();
			return sort(SortKind::Set);
		case Tok::Prop:
			advance();
			return sort(SortKind::Prop);
		case Tok::Type:
			advance();
			return sort(SortKind::Type);
		case Tok::LParen: {
			advance();
			Term inner = parse_term();
			expect(Tok::RParen);
			return inner;
		}
		case Tok::Match:
			return parse_match();
		default:
			fail({Tok::Ident, Tok::Set, Tok::Prop, Tok::Type, Tok::LParen, Tok::Match, Tok::Forall, Tok::Fun,
					 Tok::Let, Tok::Fix},
				"term expected, found " + describe(peek().kind));
		}
	}

	Term parse_match() {
		expect(Tok::Match);
		Term scrutinee = parse_term();
		expect(Tok::Return);
		Term return_type = parse_term();
		expect(Tok::With);
		std::vector<Clause> clauses;
		if (!at(Tok::End)) {
			if (at(Tok::Bar)) {
				advance();
			}
			clauses.push_back(parse_clause());
			while (at(Tok::Bar)) {
				advance();
				clauses.push_back(parse_clause());
			}
		}
		if (!at(Tok::End)) {
			fail({Tok::End, Tok::Bar}, "unterminated match");
		}
		advance();
		return match(std::move(scrutinee), std::move(return_type), std::move(clauses));
	}

	Clause parse_clause() {
		std::vector<Name> atoms;
		atoms.push_back(expect_name());
		while (at(Tok::Ident)) {
			atoms.push_back(expect_name());
		}
		expect(Tok::DArrow);
		Term body = parse_term();
		return Clause{std::move(atoms), std::move(body)};
	}

	std::vector<Token> tokens_;
	std::size_t pos_ = 0;
	int depth_ = 0;
};

} // namespace

Term parse(std::string_view input) {
	parse_calls.fetch_add(1, std::memory_order_relaxed);
	return Parser(input).parse_all();
}

std::uint64_t parse_count() noexcept {
	return parse_calls.load(std::memory_order_relaxed);
}

} // namespace goalclone
