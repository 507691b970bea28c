#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "goalclone/term.hpp"

namespace goalclone {

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

	/// Byte offset of the offending token in the input.
	std::size_t offset() const noexcept { return offset_; }
	/// Sorted, de-duplicated set of token descriptions that would have been accepted.
	const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
	std::size_t offset_;
	std::vector<std::string> expected_;
};

/**
	Parses notation-free (`Set Printing All`) Gallina text.

	Accepted forms:
	  - sorts `Set`, `Prop`, `Type` (a `Type@{...}` universe annotation is dropped);
	  - names, application by juxtaposition (left-associative);
	  - `forall (x y : T) (z : U), B` and `forall x y : T, B`;
	  - `fun (x : T) => B` and `fun x : T => B`;
	  - `let x : T := E in B`;
	  - `fix f (x : T) : R := B`;
	  - `match E return R with | c x1 .. xn => B | ... end`.

	Binders extend as far right as possible. Throws ParseError on anything
	else, including unannotated binders.
*/
Term parse(std::string_view input);

/// Number of parse() calls made by this process so far.
std::uint64_t parse_count() noexcept;

} // namespace goalclone
