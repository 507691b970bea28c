#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "goalclone/proof_forest.hpp"

namespace goalclone {

/// A trace document that does not follow the trace schema.
class TraceFormatError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class MissingDir : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Trace file extension, `<name>.trace.json`.
inline constexpr std::string_view trace_suffix = ".trace.json";

/**
	Schema of one theorem trace:

	    {"file": string, "theorem": string, "coq_version": string,
	     "initial_goals": [Goal],
	     "steps": [{"tactic": string, "goals_after": [Goal]}]}

	    Goal = {"hypotheses": [{"names": [string], "type": string}],
	            "conclusion": string}

	A trace file holds either one such object or an array of them.
*/
TheoremTrace trace_from_json(const nlohmann::json& doc);
nlohmann::ordered_json trace_to_json(const TheoremTrace& trace);

/// Whole file contents, byte for byte. Throws std::runtime_error.
std::string read_text_file(const std::filesystem::path& path);

/// Parses the text of a trace file. Throws TraceFormatError.
std::vector<TheoremTrace> traces_from_text(std::string_view text);

void write_trace_file(const std::filesystem::path& path, const std::vector<TheoremTrace>& traces);

/// Trace files below `dir`, sorted by their path relative to `dir`.
/// Throws MissingDir.
std::vector<std::filesystem::path> list_trace_files(const std::filesystem::path& dir);

struct LoadedTraces {
	std::vector<TheoremTrace> traces;
	std::vector<std::string> diagnostics;
};

/// Every schema-valid trace below `dir`, in file order. Invalid files are
/// skipped with a diagnostic. Throws MissingDir.
LoadedTraces load_traces(const std::filesystem::path& dir);

} // namespace goalclone
