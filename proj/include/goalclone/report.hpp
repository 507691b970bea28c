#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "goalclone/clones.hpp"

namespace goalclone {

struct ReportStats {
	std::size_t files = 0;
	std::size_t theorems = 0;
	std::size_t goals = 0;
	std::size_t deduped_goals = 0;
	std::size_t pairs = 0;
};

struct Report {
	std::string project;
	std::size_t threshold = 5;
	std::vector<ClonePair> pairs;
	std::vector<std::string> diagnostics;
	ReportStats stats;
};

/// `{"file", "theorem", "node", "goal", "generalized", "proof"}` with terms
/// in canonical text.
nlohmann::ordered_json record_to_json(const GoalRecord& record);

/// Inverse of record_to_json. Throws on malformed documents or terms.
GoalRecord record_from_json(const nlohmann::json& doc);

nlohmann::ordered_json report_to_json(const Report& report);

/// Pretty-printed JSON document followed by a newline.
std::string render_json(const Report& report);

/// Human-readable listing with one Goal/Proof block per member of each pair.
std::string render_text(const Report& report);

} // namespace goalclone
