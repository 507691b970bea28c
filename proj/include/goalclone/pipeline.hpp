#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "goalclone/report.hpp"

namespace goalclone {

enum class ReportFormat { Text, Json };

struct PipelineOptions {
	std::filesystem::path traces;
	std::size_t min_proof_size = 5;
	ReportFormat format = ReportFormat::Text;
	/// Standard output when empty.
	std::optional<std::filesystem::path> out;
	/// Caching is disabled when empty.
	std::optional<std::filesystem::path> cache_dir = std::filesystem::path(".clone-cache");
	bool skip_same_theorem = false;
	/// Defaults to the name of the trace directory.
	std::optional<std::string> project;
};

/// Counters about how a report was produced. Not part of the report, which
/// is identical whatever the cache state.
struct RunStats {
	std::size_t cache_hits = 0;
	std::size_t cache_misses = 0;
	std::uint64_t parse_calls = 0;
	std::vector<std::string> warnings;
};

/// Load, flatten (through the cache), dedupe and find clones.
/// Throws MissingDir when the trace directory does not exist.
Report analyze(const PipelineOptions& options, RunStats& stats);

/// Command-line entry point; `args` excludes the program name.
/// Returns 0 on success, 1 on a fatal input or output error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunStats* stats = nullptr);

} // namespace goalclone
