#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goalclone/clones.hpp"

namespace goalclone {

/// Lowercase hex SHA-256 of `bytes`.
std::string content_hash(std::string_view bytes);

/// Flattened records of one trace file.
struct CachedTraceFile {
	std::size_t theorems = 0;
	std::vector<GoalRecord> records;
	std::vector<std::string> diagnostics;
};

/**
	Per-trace-file cache of flatten results, keyed by the content hash of the
	trace file. One JSON document per source file; entries whose hash or
	format version does not match are treated as absent. Entries are written
	to a temporary file and renamed into place.
*/
class TraceCache {
public:
	explicit TraceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

	const std::filesystem::path& dir() const noexcept { return dir_; }

	std::optional<CachedTraceFile> lookup(const std::string& source, const std::string& hash) const;

	/// Throws std::runtime_error when the entry cannot be written.
	void store(const std::string& source, const std::string& hash, const CachedTraceFile& entry) const;

	std::filesystem::path entry_path(const std::string& source) const;

private:
	std::filesystem::path dir_;
};

} // namespace goalclone
