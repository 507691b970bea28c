#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "goalclone/proof_forest.hpp"

namespace goalclone::testing {

/// Goal from (names, type) hypothesis lines and a conclusion, all as text.
GoalState goal(std::vector<std::pair<std::string, std::string>> hyps, std::string conclusion);

TheoremTrace theorem(std::string file, std::string name, std::vector<GoalState> initial,
	std::vector<TraceStep> steps);

/// [A, B] -> [C, D, B], then C, D and B closed one by one.
TheoremTrace split_example();

/// root --t0--> two leaves --t1, t2--> closed.
TheoremTrace fig1_example(const std::string& file = "Fig1.v", const std::string& theorem = "fig1");

/// A clone pair planted in the corpus, by (file, theorem, node id) of both
/// members.
struct PlantedPair {
	std::string label;
	std::string left_theorem;
	std::string right_theorem;
	NodeId left_node;
	NodeId right_node;
	/// Smaller of the two proof lengths.
	std::size_t min_proof;
};

/// Trace files of the planted corpus: relative path -> theorems.
std::vector<std::pair<std::string, std::vector<TheoremTrace>>> planted_corpus();

std::vector<PlantedPair> planted_pairs();

/// Number of records flatten produces for the corpus, and how many of them
/// dedupe removes.
inline constexpr std::size_t corpus_records = 34;
inline constexpr std::size_t corpus_nested = 2;

/// Writes the corpus below `dir` (created if needed).
void write_corpus(const std::filesystem::path& dir);

/// Fresh empty directory under the system temp dir; removed on destruction.
class TempDir {
public:
	explicit TempDir(const std::string& tag);
	~TempDir();
	TempDir(const TempDir&) = delete;
	TempDir& operator=(const TempDir&) = delete;
	const std::filesystem::path& path() const noexcept { return path_; }

private:
	std::filesystem::path path_;
};

} // namespace goalclone::testing
