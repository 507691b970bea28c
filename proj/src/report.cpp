#include "goalclone/report.hpp"

#include "goalclone/parser.hpp"

namespace goalclone {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json record_to_json(const GoalRecord& record) {
	return {
		{"file", record.file},
		{"theorem", record.theorem},
		{"node", record.node},
		{"goal", print(record.goal)},
		{"generalized", print(record.generalized)},
		{"proof", record.proof},
	};
}

GoalRecord record_from_json(const json& doc) {
	return GoalRecord{
		parse(doc.at("goal").get<std::string>()),
		parse(doc.at("generalized").get<std::string>()),
		doc.at("proof").get<std::vector<std::string>>(),
		doc.at("file").get<std::string>(),
		doc.at("theorem").get<std::string>(),
		doc.at("node").get<NodeId>(),
	};
}

ordered_json report_to_json(const Report& report) {
	ordered_json pairs = ordered_json::array();
	for (const auto& p : report.pairs) {
		pairs.push_back({{"left", record_to_json(p.left)}, {"right", record_to_json(p.right)}});
	}
	return {
		{"project", report.project},
		{"threshold", report.threshold},
		{"stats",
			{
				{"files", report.stats.files},
				{"theorems", report.stats.theorems},
				{"goals", report.stats.goals},
				{"deduped_goals", report.stats.deduped_goals},
				{"pairs", report.stats.pairs},
			}},
		{"pairs", std::move(pairs)},
		{"diagnostics", report.diagnostics},
	};
}

std::string render_json(const Report& report) {
	return report_to_json(report).dump(2) + "\n";
}

namespace {

void render_member(std::string& out, int which, const GoalRecord& r) {
	const std::string n = std::to_string(which);
	out += "(*Goal " + n + ":*) " + print(r.goal) + "\n";
	out += "(*Generalized " + n + ":*) " + print(r.generalized) + "\n";
	out += "(*From " + n + ":*) " + r.file + " :: " + r.theorem + " (node " + std::to_string(r.node) + ")\n";
	out += "(*Proof " + n + ":*)\n";
	for (const auto& tactic : r.proof) {
		out += "  " + tactic + "\n";
	}
}

} // namespace

std::string render_text(const Report& report) {
	std::string out;
	out += "Goal clones in " + report.project + " (minimum proof size " + std::to_string(report.threshold) + ")\n";
	const auto& s = report.stats;
	out += "files: " + std::to_string(s.files) + ", theorems: " + std::to_string(s.theorems) +
		", goals: " + std::to_string(s.goals) + ", after dedupe: " + std::to_string(s.deduped_goals) +
		", clone pairs: " + std::to_string(s.pairs) + "\n";
	for (std::size_t i = 0; i < report.pairs.size(); ++i) {
		out += "\n== Clone " + std::to_string(i + 1) + " ==\n";
		render_member(out, 1, report.pairs[i].left);
		out += "\n";
		render_member(out, 2, report.pairs[i].right);
	}
	if (!report.diagnostics.empty()) {
		out += "\nDiagnostics:\n";
		for (const auto& d : report.diagnostics) {
			out += "  " + d + "\n";
		}
	}
	return out;
}

} // namespace goalclone
