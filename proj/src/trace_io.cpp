#include "goalclone/trace_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace goalclone {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
	throw TraceFormatError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
	auto it = obj.find(key);
	if (it == obj.end()) {
		schema_error(where, std::string("missing field '") + key + "'");
	}
	return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
	const json& v = field(obj, key, where);
	if (!v.is_string()) {
		schema_error(where + "." + key, "expected a string");
	}
	return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
	const json& v = field(obj, key, where);
	if (!v.is_array()) {
		schema_error(where + "." + key, "expected an array");
	}
	return v;
}

GoalState goal_from_json(const json& doc, const std::string& where) {
	if (!doc.is_object()) {
		schema_error(where, "goal must be an object");
	}
	std::vector<RawHypothesis> hyps;
	const json& hyp_docs = array_field(doc, "hypotheses", where);
	for (std::size_t i = 0; i < hyp_docs.size(); ++i) {
		const std::string hwhere = where + ".hypotheses[" + std::to_string(i) + "]";
		const json& h = hyp_docs[i];
		if (!h.is_object()) {
			schema_error(hwhere, "hypothesis must be an object");
		}
		RawHypothesis raw;
		const json& names = array_field(h, "names", hwhere);
		if (names.empty()) {
			schema_error(hwhere + ".names", "needs at least one name");
		}
		for (const auto& n : names) {
			if (!n.is_string()) {
				schema_error(hwhere + ".names", "names must be strings");
			}
			raw.names.push_back(n.get<std::string>());
		}
		raw.type = string_field(h, "type", hwhere);
		hyps.push_back(std::move(raw));
	}
	return GoalState::from_text(std::move(hyps), string_field(doc, "conclusion", where));
}

std::vector<GoalState> goals_from_json(const json& docs, const std::string& where) {
	std::vector<GoalState> goals;
	goals.reserve(docs.size());
	for (std::size_t i = 0; i < docs.size(); ++i) {
		goals.push_back(goal_from_json(docs[i], where + "[" + std::to_string(i) + "]"));
	}
	return goals;
}

ordered_json goal_to_json(const GoalState& goal) {
	ordered_json hyps = ordered_json::array();
	for (const auto& h : goal.raw_hypotheses()) {
		hyps.push_back({{"names", h.names}, {"type", h.type}});
	}
	return {{"hypotheses", std::move(hyps)}, {"conclusion", goal.raw_conclusion()}};
}

} // namespace

std::string read_text_file(const fs::path& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw std::runtime_error("cannot open " + path.string());
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	if (in.bad()) {
		throw std::runtime_error("cannot read " + path.string());
	}
	return std::move(buf).str();
}

TheoremTrace trace_from_json(const json& doc) {
	const std::string where = "trace";
	if (!doc.is_object()) {
		schema_error(where, "expected an object");
	}
	TheoremTrace trace;
	trace.file = string_field(doc, "file", where);
	trace.theorem = string_field(doc, "theorem", where);
	trace.coq_version = string_field(doc, "coq_version", where);
	trace.initial_goals = goals_from_json(array_field(doc, "initial_goals", where), where + ".initial_goals");
	const json& steps = array_field(doc, "steps", where);
	for (std::size_t i = 0; i < steps.size(); ++i) {
		const std::string swhere = where + ".steps[" + std::to_string(i) + "]";
		const json& s = steps[i];
		if (!s.is_object()) {
			schema_error(swhere, "step must be an object");
		}
		TraceStep step;
		step.tactic = string_field(s, "tactic", swhere);
		if (step.tactic.empty()) {
			schema_error(swhere + ".tactic", "must not be empty");
		}
		step.goals_after = goals_from_json(array_field(s, "goals_after", swhere), swhere + ".goals_after");
		trace.steps.push_back(std::move(step));
	}
	return trace;
}

ordered_json trace_to_json(const TheoremTrace& trace) {
	ordered_json initial = ordered_json::array();
	for (const auto& g : trace.initial_goals) {
		initial.push_back(goal_to_json(g));
	}
	ordered_json steps = ordered_json::array();
	for (const auto& s : trace.steps) {
		ordered_json after = ordered_json::array();
		for (const auto& g : s.goals_after) {
			after.push_back(goal_to_json(g));
		}
		steps.push_back({{"tactic", s.tactic}, {"goals_after", std::move(after)}});
	}
	return {{"file", trace.file}, {"theorem", trace.theorem}, {"coq_version", trace.coq_version},
		{"initial_goals", std::move(initial)}, {"steps", std::move(steps)}};
}

std::vector<TheoremTrace> traces_from_text(std::string_view text) {
	json doc = json::parse(text, nullptr, false);
	if (doc.is_discarded()) {
		throw TraceFormatError("not valid JSON");
	}
	std::vector<TheoremTrace> traces;
	if (doc.is_array()) {
		for (const auto& entry : doc) {
			traces.push_back(trace_from_json(entry));
		}
	} else {
		traces.push_back(trace_from_json(doc));
	}
	return traces;
}

void write_trace_file(const fs::path& path, const std::vector<TheoremTrace>& traces) {
	ordered_json doc;
	if (traces.size() == 1) {
		doc = trace_to_json(traces.front());
	} else {
		doc = ordered_json::array();
		for (const auto& t : traces) {
			doc.push_back(trace_to_json(t));
		}
	}
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) {
		throw std::runtime_error("cannot write " + path.string());
	}
	out << doc.dump(2) << '\n';
}

std::vector<fs::path> list_trace_files(const fs::path& dir) {
	std::error_code ec;
	if (!fs::is_directory(dir, ec)) {
		throw MissingDir("trace directory not found: " + dir.string());
	}
	std::vector<fs::path> files;
	fs::recursive_directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
	if (ec) {
		throw MissingDir("cannot read trace directory " + dir.string() + ": " + ec.message());
	}
	for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
		if (ec) {
			break;
		}
		const std::string name = it->path().filename().string();
		if (it->is_regular_file(ec) && name.size() > trace_suffix.size() && name.ends_with(trace_suffix)) {
			files.push_back(it->path());
		}
	}
	std::sort(files.begin(), files.end(), [&dir](const fs::path& a, const fs::path& b) {
		return a.lexically_relative(dir).generic_string() < b.lexically_relative(dir).generic_string();
	});
	return files;
}

LoadedTraces load_traces(const fs::path& dir) {
	LoadedTraces result;
	for (const auto& path : list_trace_files(dir)) {
		const std::string rel = path.lexically_relative(dir).generic_string();
		try {
			auto traces = traces_from_text(read_text_file(path));
			for (auto& t : traces) {
				result.traces.push_back(std::move(t));
			}
		} catch (const std::exception& e) {
			result.diagnostics.push_back(rel + ": skipped: " + e.what());
		}
	}
	return result;
}

} // namespace goalclone
