#include "goalclone/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "goalclone/cache.hpp"
#include "goalclone/parser.hpp"
#include "goalclone/trace_io.hpp"

namespace goalclone {

namespace fs = std::filesystem;

namespace {

CachedTraceFile build_entry(const std::vector<TheoremTrace>& traces) {
	CachedTraceFile entry;
	entry.theorems = traces.size();
	for (const auto& trace : traces) {
		auto records = flatten_trace(trace, entry.diagnostics);
		entry.records.insert(entry.records.end(), std::make_move_iterator(records.begin()),
			std::make_move_iterator(records.end()));
	}
	return entry;
}

std::string default_project(const fs::path& traces) {
	fs::path p = traces.lexically_normal();
	if (p.filename().empty()) {
		p = p.parent_path();
	}
	std::string name = p.filename().string();
	if (name.empty() || name == ".") {
		std::error_code ec;
		name = fs::absolute(traces, ec).lexically_normal().filename().string();
	}
	return name;
}

} // namespace

Report analyze(const PipelineOptions& options, RunStats& stats) {
	const std::uint64_t parses_before = parse_count();
	const auto files = list_trace_files(options.traces);
	std::optional<TraceCache> cache;
	if (options.cache_dir) {
		cache.emplace(*options.cache_dir);
	}

	Report report;
	report.project = options.project.value_or(default_project(options.traces));
	report.threshold = options.min_proof_size;

	std::vector<GoalRecord> records;
	for (const auto& path : files) {
		const std::string source = path.lexically_relative(options.traces).generic_string();
		std::string bytes;
		try {
			bytes = read_text_file(path);
		} catch (const std::exception& e) {
			report.diagnostics.push_back(source + ": skipped: " + e.what());
			continue;
		}
		const std::string hash = content_hash(bytes);

		std::optional<CachedTraceFile> entry;
		if (cache) {
			entry = cache->lookup(source, hash);
		}
		if (entry) {
			++stats.cache_hits;
		} else {
			++stats.cache_misses;
			std::vector<TheoremTrace> traces;
			try {
				traces = traces_from_text(bytes);
			} catch (const std::exception& e) {
				report.diagnostics.push_back(source + ": skipped: " + e.what());
				continue;
			}
			entry = build_entry(traces);
			if (cache) {
				try {
					cache->store(source, hash, *entry);
				} catch (const std::exception& e) {
					stats.warnings.push_back(e.what());
				}
			}
		}

		++report.stats.files;
		report.stats.theorems += entry->theorems;
		report.diagnostics.insert(report.diagnostics.end(), entry->diagnostics.begin(), entry->diagnostics.end());
		records.insert(records.end(), std::make_move_iterator(entry->records.begin()),
			std::make_move_iterator(entry->records.end()));
	}

	std::stable_sort(records.begin(), records.end(), record_order);
	report.stats.goals = records.size();
	const auto kept = dedupe(records);
	report.stats.deduped_goals = kept.size();
	report.pairs = find_clones(kept, {options.min_proof_size, options.skip_same_theorem});
	report.stats.pairs = report.pairs.size();

	stats.parse_calls = parse_count() - parses_before;
	return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunStats* stats_out) {
	CLI::App app{"Report alpha-equivalent proof goals in prover traces", "goalclone"};
	PipelineOptions options;
	std::string traces;
	std::string format = "text";
	std::string out_path;
	std::string cache_dir = ".clone-cache";
	std::string project;
	app.add_option("--traces", traces, "Directory of *.trace.json files")->required();
	app.add_option("--min-proof-size", options.min_proof_size, "Minimum proof length of both clones")
		->check(CLI::PositiveNumber)
		->capture_default_str();
	app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
	app.add_option("--out", out_path, "Report file (default: standard output)");
	app.add_option("--cache-dir", cache_dir, "Cache directory for flattened traces")->capture_default_str();
	app.add_flag("--skip-same-theorem", options.skip_same_theorem, "Ignore pairs within one theorem");
	app.add_option("--project", project, "Project name in the report (default: trace directory name)");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? 0 : 1;
	}

	options.traces = traces;
	options.format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
	if (!out_path.empty()) {
		options.out = out_path;
	}
	options.cache_dir = cache_dir.empty() ? std::nullopt : std::optional<fs::path>(cache_dir);
	if (!project.empty()) {
		options.project = project;
	}

	RunStats stats;
	Report report;
	try {
		report = analyze(options, stats);
	} catch (const MissingDir& e) {
		err << "goalclone: error: " << e.what() << "\n";
		return 1;
	}
	for (const auto& w : stats.warnings) {
		err << "goalclone: warning: " << w << "\n";
	}

	const std::string rendered = options.format == ReportFormat::Json ? render_json(report) : render_text(report);
	if (options.out) {
		std::ofstream file(*options.out, std::ios::binary | std::ios::trunc);
		file << rendered;
		file.close();
		if (!file) {
			err << "goalclone: error: cannot write " << options.out->string() << "\n";
			return 1;
		}
	} else {
		out << rendered;
		out.flush();
	}

	err << "goalclone: " << report.stats.files << " trace files (" << stats.cache_hits << " cached, "
		<< stats.cache_misses << " rebuilt), " << report.stats.pairs << " clone pairs, " << stats.parse_calls
		<< " term parses\n";
	if (stats_out) {
		*stats_out = std::move(stats);
	}
	return 0;
}

} // namespace goalclone
