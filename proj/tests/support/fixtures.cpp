#include "fixtures.hpp"

#include <atomic>
#include <random>
#include <sstream>

#include <unistd.h>

#include "goalclone/trace_io.hpp"

namespace goalclone::testing {

namespace fs = std::filesystem;

GoalState goal(std::vector<std::pair<std::string, std::string>> hyps, std::string conclusion) {
	std::vector<RawHypothesis> raw;
	for (auto& [names, type] : hyps) {
		RawHypothesis h;
		std::istringstream in(names);
		for (std::string n; in >> n;) {
			h.names.push_back(n);
		}
		h.type = std::move(type);
		raw.push_back(std::move(h));
	}
	return GoalState::from_text(std::move(raw), std::move(conclusion));
}

TheoremTrace theorem(std::string file, std::string name, std::vector<GoalState> initial,
	std::vector<TraceStep> steps) {
	return TheoremTrace{std::move(file), std::move(name), "8.16.1", std::move(initial), std::move(steps)};
}

TheoremTrace split_example() {
	const auto a = goal({}, "A");
	const auto b = goal({}, "B");
	const auto c = goal({}, "C");
	const auto d = goal({}, "D");
	return theorem("Split.v", "split_example", {a, b},
		{
			{"t.", {c, d, b}},
			{"tc.", {d, b}},
			{"td.", {b}},
			{"tb.", {}},
		});
}

TheoremTrace fig1_example(const std::string& file, const std::string& theorem_name) {
	const std::vector<std::pair<std::string, std::string>> ctx = {{"p", "P"}, {"q", "Q"}};
	const auto root = goal(ctx, "and P Q");
	const auto left = goal(ctx, "P");
	const auto right = goal(ctx, "Q");
	return theorem(file, theorem_name, {root},
		{
			{"split.", {left, right}},
			{"exact p.", {right}},
			{"exact q.", {}},
		});
}

namespace {

// Fig 3 shape: an exact duplicate conclusion in two theorems. The subgoals
// use theorem-specific constants so that only the roots pair up.
TheoremTrace cause_trace(const std::string& name, const std::string& tag) {
	const std::string cfg = "cfg_" + tag, tr = "tr_" + tag, st = "st_" + tag, msg = "msg_" + tag;
	const std::vector<std::pair<std::string, std::string>> ctx = {{"s1", "State"}};
	const auto root = goal(ctx, "and (step_star (init ?x) ?x0 ?x1) (In ?x2 (messages ?x1))");
	const auto a1 = goal(ctx, "step_star (init " + cfg + ") " + tr + " " + st);
	const auto a2 = goal(ctx, "In " + msg + " (messages " + st + ")");
	const auto a3 = goal(ctx, "In " + msg + " (app (messages " + st + ") (cons " + msg + " nil))");
	const auto a4 =
		goal(ctx, "or (In " + msg + " (messages " + st + ")) (In " + msg + " (cons " + msg + " nil))");
	const auto a5 = goal(ctx, "In " + msg + " (cons " + msg + " nil)");
	return theorem("theories/KVSA1g1Cause0bl.v", name, {root},
		{
			{"split_all.", {a1, a2}},
			{"eassumption.", {a2}},
			{"subv s1.", {a3}},
			{"apply in_app_iff.", {a4}},
			{"right.", {a5}},
			{"apply in_eq.", {}},
		});
}

// Same statement up to context names, proved two different ways.
TheoremTrace le_by_induction() {
	const auto root = goal({{"n m", "nat"}}, "le n (plus n m)");
	const auto b1 = goal({{"m", "nat"}}, "le O (plus O m)");
	const auto b2 = goal({{"n m", "nat"}, {"IHn", "le n (plus n m)"}}, "le (S n) (plus (S n) m)");
	const auto b1s = goal({{"m", "nat"}}, "le O m");
	const auto b2s = goal({{"n m", "nat"}, {"IHn", "le n (plus n m)"}}, "le (S n) (S (plus n m))");
	return theorem("theories/Le.v", "le_plus_l", {root},
		{
			{"induction n as [| n IHn].", {b1, b2}},
			{"simpl.", {b1s, b2}},
			{"apply le_0_n.", {b2}},
			{"simpl.", {b2s}},
			{"apply le_n_S; exact IHn.", {}},
		});
}

TheoremTrace le_by_commutation() {
	const std::vector<std::pair<std::string, std::string>> ab = {{"a", "nat"}, {"b", "nat"}};
	const auto root = goal(ab, "le a (plus a b)");
	const auto c1 = goal(ab, "le a (plus b a)");
	const auto c2 = goal({{"a", "nat"}}, "le a (plus O a)");
	const auto c3 = goal({{"a", "nat"}, {"b", "nat"}, {"IHb", "le a (plus b a)"}}, "le a (plus (S b) a)");
	const auto c4 = goal({{"a", "nat"}, {"b", "nat"}, {"IHb", "le a (plus b a)"}}, "le a (S (plus b a))");
	return theorem("theories/LeAlt.v", "le_plus_l'", {root},
		{
			{"rewrite Nat.add_comm.", {c1}},
			{"induction b as [| b IHb].", {c2, c3}},
			{"simpl; apply le_n.", {c3}},
			{"simpl.", {c4}},
			{"apply le_S; exact IHb.", {}},
		});
}

// Fig 4 shape: one statement keeps eH in the context, the other quantifies
// over it. Both generalize to the same product; the goals left after the
// intros generalize to its body and must be dropped by dedupe.
TheoremTrace subgroup_from_context() {
	const std::vector<std::pair<std::string, std::string>> base = {{"eH", "U"}};
	const std::vector<std::pair<std::string, std::string>> intro = {{"eH", "U"}, {"H'", "In U H eH"}};
	auto more = intro;
	more.push_back({"a b", "U"});
	more.push_back({"H'0", "In U H a"});
	more.push_back({"H'1", "In U H b"});
	const auto root = goal(base, "forall (_ : In U H eH), Setsubgroup U H Gr");
	const auto d1 = goal(intro, "Setsubgroup U H Gr");
	const auto d2 = goal(intro, "forall (a : U), forall (b : U), forall (_ : In U H a), forall (_ : In U H b), "
								"In U H (star a (inv b))");
	const auto d3 = goal(more, "In U H (star a (inv b))");
	const auto d4 = goal(more, "In U H (inv b)");
	return theorem("theories/GroupTheory.v", "T_1_6_3", {root},
		{
			{"intro H'.", {d1}},
			{"apply T_1_6_2 with (witness := eH); auto with sets.", {d2}},
			{"red in |- *; intros a b H'0 H'1.", {d3}},
			{"apply h2; auto with sets.", {d4}},
			{"rewrite <- (G3b' b); auto with sets.", {}},
		});
}

TheoremTrace subgroup_quantified() {
	const std::vector<std::pair<std::string, std::string>> intro = {{"witness", "U"}, {"inH", "In U H witness"}};
	auto more = intro;
	more.push_back({"a", "U"});
	more.push_back({"H'", "In U H a"});
	const auto root = goal({}, "forall (x : U), forall (_ : In U H x), Setsubgroup U H Gr");
	const auto e1 = goal(intro, "Setsubgroup U H Gr");
	const auto e2 = goal(intro, "forall (a : U), forall (_ : In U H a), In U H (inv a)");
	const auto e3 = goal(intro, "forall (a : U), forall (_ : In U H a), In U H (phi a m)");
	const auto e4 = goal(more, "In U H (phi a m)");
	return theorem("theories/GroupTheory.v", "T_1_6_4", {root},
		{
			{"intros witness inH.", {e1}},
			{"apply T_1_6_2 with (witness := witness); trivial.", {e2}},
			{"red in |- *.", {e3}},
			{"intros a H'.", {e4}},
			{"apply positive_powers; trivial.", {}},
		});
}

// Alpha-equivalent, but the proofs are too short for the default threshold.
TheoremTrace app_nil_simpl() {
	const std::vector<std::pair<std::string, std::string>> ctx = {{"A", "Type"}, {"l", "list A"}};
	return theorem("theories/Lists.v", "app_nil_l", {goal(ctx, "eq (list A) (app (nil A) l) l")},
		{{"reflexivity.", {}}});
}

TheoremTrace app_nil_refl() {
	const std::vector<std::pair<std::string, std::string>> ctx = {{"T", "Type"}, {"xs", "list T"}};
	return theorem("theories/Lists.v", "app_nil_l'", {goal(ctx, "eq (list T) (app (nil T) xs) xs")},
		{{"reflexivity.", {}}});
}

} // namespace

std::vector<std::pair<std::string, std::vector<TheoremTrace>>> planted_corpus() {
	return {
		{"KVSA1g1Cause0bl.trace.json", {cause_trace("algrec_step", "a"), cause_trace("cause_rec", "b")}},
		{"arith/Le.trace.json", {le_by_induction()}},
		{"arith/LeAlt.trace.json", {le_by_commutation()}},
		{"GroupTheory.trace.json", {subgroup_from_context(), subgroup_quantified()}},
		{"Lists.trace.json", {app_nil_simpl(), app_nil_refl()}},
	};
}

std::vector<PlantedPair> planted_pairs() {
	return {
		{"exact duplicate", "algrec_step", "cause_rec", 0, 0, 6},
		{"renamed", "le_plus_l", "le_plus_l'", 0, 0, 5},
		{"generalization nesting", "T_1_6_3", "T_1_6_4", 0, 0, 5},
		{"below threshold", "app_nil_l", "app_nil_l'", 0, 0, 1},
	};
}

void write_corpus(const fs::path& dir) {
	for (const auto& [rel, traces] : planted_corpus()) {
		const fs::path path = dir / rel;
		fs::create_directories(path.parent_path());
		write_trace_file(path, traces);
	}
}

TempDir::TempDir(const std::string& tag) {
	static std::atomic<unsigned> counter{0};
	std::random_device rd;
	const std::string leaf = "goalclone-" + tag + "-" + std::to_string(::getpid()) + "-" +
		std::to_string(counter++) + "-" + std::to_string(rd());
	path_ = fs::temp_directory_path() / leaf;
	fs::remove_all(path_);
	fs::create_directories(path_);
}

TempDir::~TempDir() {
	std::error_code ec;
	fs::remove_all(path_, ec);
}

} // namespace goalclone::testing
