// Evaluator tests: proportion tables, consistency scoring, diversity
// counts, subset report assembly, and the three renderers.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "builders.hpp"
#include "passivelens/error.hpp"
#include "passivelens/evaluator.hpp"

using namespace passivelens;
using annotator::Annotation;
using annotator::Side;
using corpus::Language;
using corpus::Register;
using evaluator::StructureGranularity;
using labels::Strategy;
using labels::StrategyLabel;
using labels::Voice;

namespace {

Annotation ann(const std::string& pid, Side side, StrategyLabel label) {
  Annotation a;
  a.pair_id = pid;
  a.side = side;
  a.label = label;
  a.strategy = labels::strategy_of(label);
  a.voice = labels::voice_of(a.strategy);
  return a;
}

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("proportions: Chinese strategy rows in fixed order") {
  const std::vector<Annotation> anns{
      ann("p1", Side::source, StrategyLabel::BEI_L), ann("p2", Side::source, StrategyLabel::BEI_S),
      ann("p3", Side::source, StrategyLabel::SHOU), ann("p4", Side::source, StrategyLabel::ZH_NA)};
  const auto t = evaluator::proportions({{"human", anns}}, Language::zh);

  CHECK(t.lang == Language::zh);
  CHECK(t.columns == std::vector<std::string>{"human"});
  CHECK(t.column_n == std::vector<int>{4});
  REQUIRE(t.rows.size() == 8);
  CHECK(t.rows[0].strategy == Strategy::SYNTACTIC_PASSIVE);
  CHECK(t.rows[0].voice == Voice::PASSIVE);
  CHECK(close(t.rows[0].pct[0], 50.0));
  CHECK(t.rows[1].strategy == Strategy::LEXICAL_PASSIVE);
  CHECK(close(t.rows[1].pct[0], 25.0));
  CHECK(t.rows[7].strategy == Strategy::OTHER_ACTIVE);
  CHECK(t.rows[7].voice == Voice::ACTIVE);
  CHECK(close(t.rows[7].pct[0], 25.0));
  // Unused strategies are present with 0.
  for (std::size_t i = 2; i < 7; ++i) CHECK(t.rows[i].pct[0] == 0.0);

  // Percentages sum to 100 per column.
  double sum = 0.0;
  for (const auto& row : t.rows) sum += row.pct[0];
  CHECK(close(sum, 100.0, 1e-9));
}

TEST_CASE("proportions: English columns and exact thirds") {
  const std::vector<Annotation> anns{ann("p1", Side::target, StrategyLabel::BE),
                                     ann("p2", Side::target, StrategyLabel::GET),
                                     ann("p3", Side::target, StrategyLabel::EN_NA)};
  const auto t = evaluator::proportions({{"human", anns}}, Language::en);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[0].strategy == Strategy::BE);
  CHECK(close(t.rows[0].pct[0], 100.0 / 3.0));
  CHECK(t.rows[1].strategy == Strategy::GET);
  CHECK(close(t.rows[1].pct[0], 100.0 / 3.0));
  CHECK(t.rows[2].pct[0] == 0.0);
  CHECK(t.rows[3].pct[0] == 0.0);
  CHECK(t.rows[4].strategy == Strategy::ACTIVE);
  CHECK(close(t.rows[4].pct[0], 100.0 / 3.0));
}

TEST_CASE("proportions: several columns with different sizes") {
  const std::vector<Annotation> human{ann("p1", Side::target, StrategyLabel::BE),
                                      ann("p2", Side::target, StrategyLabel::BE)};
  const std::vector<Annotation> sys{ann("p1", Side::target, StrategyLabel::EN_NA)};
  const auto t = evaluator::proportions({{"human", human}, {"sysA", sys}}, Language::en);
  CHECK(t.columns == std::vector<std::string>{"human", "sysA"});
  CHECK(t.column_n == std::vector<int>{2, 1});
  CHECK(close(t.rows[0].pct[0], 100.0));  // BE, human
  CHECK(t.rows[0].pct[1] == 0.0);         // BE, sysA
  CHECK(close(t.rows[4].pct[1], 100.0));  // ACTIVE, sysA
}

TEST_CASE("proportions: input validation") {
  CHECK_THROWS_WITH_AS(evaluator::proportions({}, Language::zh),
                       "proportion table needs at least one column", Error);
  CHECK_THROWS_WITH_AS(evaluator::proportions({{"human", {}}}, Language::zh),
                       "proportion column \"human\" has no annotations", Error);
  const std::vector<Annotation> mixed{ann("p1", Side::source, StrategyLabel::BEI_L),
                                      ann("p2", Side::source, StrategyLabel::BE)};
  CHECK_THROWS_WITH_AS(evaluator::proportions({{"human", mixed}}, Language::zh),
                       "proportion column \"human\" mixes languages", Error);
}

TEST_CASE("default granularity by target language") {
  CHECK(evaluator::default_granularity(Language::en) == StructureGranularity::label);
  CHECK(evaluator::default_granularity(Language::zh) == StructureGranularity::strategy);
}

TEST_CASE("consistency: identical annotations score 1.0") {
  const std::vector<Annotation> human{ann("p1", Side::target, StrategyLabel::BE),
                                      ann("p2", Side::target, StrategyLabel::EN_NA)};
  const std::map<std::string, Register> regs{{"p1", Register::A_PRESS},
                                             {"p2", Register::E_LITERATURE}};
  const auto c = evaluator::consistency(human, human, regs, StructureGranularity::label);
  CHECK(c.overall.voice == 1.0);
  CHECK(c.overall.structure == 1.0);
  CHECK(c.overall.n == 2);
  REQUIRE(c.by_register.size() == 2);
  // Register rows follow the fixed A..E order.
  CHECK(c.by_register[0].first == Register::A_PRESS);
  CHECK(c.by_register[0].second.n == 1);
  CHECK(c.by_register[1].first == Register::E_LITERATURE);
  CHECK(c.by_register[1].second.voice == 1.0);
}

TEST_CASE("consistency: label vs strategy granularity") {
  // BEI_L vs BEI_S: same strategy (syntactic), different fine label.
  const std::vector<Annotation> human{ann("p1", Side::source, StrategyLabel::BEI_L)};
  const std::vector<Annotation> sys{ann("p1", Side::source, StrategyLabel::BEI_S)};
  const std::map<std::string, Register> regs{{"p1", Register::A_PRESS}};

  const auto by_label = evaluator::consistency(human, sys, regs, StructureGranularity::label);
  CHECK(by_label.overall.voice == 1.0);  // both passive
  CHECK(by_label.overall.structure == 0.0);

  const auto by_strategy =
      evaluator::consistency(human, sys, regs, StructureGranularity::strategy);
  CHECK(by_strategy.overall.voice == 1.0);
  CHECK(by_strategy.overall.structure == 1.0);
}

TEST_CASE("consistency: voice and structure fractions") {
  // p1 agrees fully; p2 flips the voice (BE vs EN_NA).
  const std::vector<Annotation> human{ann("p1", Side::target, StrategyLabel::BE),
                                      ann("p2", Side::target, StrategyLabel::BE)};
  const std::vector<Annotation> sys{ann("p1", Side::target, StrategyLabel::BE),
                                    ann("p2", Side::target, StrategyLabel::EN_NA)};
  const std::map<std::string, Register> regs{{"p1", Register::A_PRESS},
                                             {"p2", Register::A_PRESS}};
  const auto c = evaluator::consistency(human, sys, regs, StructureGranularity::label);
  CHECK(c.overall.voice == 0.5);
  CHECK(c.overall.structure == 0.5);
  CHECK(c.overall.n == 2);
  REQUIRE(c.by_register.size() == 1);
  CHECK(c.by_register[0].second.voice == 0.5);

  // Voice can agree while the structure differs: GET vs BE.
  const std::vector<Annotation> sys2{ann("p1", Side::target, StrategyLabel::GET),
                                     ann("p2", Side::target, StrategyLabel::BE)};
  const auto c2 = evaluator::consistency(human, sys2, regs, StructureGranularity::label);
  CHECK(c2.overall.voice == 1.0);
  CHECK(c2.overall.structure == 0.5);
}

TEST_CASE("consistency: pair-set mismatch is a code-3 error") {
  const std::vector<Annotation> human{ann("p1", Side::target, StrategyLabel::BE),
                                      ann("p2", Side::target, StrategyLabel::BE)};
  const std::vector<Annotation> sys{ann("p2", Side::target, StrategyLabel::BE),
                                    ann("p3", Side::target, StrategyLabel::BE)};
  const std::map<std::string, Register> regs{{"p1", Register::A_PRESS},
                                             {"p2", Register::A_PRESS},
                                             {"p3", Register::A_PRESS}};
  try {
    evaluator::consistency(human, sys, regs, StructureGranularity::label);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.exit_code() == 3);
    CHECK(std::string(e.what()) ==
          "annotation pair sets differ; only in human: p1; only in system: p3");
  }
}

TEST_CASE("consistency: other input validation") {
  const std::map<std::string, Register> regs{{"p1", Register::A_PRESS}};

  const std::vector<Annotation> dup{ann("p1", Side::target, StrategyLabel::BE),
                                    ann("p1", Side::target, StrategyLabel::BE)};
  const std::vector<Annotation> one{ann("p1", Side::target, StrategyLabel::BE)};
  CHECK_THROWS_WITH_AS(evaluator::consistency(dup, one, regs, StructureGranularity::label),
                       "human annotations repeat pair id \"p1\"", Error);
  CHECK_THROWS_WITH_AS(evaluator::consistency(one, dup, regs, StructureGranularity::label),
                       "system annotations repeat pair id \"p1\"", Error);

  const std::vector<Annotation> other_side{ann("p1", Side::source, StrategyLabel::BEI_L)};
  CHECK_THROWS_WITH_AS(evaluator::consistency(one, other_side, regs, StructureGranularity::label),
                       "annotations for pair \"p1\" compare different sides", Error);

  const std::map<std::string, Register> empty_regs;
  CHECK_THROWS_WITH_AS(evaluator::consistency(one, one, empty_regs, StructureGranularity::label),
                       "no register known for pair \"p1\"", Error);
}

TEST_CASE("diversity counts distinct labels and strategies") {
  const std::vector<Annotation> anns{
      ann("p1", Side::source, StrategyLabel::BEI_L), ann("p2", Side::source, StrategyLabel::BEI_L),
      ann("p3", Side::source, StrategyLabel::SHOU), ann("p4", Side::source, StrategyLabel::ZH_NA)};
  const auto d = evaluator::diversity(anns, 27, 8);
  CHECK(d.distinct_labels == 3);
  CHECK(d.label_universe == 27);
  CHECK(d.distinct_strategies == 3);
  CHECK(d.strategy_universe == 8);

  const auto empty = evaluator::diversity({}, 5, 5);
  CHECK(empty.distinct_labels == 0);
  CHECK(empty.distinct_strategies == 0);
}

namespace {

// A small ZH(bei)->EN subset: two pairs, registers A and E, one system
// with annotations and one with output only.
evaluator::SubsetInputs small_subset() {
  evaluator::SubsetInputs in;
  in.subset = extractor::SubsetId::zhbei2en;
  in.target_language = Language::en;
  in.pair_ids = {"p1", "p2"};
  in.registers = {{"p1", Register::A_PRESS}, {"p2", Register::E_LITERATURE}};
  in.human_source = {ann("p1", Side::source, StrategyLabel::BEI_L),
                     ann("p2", Side::source, StrategyLabel::BEI_S)};
  in.human_target = {ann("p1", Side::target, StrategyLabel::BE),
                     ann("p2", Side::target, StrategyLabel::EN_NA)};
  in.references = {{"He was seen by the crowd .", std::nullopt},
                   {"The door opened quietly then .", std::nullopt}};

  evaluator::SystemInputs annotated;
  annotated.name = "sysA";
  annotated.annotations = {{ann("p1", Side::target, StrategyLabel::BE),
                            ann("p2", Side::target, StrategyLabel::BE)}};
  annotated.hypotheses = in.references;  // perfect output
  in.systems.push_back(annotated);

  evaluator::SystemInputs plain;
  plain.name = "sysB";
  plain.hypotheses = {{"He was seen by the crowd .", std::nullopt},
                      {"Someone opened the door .", std::nullopt}};
  in.systems.push_back(plain);
  return in;
}

}  // namespace

TEST_CASE("evaluate_subset assembles tables, warnings, and systems") {
  const auto r = evaluator::evaluate_subset(small_subset());
  CHECK(r.subset == extractor::SubsetId::zhbei2en);
  CHECK(r.target_language == Language::en);
  CHECK(r.n_pairs == 2);

  // Registers B, C, D have no pairs; warnings list them in order.
  REQUIRE(r.warnings.size() == 3);
  CHECK(r.warnings[0] == "no pairs for register B_OFFICIAL_DOCUMENT");
  CHECK(r.warnings[1] == "no pairs for register C_ACADEMIC_PROSE");
  CHECK(r.warnings[2] == "no pairs for register D_GENERAL_PROSE");

  // Source table: Chinese; target table: human plus the annotated system only.
  CHECK(r.source_table.lang == Language::zh);
  CHECK(r.source_table.columns == std::vector<std::string>{"human"});
  CHECK(close(r.source_table.rows[0].pct[0], 100.0));  // both pairs syntactic
  CHECK(r.target_table.lang == Language::en);
  CHECK(r.target_table.columns == std::vector<std::string>{"human", "sysA"});

  // Human diversity against the English defaults (5 labels, 5 strategies).
  CHECK(r.human_diversity.distinct_labels == 2);
  CHECK(r.human_diversity.label_universe == 5);
  CHECK(r.human_diversity.strategy_universe == 5);

  REQUIRE(r.systems.size() == 2);
  const auto& sysA = r.systems[0];
  CHECK(sysA.name == "sysA");
  REQUIRE(sysA.consistency.has_value());
  CHECK(sysA.consistency->overall.n == 2);
  CHECK(sysA.consistency->overall.voice == 0.5);      // p2: BE vs EN_NA
  CHECK(sysA.consistency->overall.structure == 0.5);  // label granularity
  REQUIRE(sysA.diversity.has_value());
  CHECK(sysA.diversity->distinct_labels == 1);
  REQUIRE(sysA.scores.size() == 2);
  CHECK(close(sysA.scores[0].value, 100.0, 1e-9));  // BLEU, perfect output
  CHECK(close(sysA.scores[1].value, 100.0, 1e-9));  // chrF++

  const auto& sysB = r.systems[1];
  CHECK_FALSE(sysB.consistency.has_value());
  CHECK_FALSE(sysB.diversity.has_value());
  REQUIRE(sysB.scores.size() == 2);
  CHECK(sysB.scores[0].value < 100.0);
  CHECK(sysB.scores[0].value > 0.0);
}

TEST_CASE("evaluate_subset honors universe and granularity overrides") {
  auto in = small_subset();
  in.label_universe = 31;
  in.strategy_universe = 13;
  const auto r = evaluator::evaluate_subset(in);
  CHECK(r.human_diversity.label_universe == 31);
  CHECK(r.human_diversity.strategy_universe == 13);

  // Chinese target defaults to strategy granularity; BEI_L vs BEI_S then
  // count as consistent, but a label-granularity override separates them.
  evaluator::SubsetInputs zh;
  zh.subset = extractor::SubsetId::en2zhbei;
  zh.target_language = Language::zh;
  zh.pair_ids = {"p1"};
  zh.registers = {{"p1", Register::A_PRESS}};
  zh.human_source = {ann("p1", Side::source, StrategyLabel::BE)};
  zh.human_target = {ann("p1", Side::target, StrategyLabel::BEI_L)};
  zh.references = {{"他被警方逮捕。", std::vector<std::string>{"他", "被", "警方", "逮捕", "。"}}};
  evaluator::SystemInputs sys;
  sys.name = "s";
  sys.annotations = {{ann("p1", Side::target, StrategyLabel::BEI_S)}};
  sys.hypotheses = zh.references;
  zh.systems.push_back(sys);

  const auto by_default = evaluator::evaluate_subset(zh);
  CHECK(by_default.systems[0].consistency->overall.structure == 1.0);
  CHECK(by_default.human_diversity.label_universe == 27);
  CHECK(by_default.human_diversity.strategy_universe == 8);

  zh.granularity = StructureGranularity::label;
  const auto by_label = evaluator::evaluate_subset(zh);
  CHECK(by_label.systems[0].consistency->overall.structure == 0.0);
}

TEST_CASE("evaluate_subset with no pairs") {
  evaluator::SubsetInputs in;
  in.subset = extractor::SubsetId::en2zhbei;
  in.target_language = Language::zh;
  const auto r = evaluator::evaluate_subset(in);
  CHECK(r.n_pairs == 0);
  REQUIRE(r.warnings.size() == 6);
  CHECK(r.warnings[0] == "subset has no pairs; tables omitted");
  CHECK(r.warnings[1] == "no pairs for register A_PRESS");
  CHECK(r.systems.empty());
  CHECK(r.source_table.columns.empty());
}

TEST_CASE("compare_report keeps subset order") {
  auto a = small_subset();
  evaluator::SubsetInputs b;
  b.subset = extractor::SubsetId::enbe2zh;
  b.target_language = Language::zh;
  const auto report = evaluator::compare_report({a, b});
  REQUIRE(report.subsets.size() == 2);
  CHECK(report.subsets[0].subset == extractor::SubsetId::zhbei2en);
  CHECK(report.subsets[1].subset == extractor::SubsetId::enbe2zh);
  CHECK(report.subsets[1].n_pairs == 0);
}

TEST_CASE("render_json structure") {
  const auto report = evaluator::compare_report({small_subset()});
  std::ostringstream os;
  evaluator::render_json(os, report);
  const auto j = nlohmann::json::parse(os.str());

  REQUIRE(j.contains("subsets"));
  REQUIRE(j["subsets"].size() == 1);
  const auto& s = j["subsets"][0];
  CHECK(s["subset"] == "ZH(bei)→EN");
  CHECK(s["slug"] == "zhbei2en");
  CHECK(s["target_language"] == "en");
  CHECK(s["n_pairs"] == 2);
  CHECK(s["warnings"].size() == 3);

  const auto& src = s["proportions"]["source"];
  CHECK(src["language"] == "zh");
  CHECK(src["columns"][0] == "human");
  CHECK(src["n"][0] == 2);
  CHECK(src["rows"].size() == 8);
  CHECK(src["rows"][0]["strategy"] == "SYNTACTIC_PASSIVE");
  CHECK(src["rows"][0]["display"] == "Syntactic passive");
  CHECK(src["rows"][0]["voice"] == "PASSIVE");
  CHECK(src["rows"][0]["pct"][0] == doctest::Approx(100.0));

  const auto& tgt = s["proportions"]["target"];
  CHECK(tgt["columns"].size() == 2);
  CHECK(tgt["rows"].size() == 5);

  CHECK(s["diversity"]["human"]["label_universe"] == 5);

  REQUIRE(s["systems"].size() == 2);
  const auto& sysA = s["systems"][0];
  CHECK(sysA["name"] == "sysA");
  CHECK(sysA["consistency"]["overall"]["voice"] == doctest::Approx(0.5));
  CHECK(sysA["consistency"]["by_register"][0]["register"] == "A_PRESS");
  CHECK(sysA["metrics"]["BLEU"]["value"] == doctest::Approx(100.0));
  CHECK(sysA["metrics"]["chrF++"]["value"] == doctest::Approx(100.0));
  CHECK(sysA["metrics"]["COMET"].is_null());
  CHECK(sysA["metrics"]["BLEU"]["details"]["bp"] == doctest::Approx(1.0));
  const auto& sysB = s["systems"][1];
  CHECK_FALSE(sysB.contains("consistency"));
  CHECK(sysB["metrics"]["BLEU"]["value"] < 100.0);
}

TEST_CASE("render_json with an empty subset omits the tables") {
  evaluator::SubsetInputs in;
  in.subset = extractor::SubsetId::enbe2zh;
  in.target_language = Language::zh;
  std::ostringstream os;
  evaluator::render_json(os, evaluator::compare_report({in}));
  const auto j = nlohmann::json::parse(os.str());
  const auto& s = j["subsets"][0];
  CHECK(s["n_pairs"] == 0);
  CHECK_FALSE(s.contains("proportions"));
  CHECK_FALSE(s.contains("systems"));
  CHECK(s["warnings"][0] == "subset has no pairs; tables omitted");
}

TEST_CASE("render_markdown layout") {
  const auto report = evaluator::compare_report({small_subset()});
  std::ostringstream os;
  evaluator::render_markdown(os, report);
  const std::string md = os.str();

  auto has = [&](const std::string& needle) { return md.find(needle) != std::string::npos; };
  CHECK(has("# Passive translation report\n"));
  CHECK(has("## ZH(bei)→EN (2 pairs)\n"));
  CHECK(has("> no pairs for register B_OFFICIAL_DOCUMENT\n"));
  CHECK(has("### Structure proportions — source (zh)\n"));
  CHECK(has("### Structure proportions — target (en)\n"));
  CHECK(has("| Voice | Structure | human |"));
  CHECK(has("| Voice | Structure | human | sysA |"));
  CHECK(has("| PASSIVE | Syntactic passive | 100.0 |"));
  CHECK(has("| | n | 2 |"));
  CHECK(has("### Consistency vs human"));
  CHECK(has("| sysA | overall | 0.500 | 0.500 | 2 |"));
  CHECK(has("| sysA | A_PRESS | 1.000 | 1.000 | 1 |"));
  CHECK(has("| sysA | E_LITERATURE | 0.000 | 0.000 | 1 |"));
  CHECK(has("### Diversity"));
  CHECK(has("| human | 2 / 5 | 2 / 5 |"));
  CHECK(has("| sysA | 1 / 5 | 1 / 5 |"));
  CHECK(has("### Metric scores"));
  CHECK(has("| sysA | 100.00 | 100.00 | |"));
  // sysB appears in metrics but not in consistency.
  CHECK(has("| sysB | "));
  CHECK(md.find("| sysB | overall") == std::string::npos);
}

TEST_CASE("render_csv writes one file per table") {
  const auto report = evaluator::compare_report({small_subset()});
  const std::string dir = testutil::temp_dir("eval_csv");
  const auto files = evaluator::render_csv(dir, report);
  CHECK(files == std::vector<std::string>{"proportions_zhbei2en_source.csv",
                                          "proportions_zhbei2en_target.csv",
                                          "consistency_zhbei2en.csv", "diversity_zhbei2en.csv",
                                          "metrics_zhbei2en.csv"});
  auto slurp = [&](const std::string& name) {
    std::ifstream in(dir + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  const std::string src = slurp("proportions_zhbei2en_source.csv");
  CHECK(src.find("voice,structure,human\n") == 0);
  CHECK(src.find("PASSIVE,Syntactic passive,100.000000\n") != std::string::npos);

  const std::string tgt = slurp("proportions_zhbei2en_target.csv");
  CHECK(tgt.find("voice,structure,human,sysA\n") == 0);
  CHECK(tgt.find("PASSIVE,BE,50.000000,100.000000\n") != std::string::npos);

  const std::string cons = slurp("consistency_zhbei2en.csv");
  CHECK(cons.find("system,register,voice_consistency,structure_consistency,n\n") == 0);
  CHECK(cons.find("sysA,overall,0.500000,0.500000,2\n") != std::string::npos);
  CHECK(cons.find("sysA,A_PRESS,1.000000,1.000000,1\n") != std::string::npos);
  CHECK(cons.find("sysB") == std::string::npos);

  const std::string div = slurp("diversity_zhbei2en.csv");
  CHECK(div.find("column,distinct_labels,label_universe,distinct_strategies,strategy_universe\n") ==
        0);
  CHECK(div.find("human,2,5,2,5\n") != std::string::npos);
  CHECK(div.find("sysA,1,5,1,5\n") != std::string::npos);

  const std::string met = slurp("metrics_zhbei2en.csv");
  CHECK(met.find("system,metric,value\n") == 0);
  CHECK(met.find("sysA,BLEU,100.000000\n") != std::string::npos);
  CHECK(met.find("sysA,chrF++,100.000000\n") != std::string::npos);
  CHECK(met.find("sysA,COMET,\n") != std::string::npos);
  CHECK(met.find("sysB,BLEU,") != std::string::npos);

  // An empty subset contributes no files.
  evaluator::SubsetInputs empty;
  empty.subset = extractor::SubsetId::enbe2zh;
  empty.target_language = Language::zh;
  const auto none = evaluator::render_csv(dir, evaluator::compare_report({empty}));
  CHECK(none.empty());
}
