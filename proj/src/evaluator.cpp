#include "passivelens/evaluator.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "passivelens/error.hpp"

namespace passivelens::evaluator {

using annotator::Annotation;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

const std::vector<corpus::Register> kAllRegisters{
    corpus::Register::A_PRESS, corpus::Register::B_OFFICIAL_DOCUMENT,
    corpus::Register::C_ACADEMIC_PROSE, corpus::Register::D_GENERAL_PROSE,
    corpus::Register::E_LITERATURE};

}  // namespace

ProportionTable proportions(
    const std::vector<std::pair<std::string, std::vector<Annotation>>>& columns,
    corpus::Language lang) {
  if (columns.empty()) throw Error("proportion table needs at least one column");
  ProportionTable table;
  table.lang = lang;
  const auto& strategies = labels::strategies_of(lang);
  for (auto s : strategies) {
    ProportionTable::Row row;
    row.voice = labels::voice_of(s);
    row.strategy = s;
    table.rows.push_back(std::move(row));
  }
  for (const auto& [name, annotations] : columns) {
    if (annotations.empty())
      throw Error("proportion column \"" + name + "\" has no annotations");
    table.columns.push_back(name);
    table.column_n.push_back(static_cast<int>(annotations.size()));
    std::map<labels::Strategy, int> counts;
    for (const auto& a : annotations) {
      if (labels::label_language(a.label) != lang)
        throw Error("proportion column \"" + name + "\" mixes languages");
      ++counts[a.strategy];
    }
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      const auto it = counts.find(strategies[i]);
      const double pct =
          100.0 * (it == counts.end() ? 0 : it->second) / static_cast<double>(annotations.size());
      table.rows[i].pct.push_back(pct);
    }
  }
  return table;
}

StructureGranularity default_granularity(corpus::Language target_language) {
  return target_language == corpus::Language::en ? StructureGranularity::label
                                                 : StructureGranularity::strategy;
}

ConsistencySummary consistency(const std::vector<Annotation>& human,
                               const std::vector<Annotation>& system,
                               const std::map<std::string, corpus::Register>& registers,
                               StructureGranularity granularity) {
  auto index = [](const std::vector<Annotation>& anns, const char* who) {
    std::map<std::string, const Annotation*> by_id;
    for (const auto& a : anns)
      if (!by_id.emplace(a.pair_id, &a).second)
        throw Error(std::string(who) + " annotations repeat pair id \"" + a.pair_id + "\"");
    return by_id;
  };
  const auto h = index(human, "human");
  const auto s = index(system, "system");

  std::vector<std::string> only_h, only_s;
  for (const auto& [id, a] : h)
    if (!s.count(id)) only_h.push_back(id);
  for (const auto& [id, a] : s)
    if (!h.count(id)) only_s.push_back(id);
  if (!only_h.empty() || !only_s.empty()) {
    std::string msg = "annotation pair sets differ;";
    auto join = [](const std::vector<std::string>& ids) {
      std::string out;
      for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : " ") + ids[i];
      return out;
    };
    if (!only_h.empty()) msg += " only in human:" + join(only_h) + ";";
    if (!only_s.empty()) msg += " only in system:" + join(only_s) + ";";
    msg.pop_back();
    throw Error(msg, 3);
  }

  struct Acc {
    int n = 0, voice = 0, structure = 0;
  };
  std::map<corpus::Register, Acc> per_register;
  Acc total;
  for (const auto& [id, ha] : h) {
    const Annotation* sa = s.at(id);
    if (ha->side != sa->side)
      throw Error("annotations for pair \"" + id + "\" compare different sides");
    const auto reg_it = registers.find(id);
    if (reg_it == registers.end()) throw Error("no register known for pair \"" + id + "\"");
    const bool voice_match = ha->voice == sa->voice;
    const bool structure_match = granularity == StructureGranularity::label
                                     ? ha->label == sa->label
                                     : ha->strategy == sa->strategy;
    for (Acc* acc : {&per_register[reg_it->second], &total}) {
      ++acc->n;
      acc->voice += voice_match ? 1 : 0;
      acc->structure += structure_match ? 1 : 0;
    }
  }

  auto row = [](const Acc& a) {
    ConsistencyRow r;
    r.n = a.n;
    r.voice = a.n > 0 ? static_cast<double>(a.voice) / a.n : 0.0;
    r.structure = a.n > 0 ? static_cast<double>(a.structure) / a.n : 0.0;
    return r;
  };
  ConsistencySummary out;
  for (corpus::Register reg : kAllRegisters) {
    const auto it = per_register.find(reg);
    if (it != per_register.end()) out.by_register.emplace_back(reg, row(it->second));
  }
  out.overall = row(total);
  return out;
}

DiversitySummary diversity(const std::vector<Annotation>& annotations, int label_universe,
                           int strategy_universe) {
  std::set<labels::StrategyLabel> labels_seen;
  std::set<labels::Strategy> strategies_seen;
  for (const auto& a : annotations) {
    labels_seen.insert(a.label);
    strategies_seen.insert(a.strategy);
  }
  DiversitySummary d;
  d.distinct_labels = static_cast<int>(labels_seen.size());
  d.label_universe = label_universe;
  d.distinct_strategies = static_cast<int>(strategies_seen.size());
  d.strategy_universe = strategy_universe;
  return d;
}

SubsetReport evaluate_subset(const SubsetInputs& in) {
  SubsetReport r;
  r.subset = in.subset;
  r.target_language = in.target_language;
  r.n_pairs = static_cast<int>(in.pair_ids.size());

  std::map<corpus::Register, int> reg_counts;
  for (const auto& [id, reg] : in.registers) ++reg_counts[reg];
  for (corpus::Register reg : kAllRegisters)
    if (!reg_counts.count(reg))
      r.warnings.push_back("no pairs for register " + corpus::to_string(reg));

  if (r.n_pairs == 0) {
    r.warnings.insert(r.warnings.begin(), "subset has no pairs; tables omitted");
    return r;
  }

  const corpus::Language source_language =
      in.target_language == corpus::Language::en ? corpus::Language::zh : corpus::Language::en;
  r.source_table = proportions({{"human", in.human_source}}, source_language);

  std::vector<std::pair<std::string, std::vector<Annotation>>> target_columns;
  target_columns.emplace_back("human", in.human_target);
  for (const auto& sys : in.systems)
    if (sys.annotations) target_columns.emplace_back(sys.name, *sys.annotations);
  r.target_table = proportions(target_columns, in.target_language);

  const int label_universe =
      in.label_universe > 0 ? in.label_universe
                            : static_cast<int>(labels::labels_of(in.target_language).size());
  const int strategy_universe =
      in.strategy_universe > 0
          ? in.strategy_universe
          : static_cast<int>(labels::strategies_of(in.target_language).size());
  r.human_diversity = diversity(in.human_target, label_universe, strategy_universe);

  const StructureGranularity granularity =
      in.granularity ? *in.granularity : default_granularity(in.target_language);

  for (const auto& sys : in.systems) {
    SystemBlock b;
    b.name = sys.name;
    if (sys.annotations) {
      b.consistency = consistency(in.human_target, *sys.annotations, in.registers, granularity);
      b.diversity = diversity(*sys.annotations, label_universe, strategy_universe);
    }
    b.scores = metrics::score_subset(sys.hypotheses, in.references, in.target_language);
    r.systems.push_back(std::move(b));
  }
  return r;
}

Report compare_report(const std::vector<SubsetInputs>& subsets) {
  Report report;
  for (const auto& in : subsets) report.subsets.push_back(evaluate_subset(in));
  return report;
}

namespace {

ordered_json table_json(const ProportionTable& t) {
  ordered_json j;
  j["language"] = corpus::to_string(t.lang);
  j["columns"] = t.columns;
  j["n"] = t.column_n;
  j["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r;
    r["voice"] = labels::to_string(row.voice);
    r["strategy"] = labels::to_string(row.strategy);
    r["display"] = labels::display_name(row.strategy);
    r["pct"] = row.pct;
    j["rows"].push_back(std::move(r));
  }
  return j;
}

ordered_json consistency_json(const ConsistencySummary& c) {
  ordered_json j;
  auto row = [](const ConsistencyRow& r) {
    ordered_json o;
    o["voice"] = r.voice;
    o["structure"] = r.structure;
    o["n"] = r.n;
    return o;
  };
  j["overall"] = row(c.overall);
  j["by_register"] = ordered_json::array();
  for (const auto& [reg, r] : c.by_register) {
    ordered_json o = row(r);
    o["register"] = corpus::to_string(reg);
    j["by_register"].push_back(std::move(o));
  }
  return j;
}

ordered_json diversity_json(const DiversitySummary& d) {
  ordered_json j;
  j["distinct_labels"] = d.distinct_labels;
  j["label_universe"] = d.label_universe;
  j["distinct_strategies"] = d.distinct_strategies;
  j["strategy_universe"] = d.strategy_universe;
  return j;
}

ordered_json metrics_json(const std::vector<metrics::MetricScore>& scores) {
  ordered_json j;
  for (const auto& s : scores) {
    ordered_json o;
    o["value"] = s.value;
    o["details"] = ordered_json(s.details);
    j[metrics::to_string(s.metric)] = std::move(o);
  }
  j["COMET"] = nullptr;  // reserved for externally computed values
  return j;
}

}  // namespace

void render_json(std::ostream& os, const Report& report) {
  ordered_json j;
  j["subsets"] = ordered_json::array();
  for (const auto& sub : report.subsets) {
    ordered_json s;
    s["subset"] = extractor::display_name(sub.subset);
    s["slug"] = extractor::slug(sub.subset);
    s["target_language"] = corpus::to_string(sub.target_language);
    s["n_pairs"] = sub.n_pairs;
    s["warnings"] = sub.warnings;
    if (sub.n_pairs > 0) {
      s["proportions"]["source"] = table_json(sub.source_table);
      s["proportions"]["target"] = table_json(sub.target_table);
      s["diversity"]["human"] = diversity_json(sub.human_diversity);
      s["systems"] = ordered_json::array();
      for (const auto& b : sub.systems) {
        ordered_json o;
        o["name"] = b.name;
        if (b.consistency) o["consistency"] = consistency_json(*b.consistency);
        if (b.diversity) o["diversity"] = diversity_json(*b.diversity);
        o["metrics"] = metrics_json(b.scores);
        s["systems"].push_back(std::move(o));
      }
    }
    j["subsets"].push_back(std::move(s));
  }
  os << j.dump(2) << '\n';
}

namespace {

void markdown_table(std::ostream& os, const ProportionTable& t, const std::string& title) {
  os << "### " << title << "\n\n";
  os << "| Voice | Structure |";
  for (const auto& c : t.columns) os << ' ' << c << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : t.rows) {
    os << "| " << labels::to_string(row.voice) << " | " << labels::display_name(row.strategy)
       << " |";
    for (double v : row.pct) os << ' ' << fmt(v, 1) << " |";
    os << '\n';
  }
  os << "| | n |";
  for (int n : t.column_n) os << ' ' << n << " |";
  os << "\n\n";
}

}  // namespace

void render_markdown(std::ostream& os, const Report& report) {
  os << "# Passive translation report\n\n";
  for (const auto& sub : report.subsets) {
    os << "## " << extractor::display_name(sub.subset) << " (" << sub.n_pairs << " pairs)\n\n";
    for (const auto& w : sub.warnings) os << "> " << w << "\n";
    if (!sub.warnings.empty()) os << '\n';
    if (sub.n_pairs == 0) continue;

    markdown_table(os, sub.source_table,
                   "Structure proportions — source (" +
                       corpus::to_string(sub.source_table.lang) + ")");
    markdown_table(os, sub.target_table,
                   "Structure proportions — target (" +
                       corpus::to_string(sub.target_table.lang) + ")");

    bool any_consistency = false;
    for (const auto& b : sub.systems)
      if (b.consistency) any_consistency = true;
    if (any_consistency) {
      os << "### Consistency vs human\n\n";
      os << "| System | Register | Voice | Structure | n |\n|---|---|---|---|---|\n";
      for (const auto& b : sub.systems) {
        if (!b.consistency) continue;
        os << "| " << b.name << " | overall | " << fmt(b.consistency->overall.voice, 3) << " | "
           << fmt(b.consistency->overall.structure, 3) << " | " << b.consistency->overall.n
           << " |\n";
        for (const auto& [reg, row] : b.consistency->by_register)
          os << "| " << b.name << " | " << corpus::to_string(reg) << " | " << fmt(row.voice, 3)
             << " | " << fmt(row.structure, 3) << " | " << row.n << " |\n";
      }
      os << '\n';
    }

    os << "### Diversity\n\n| Column | Labels | Strategies |\n|---|---|---|\n";
    os << "| human | " << sub.human_diversity.distinct_labels << " / "
       << sub.human_diversity.label_universe << " | " << sub.human_diversity.distinct_strategies
       << " / " << sub.human_diversity.strategy_universe << " |\n";
    for (const auto& b : sub.systems)
      if (b.diversity)
        os << "| " << b.name << " | " << b.diversity->distinct_labels << " / "
           << b.diversity->label_universe << " | " << b.diversity->distinct_strategies << " / "
           << b.diversity->strategy_universe << " |\n";
    os << '\n';

    if (!sub.systems.empty()) {
      os << "### Metric scores\n\n| System | BLEU | chrF++ | COMET |\n|---|---|---|---|\n";
      for (const auto& b : sub.systems) {
        std::string bleu = "-", chrf = "-";
        for (const auto& s : b.scores) {
          if (s.metric == metrics::Metric::BLEU) bleu = fmt(s.value, 2);
          if (s.metric == metrics::Metric::CHRF_PP) chrf = fmt(s.value, 2);
        }
        os << "| " << b.name << " | " << bleu << " | " << chrf << " | |\n";
      }
      os << '\n';
    }
  }
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << content;
}

std::string csv_proportions(const ProportionTable& t) {
  std::ostringstream os;
  os << "voice,structure";
  for (const auto& c : t.columns) os << ',' << c;
  os << '\n';
  for (const auto& row : t.rows) {
    os << labels::to_string(row.voice) << ',' << labels::display_name(row.strategy);
    for (double v : row.pct) os << ',' << fmt(v, 6);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::vector<std::string> render_csv(const std::string& dir, const Report& report) {
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir + "/" + name, content);
    written.push_back(name);
  };

  for (const auto& sub : report.subsets) {
    if (sub.n_pairs == 0) continue;
    const std::string slug = extractor::slug(sub.subset);
    emit("proportions_" + slug + "_source.csv", csv_proportions(sub.source_table));
    emit("proportions_" + slug + "_target.csv", csv_proportions(sub.target_table));

    std::ostringstream cons;
    cons << "system,register,voice_consistency,structure_consistency,n\n";
    for (const auto& b : sub.systems) {
      if (!b.consistency) continue;
      cons << b.name << ",overall," << fmt(b.consistency->overall.voice, 6) << ','
           << fmt(b.consistency->overall.structure, 6) << ',' << b.consistency->overall.n << '\n';
      for (const auto& [reg, row] : b.consistency->by_register)
        cons << b.name << ',' << corpus::to_string(reg) << ',' << fmt(row.voice, 6) << ','
             << fmt(row.structure, 6) << ',' << row.n << '\n';
    }
    emit("consistency_" + slug + ".csv", cons.str());

    std::ostringstream div;
    div << "column,distinct_labels,label_universe,distinct_strategies,strategy_universe\n";
    div << "human," << sub.human_diversity.distinct_labels << ','
        << sub.human_diversity.label_universe << ',' << sub.human_diversity.distinct_strategies
        << ',' << sub.human_diversity.strategy_universe << '\n';
    for (const auto& b : sub.systems)
      if (b.diversity)
        div << b.name << ',' << b.diversity->distinct_labels << ',' << b.diversity->label_universe
            << ',' << b.diversity->distinct_strategies << ',' << b.diversity->strategy_universe
            << '\n';
    emit("diversity_" + slug + ".csv", div.str());

    std::ostringstream met;
    met << "system,metric,value\n";
    for (const auto& b : sub.systems) {
      for (const auto& s : b.scores)
        met << b.name << ',' << metrics::to_string(s.metric) << ',' << fmt(s.value, 6) << '\n';
      met << b.name << ",COMET,\n";
    }
    emit("metrics_" + slug + ".csv", met.str());
  }
  return written;
}

}  // namespace passivelens::evaluator
