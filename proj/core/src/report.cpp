#include "flatcheck/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace flatcheck {

using nlohmann::ordered_json;

namespace {

ordered_json ideal_json(const IdealText& ideal) {
  ordered_json j;
  j["name"] = ideal.name;
  j["ring"] = ideal.ring;
  j["generators"] = ideal.generators;
  return j;
}

IdealText ideal_from(const ordered_json& j) {
  return IdealText{j.at("name").get<std::string>(), j.at("ring").get<std::string>(),
                   j.at("generators").get<std::vector<std::string>>()};
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["source"] = r.source;
  j["status"] = r.status;
  j["tool_version"] = r.tool_version;
  j["verdict"] = r.verdict ? ordered_json(*r.verdict) : ordered_json(nullptr);
  j["power"] = r.power;
  j["power_overridden"] = r.power_overridden;
  j["cover_mode"] = r.cover_mode;

  ordered_json witness = ordered_json::array();
  for (const auto& w : r.witness) {
    ordered_json item;
    item["prime"] = ideal_json(w.prime);
    item["contraction"] = ideal_json(w.contraction);
    item["separator"] = w.separator;
    item["torsion_element"] = w.torsion_element;
    witness.push_back(std::move(item));
  }
  j["witness"] = std::move(witness);

  ordered_json hyps = ordered_json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back(ordered_json{{"name", h.name}, {"status", h.status}, {"detail", h.detail}});
  j["hypotheses"] = std::move(hyps);

  ordered_json assoc = ordered_json::array();
  for (const auto& [prime, contraction] : r.associated)
    assoc.push_back(ordered_json{{"prime", ideal_json(prime)},
                                 {"contraction", ideal_json(contraction)}});
  j["associated_primes"] = std::move(assoc);

  ordered_json renaming = ordered_json::array();
  for (const auto& [from, to] : r.renaming) renaming.push_back(ordered_json::array({from, to}));
  j["renaming"] = std::move(renaming);

  ordered_json ideals = ordered_json::array();
  for (const auto& i : r.ideals) ideals.push_back(ideal_json(i));
  j["ideals"] = std::move(ideals);

  ordered_json comps = ordered_json::array();
  for (const auto& c : r.components)
    comps.push_back(ordered_json{{"ideal", c.ideal},
                                 {"primary", ideal_json(c.primary)},
                                 {"prime", ideal_json(c.prime)}});
  j["components"] = std::move(comps);
  j["notes"] = r.notes;

  ordered_json guards;
  guards["max_pairs"] = r.guards.max_pairs;
  guards["max_degree"] = r.guards.max_degree;
  guards["timeout_seconds"] =
      r.guards.timeout_seconds ? ordered_json(*r.guards.timeout_seconds) : ordered_json(nullptr);
  guards["tripped"] = r.guards.tripped;
  j["guards"] = std::move(guards);

  j["seed"] = r.seed;
  j["retries"] = r.retries;
  ordered_json timings = ordered_json::object();
  for (const auto& [k, v] : r.timings) timings[k] = v;
  j["timings"] = std::move(timings);

  if (r.error) {
    ordered_json e;
    e["kind"] = r.error->kind;
    e["message"] = r.error->message;
    if (r.error->span) {
      e["span"] = ordered_json{{"line", r.error->span->line},
                               {"column", r.error->span->column},
                               {"offset", r.error->span->offset},
                               {"length", r.error->span->length}};
    } else {
      e["span"] = nullptr;
    }
    e["expected"] = r.error->expected;
    j["error"] = std::move(e);
  } else {
    j["error"] = nullptr;
  }
  return j;
}

Report from_json(const ordered_json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kReportSchemaVersion)
    throw InvalidInput("unsupported report schema version " + std::to_string(r.schema_version));
  r.command = j.at("command").get<std::string>();
  r.source = j.at("source").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  if (!j.at("verdict").is_null()) r.verdict = j.at("verdict").get<std::string>();
  r.power = j.at("power").get<int>();
  r.power_overridden = j.at("power_overridden").get<bool>();
  r.cover_mode = j.at("cover_mode").get<std::string>();
  for (const auto& w : j.at("witness"))
    r.witness.push_back(WitnessText{ideal_from(w.at("prime")), ideal_from(w.at("contraction")),
                                    w.at("separator").get<std::string>(),
                                    w.at("torsion_element").get<std::string>()});
  for (const auto& h : j.at("hypotheses"))
    r.hypotheses.push_back(HypothesisText{h.at("name").get<std::string>(),
                                          h.at("status").get<std::string>(),
                                          h.at("detail").get<std::string>()});
  for (const auto& a : j.at("associated_primes"))
    r.associated.emplace_back(ideal_from(a.at("prime")), ideal_from(a.at("contraction")));
  for (const auto& p : j.at("renaming"))
    r.renaming.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  for (const auto& i : j.at("ideals")) r.ideals.push_back(ideal_from(i));
  for (const auto& c : j.at("components"))
    r.components.push_back(ComponentText{c.at("ideal").get<std::string>(),
                                         ideal_from(c.at("primary")), ideal_from(c.at("prime"))});
  r.notes = j.at("notes").get<std::vector<std::string>>();

  const auto& g = j.at("guards");
  r.guards.max_pairs = g.at("max_pairs").get<std::uint64_t>();
  r.guards.max_degree = g.at("max_degree").get<std::uint64_t>();
  if (!g.at("timeout_seconds").is_null())
    r.guards.timeout_seconds = g.at("timeout_seconds").get<double>();
  r.guards.tripped = g.at("tripped").get<std::string>();

  r.seed = j.at("seed").get<std::uint64_t>();
  r.retries = j.at("retries").get<unsigned>();
  for (const auto& [k, v] : j.at("timings").items()) r.timings[k] = v.get<double>();

  if (!j.at("error").is_null()) {
    const auto& e = j.at("error");
    ErrorText err{e.at("kind").get<std::string>(), e.at("message").get<std::string>(), {},
                  e.at("expected").get<std::vector<std::string>>()};
    if (!e.at("span").is_null()) {
      const auto& s = e.at("span");
      err.span = SourceSpan{s.at("line").get<std::size_t>(), s.at("column").get<std::size_t>(),
                            s.at("offset").get<std::size_t>(), s.at("length").get<std::size_t>()};
    }
    r.error = std::move(err);
  }
  return r;
}

std::string ideal_text(const IdealText& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    if (i > 0) out += ", ";
    out += ideal.generators[i];
  }
  return out + ")";
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command;
  if (!r.source.empty()) out << " " << r.source;
  out << "\nstatus: " << r.status << "\n";
  if (r.error) {
    out << "error: " << r.error->kind << ": " << r.error->message << "\n";
    if (r.error->span)
      out << "  at line " << r.error->span->line << ", column " << r.error->span->column << "\n";
  }
  if (!r.guards.tripped.empty()) out << "tripped guard: " << r.guards.tripped << "\n";
  if (r.verdict) {
    out << "verdict: " << *r.verdict << "\n";
    out << "n = " << r.power << (r.power_overridden ? " (overridden)" : "") << "\n";
    out << "cover: " << r.cover_mode << "\n";
  }
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    const auto& w = r.witness[i];
    out << "witness " << i + 1 << ":\n"
        << "  associated prime: " << ideal_text(w.prime) << "\n"
        << "  contraction:      " << ideal_text(w.contraction) << "\n"
        << "  separator:        " << w.separator << "\n"
        << "  torsion element:  " << w.torsion_element << "\n";
  }
  if (!r.associated.empty()) {
    out << "associated primes:\n";
    for (const auto& [prime, contraction] : r.associated)
      out << "  " << ideal_text(prime) << "  ->  " << ideal_text(contraction) << "\n";
  }
  if (!r.hypotheses.empty()) {
    out << "hypotheses:\n";
    for (const auto& h : r.hypotheses)
      out << "  " << std::left << std::setw(26) << h.name << std::setw(15) << h.status << h.detail
          << "\n";
  }
  if (!r.renaming.empty()) {
    out << "renaming:";
    for (const auto& [from, to] : r.renaming) out << " " << from << "->" << to;
    out << "\n";
  }
  for (const auto& i : r.ideals)
    out << i.name << " in " << i.ring << ": " << ideal_text(i) << "\n";
  std::string last;
  for (const auto& c : r.components) {
    if (c.ideal != last) out << "components of " << c.ideal << ":\n";
    last = c.ideal;
    out << "  primary " << ideal_text(c.primary) << "\n    prime " << ideal_text(c.prime) << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "seed: " << r.seed << "\n";
  if (!r.timings.empty()) {
    out << "timings:";
    for (const auto& [k, v] : r.timings) out << " " << k << "=" << std::setprecision(3) << v << "s";
    out << "\n";
  }
  out << "tool: flatcheck " << r.tool_version << "\n";
  return out.str();
}

}  // namespace

std::string tool_version() { return FLATCHECK_VERSION; }

IdealText IdealText::of(const std::string& name, const Ideal& ideal) {
  IdealText t{name, ideal.ring()->describe(), {}};
  const Ideal canonical = ideal.canonical();
  for (const auto& g : canonical.generators()) t.generators.push_back(g.to_string());
  return t;
}

int Report::exit_code() const {
  if (status == "ok") return 0;
  if (status == "guard_exceeded") return 3;
  return 2;
}

void fill_hypotheses(Report& report, const HypothesisReport& hypotheses) {
  report.cover_mode = hypotheses.cover_mode;
  report.hypotheses.clear();
  for (const auto& c : hypotheses.checks)
    report.hypotheses.push_back(HypothesisText{c.name, to_string(c.status), c.detail});
}

void fill_verdict(Report& report, const Verdict& verdict) {
  report.verdict = to_string(verdict.result);
  report.power = verdict.power;
  report.power_overridden = verdict.power_overridden;
  fill_hypotheses(report, verdict.hypotheses);
  for (const auto& w : verdict.witnesses)
    report.witness.push_back(WitnessText{IdealText::of("P", w.prime),
                                         IdealText::of("contraction", w.contraction),
                                         w.separator.to_string(), w.torsion_element.to_string()});
  for (std::size_t i = 0; i < verdict.associated_primes.size(); ++i)
    report.associated.emplace_back(IdealText::of("P", verdict.associated_primes[i]),
                                   IdealText::of("contraction", verdict.contractions[i]));
  report.renaming = verdict.fibred.renaming;
  report.ideals.push_back(IdealText::of("J", verdict.fibred.J));
  report.notes.insert(report.notes.end(), verdict.notes.begin(), verdict.notes.end());
  for (const auto& c : verdict.fibred.collisions) report.notes.push_back("renamed " + c);
  report.retries = verdict.stats.retries;
  for (const auto& [k, v] : verdict.timings) report.timings[k] = v;
}

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(report).dump(2) + "\n";
  return render_text(report);
}

std::string render_reports(const std::vector<Report>& reports, ReportFormat format) {
  if (reports.size() == 1) return render_report(reports.front(), format);
  if (format == ReportFormat::json) {
    ordered_json all = ordered_json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    return all.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += "\n";
    out += render_text(reports[i]);
  }
  return out;
}

Report parse_report_json(const std::string& text) {
  try {
    return from_json(ordered_json::parse(text));
  } catch (const ordered_json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

}  // namespace flatcheck
