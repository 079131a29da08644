#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hrgpg/enumerate.hpp"
#include "hrgpg/errors.hpp"
#include "hrgpg/grammar_io.hpp"
#include "hrgpg/graph_io.hpp"
#include "hrgpg/json.hpp"
#include "hrgpg/oracle.hpp"
#include "hrgpg/plr.hpp"
#include "hrgpg/transform.hpp"

namespace hrgpg::cli {

using nlohmann::json;

namespace {

struct Report {
  std::string command;
  json inputs = json::array();
  std::string outcome = "ok";  // ok | violation | conflict | reject | error
  json payload = json::object();
  std::string text;
};

struct Flags {
  bool json = false;
  bool ascii = false;
  bool compact = false;

  Notation notation() const { return {!ascii, compact}; }
};

enum class FileKind { Grammar, Graph, Positional };

FileKind detect(const std::string& path, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first[0] == '#') continue;
    if (first == "grammar") return FileKind::Grammar;
    if (first == "graph") return FileKind::Graph;
    if (first == "pg") return FileKind::Positional;
    break;
  }
  throw SyntaxError(0, path + ": expected a 'grammar', 'graph' or 'pg' header");
}

struct Loaded {
  FileKind kind;
  std::string text;
};

Loaded load(const std::string& path) {
  std::string text = read_text_file(path);
  const FileKind kind = detect(path, text);
  return {kind, std::move(text)};
}

// Grammar-like input: an HRG file, or a positional grammar file realized back
// into an HRG.
struct GrammarInput {
  Hrg hrg;
  std::optional<PositionalGrammar> positional;
};

GrammarInput load_grammar(const std::string& path) {
  Loaded file = load(path);
  if (file.kind == FileKind::Graph) throw SyntaxError(0, path + ": expected a grammar, found a graph");
  if (file.kind == FileKind::Grammar) return {parse_grammar(file.text), std::nullopt};
  PositionalGrammar pg = parse_positional_grammar(file.text);
  Hrg hrg = realize_grammar(pg);
  return {std::move(hrg), std::move(pg)};
}

PositionalGrammar positional_of(const GrammarInput& in) {
  return in.positional ? *in.positional : translate_grammar(in.hrg);
}

NamedGraph load_graph(const std::string& path) {
  Loaded file = load(path);
  if (file.kind != FileKind::Graph) throw SyntaxError(0, path + ": expected a graph file");
  return parse_graph(file.text);
}

std::string format_graph(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) {
    if (!out.empty()) out += ' ';
    out += e.label + "(";
    for (std::size_t i = 0; i < e.attachments.size(); ++i) out += (i ? "," : "") + e.attachments[i];
    out += ")";
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

void list_violations(Report& r, const ValidationReport& violations, const std::string& subject) {
  r.payload["violations"] = violations;
  if (violations.empty()) {
    r.text += "ok: " + subject + "\n";
    return;
  }
  r.outcome = "violation";
  for (const auto& v : violations) r.text += "violation: " + std::string(to_string(v.kind)) + ": " + v.message + "\n";
}

// --- validate -------------------------------------------------------------

Report cmd_validate(const std::string& path, const std::string& grammar_path) {
  Report r;
  r.command = "validate";
  r.inputs.push_back(path);
  Loaded file = load(path);
  switch (file.kind) {
    case FileKind::Grammar: {
      const Hrg g = parse_grammar(file.text);
      r.payload["kind"] = "grammar";
      r.payload["productions"] = g.productions.size();
      list_violations(r, validate_grammar(g),
                      "grammar " + g.name + " (" + std::to_string(g.productions.size()) + " productions)");
      break;
    }
    case FileKind::Graph: {
      const NamedGraph named = parse_graph(file.text);
      r.payload["kind"] = "graph";
      r.payload["graph"] = named.graph;
      ValidationReport violations;
      if (!grammar_path.empty()) {
        r.inputs.push_back(grammar_path);
        violations = validate(named.graph, load_grammar(grammar_path).hrg.labels());
      } else {
        violations = validate(named.graph);
      }
      list_violations(r, violations,
                      "graph " + named.name + " (" + std::to_string(named.graph.node_count()) + " nodes, " +
                          std::to_string(named.graph.edge_count()) + " edges)");
      break;
    }
    case FileKind::Positional: {
      const PositionalGrammar pg = parse_positional_grammar(file.text);
      r.payload["kind"] = "pg";
      json axioms = json::array();
      for (const auto& p : pg.productions) {
        const auto report = check_relation_axioms(p);
        for (const auto& issue : report.issues) {
          axioms.push_back(p.name + ": " + issue);
          r.text += "violation: relation axioms: " + p.name + ": " + issue + "\n";
          r.outcome = "violation";
        }
      }
      r.payload["axiom_issues"] = axioms;
      if (r.outcome == "ok") {
        list_violations(r, validate_grammar(realize_grammar(pg)),
                        "positional grammar " + pg.name + " (" + std::to_string(pg.productions.size()) +
                            " productions)");
      }
      break;
    }
  }
  return r;
}

// --- translate ------------------------------------------------------------

// Connectors whose node already had several earlier interfaces: the source
// choice is a convention worth pointing out.
std::vector<std::string> source_notes(const Hrg& g, const PositionalGrammar& pg) {
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < g.productions.size(); ++i) {
    const auto& edges = g.productions[i].rhs.edges();
    const auto& body = pg.productions[i].body;
    std::map<std::string, std::vector<InterfaceRef>> seen;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      for (std::size_t k = 0; k < edges[j].attachments.size(); ++k) {
        auto& earlier = seen[edges[j].attachments[k]];
        const bool before = !earlier.empty() && earlier.front().element < j;
        if (before && earlier.size() > 1) {
          notes.push_back(g.productions[i].name + ": " + format_interface_ref(body, {j, static_cast<int>(k + 1)}) +
                          " shares its node with " + std::to_string(earlier.size()) +
                          " earlier interfaces; the connector starts at the earliest, " +
                          format_interface_ref(body, earlier.front()));
        }
        earlier.push_back({j, static_cast<int>(k + 1)});
      }
    }
  }
  return notes;
}

Report cmd_translate(const std::string& path, const std::vector<std::string>& order, const Flags& flags) {
  Report r;
  r.command = "translate";
  r.inputs.push_back(path);
  Loaded file = load(path);
  const Notation n = flags.notation();
  if (file.kind == FileKind::Graph) {
    const NamedGraph named = parse_graph(file.text);
    std::vector<std::size_t> indices;
    for (const auto& id : order) {
      auto idx = named.graph.edge_index(id);
      if (!idx) throw DomainError("no edge '" + id + "' in " + named.name);
      indices.push_back(*idx);
    }
    const PositionalString s = translate_graph(named.graph, indices);
    r.payload["string"] = s;
    r.text = format_string(s, n) + "\n";
    return r;
  }
  const GrammarInput in = file.kind == FileKind::Grammar
                              ? GrammarInput{parse_grammar(file.text), std::nullopt}
                              : GrammarInput{realize_grammar(parse_positional_grammar(file.text)), std::nullopt};
  const PositionalGrammar pg = file.kind == FileKind::Grammar ? translate_grammar(in.hrg)
                                                              : parse_positional_grammar(file.text);
  r.payload["productions"] = pg.productions;
  for (const auto& p : pg.productions) r.text += p.name + ": " + format_production(p, n) + "\n";
  if (file.kind == FileKind::Grammar) {
    const auto notes = source_notes(in.hrg, pg);
    r.payload["notes"] = notes;
    for (const auto& note : notes) r.text += "note: " + note + "\n";
    if (!notes.empty()) r.text += "note: source conventions are listed in docs/paper-divergences.md\n";
  }
  return r;
}

// --- wf-check -------------------------------------------------------------

Report cmd_wf_check(const std::string& path) {
  Report r;
  r.command = "wf-check";
  r.inputs.push_back(path);
  const GrammarInput in = load_grammar(path);
  const PositionalGrammar pg = positional_of(in);
  json rows = json::array();
  for (const auto& p : pg.productions) {
    const auto wf = is_well_formed(p, pg.entering_of(p.lhs));
    const bool chained = is_chain_connected(p.body);
    rows.push_back(json{{"production", p.name},
                        {"well_formed", wf.ok},
                        {"chain_connected", chained},
                        {"failing_entering", wf.failing},
                        {"diagnostics", wf.diagnostics}});
    if (wf.ok && chained) {
      r.text += p.name + ": well-formed\n";
      continue;
    }
    r.outcome = "violation";
    for (const auto& d : wf.diagnostics) r.text += "violation: " + d + "\n";
    if (!chained) r.text += "violation: " + p.name + ": not chain-connected\n";
  }
  r.payload["productions"] = rows;
  return r;
}

// --- normalize ------------------------------------------------------------

Report cmd_normalize(const std::string& path, const NormalizeOptions& options, const std::string& output) {
  Report r;
  r.command = "normalize";
  r.inputs.push_back(path);
  const Hrg g = load_grammar(path).hrg;
  const NormalizeResult result = normalize(g, options);
  r.payload["assignments_tried"] = result.assignments_tried;
  r.payload["diagnostics"] = result.diagnostics;
  if (!result.ok) {
    const bool table_stage = !result.diagnostics.empty() &&
                             (result.diagnostics.front().rfind("no conflict-free", 0) == 0 ||
                              result.diagnostics.front().rfind("search budget", 0) == 0);
    r.outcome = table_stage ? "conflict" : "violation";
    r.text = "normalization failed\n";
    for (const auto& d : result.diagnostics) r.text += d + "\n";
    return r;
  }
  const std::string pg_text = write_positional_grammar(result.positional);
  r.payload["plan"] = result.plan;
  r.payload["pg"] = pg_text;
  r.text = format_plan(result.plan);
  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw IoError("cannot write " + output);
    file << pg_text;
    r.payload["output"] = output;
    r.text += "wrote " + output + "\n";
  } else {
    r.text += "\n" + pg_text;
  }
  return r;
}

// --- tables ---------------------------------------------------------------

Report cmd_tables(const std::string& path, const Flags& flags) {
  Report r;
  r.command = "tables";
  r.inputs.push_back(path);
  const ParseTable table = build_table(positional_of(load_grammar(path)));
  r.payload["table"] = table;
  r.text = format_table(table, flags.notation());
  if (!table.conflict_free()) r.outcome = "conflict";
  return r;
}

// --- parse ----------------------------------------------------------------

Report cmd_parse(const std::string& grammar_path, const std::string& graph_path, const std::string& start_edge,
                 bool all_starts) {
  Report r;
  r.command = "parse";
  r.inputs.push_back(grammar_path);
  r.inputs.push_back(graph_path);
  const GrammarInput in = load_grammar(grammar_path);
  const ParseTable table = build_table(positional_of(in));
  const NamedGraph named = load_graph(graph_path);

  if (all_starts) {
    const RecognitionReport rec = recognition_ambiguity(table, named.graph);
    const std::size_t trees = generation_ambiguity(in.hrg.without_duplicates(), named.graph);
    r.payload["recognition"] = rec;
    r.payload["generation_ambiguity"] = trees;
    for (const auto& run : rec.runs) {
      r.text += "start " + run.start_edge + ": " + run.outcome;
      if (run.outcome == "accept") {
        r.text += "  leaves " + join(run.leaves, " ") + "  productions " + join(run.productions, " ");
      } else {
        r.text += ": " + run.diagnostic;
      }
      r.text += "\n";
    }
    r.text += "recognition: " + std::to_string(rec.accepting) + " of " + std::to_string(rec.runs.size()) +
              " starts accept, " + std::to_string(rec.fetch_ambiguities) + " fetch ambiguities, " +
              std::to_string(rec.tree_classes) + " tree(s) up to rotation\n";
    r.text += "generation: " + std::to_string(trees) + " derivation tree(s)\n";
    if (rec.runs.empty() || rec.accepting != rec.runs.size() || rec.fetch_ambiguities > 0) r.outcome = "reject";
    return r;
  }

  std::optional<std::string> start;
  if (!start_edge.empty()) start = start_edge;
  try {
    const ParseResult result = parse(table, named.graph, start);
    r.payload["result"] = result;
    if (result.accepted()) {
      r.text = "accept from " + result.start_edge + " (" + std::to_string(result.stats.shifts) + " shifts, " +
               std::to_string(result.stats.reduces) + " reduces)\n" + format_tree(*result.tree);
    } else {
      r.outcome = "reject";
      r.text = "reject: " + result.diagnostic + "\n";
    }
  } catch (const AmbiguityError& e) {
    r.outcome = "reject";
    r.payload["result"] = json{{"outcome", "ambiguous"}, {"diagnostic", e.what()}};
    r.text = "ambiguous: " + std::string(e.what()) + "\n";
  }
  return r;
}

// --- enumerate / oracle ---------------------------------------------------

Report cmd_enumerate(const std::string& path, std::size_t k, const std::vector<std::string>& graphs) {
  Report r;
  r.command = "enumerate";
  r.inputs.push_back(path);
  const Hrg g = load_grammar(path).hrg.without_duplicates();
  EnumerateOptions options;
  options.max_edges = k;
  const auto classes = enumerate_graphs(g, options);
  r.payload["max_edges"] = k;
  r.payload["classes"] = classes;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    r.text += "class " + std::to_string(i + 1) + ": " + format_graph(c.representative) + "  trees " +
              std::to_string(c.derivations) + "  first " + join(c.first_derivation, " ") + "\n";
  }
  r.text += std::to_string(classes.size()) + " classes with at most " + std::to_string(k) + " edges\n";
  json rows = json::array();
  for (const auto& gp : graphs) {
    r.inputs.push_back(gp);
    const NamedGraph named = load_graph(gp);
    const std::size_t trees = generation_ambiguity(g, named.graph);
    rows.push_back(json{{"graph", named.name}, {"generation_ambiguity", trees}});
    r.text += named.name + ": " + std::to_string(trees) + " derivation tree(s)\n";
  }
  r.payload["graphs"] = rows;
  return r;
}

Report cmd_oracle(const std::string& path, const OracleOptions& options, const std::vector<std::string>& graphs) {
  Report r;
  r.command = "oracle";
  r.inputs.push_back(path);
  const Hrg g = load_grammar(path).hrg;
  std::vector<NamedGraph> corpus;
  for (const auto& gp : graphs) {
    r.inputs.push_back(gp);
    corpus.push_back(load_graph(gp));
  }
  const OracleReport report = run_oracle(g.without_duplicates(), corpus, options);
  json cases = json::array();
  for (const auto& c : report.cases) {
    cases.push_back(json{{"name", c.name},
                         {"edges", c.edges},
                         {"member", c.member},
                         {"parsed", c.parsed},
                         {"agrees", c.agrees()},
                         {"parser_note", c.parser_note}});
  }
  const std::size_t total = report.cases.size();
  r.payload["comparisons"] = total;
  r.payload["agreeing"] = report.agreeing;
  r.payload["members"] = report.members;
  r.payload["mutants"] = report.mutants;
  r.payload["seed"] = options.seed;
  r.payload["cases"] = cases;
  std::ostringstream text;
  text << "comparisons " << total << ", agreeing " << report.agreeing;
  if (total > 0) {
    text << " (" << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(report.agreeing) / total
         << "%)";
  }
  text << "\nlanguage graphs " << report.members << ", mutants " << report.mutants << ", corpus "
       << corpus.size() << ", seed " << options.seed << "\n";
  for (const auto& c : report.cases) {
    if (c.agrees()) continue;
    text << "disagree: " << c.name << " member=" << c.member << " parsed=" << c.parsed << " " << c.parser_note
         << "\n";
  }
  r.text = text.str();
  if (!report.all_agree()) r.outcome = "reject";
  return r;
}

int exit_code(const std::string& outcome) {
  if (outcome == "ok") return 0;
  if (outcome == "error") return 2;
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperedge replacement grammars as positional grammars: translation, normalization, pLR parsing"};
  app.name("hrgpg");
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_flag("--json", flags.json, "Print the structured run report");
  app.add_flag("--ascii", flags.ascii, "ASCII connector notation");
  app.add_flag("--compact", flags.compact, "Omit z = 0 in connectors");

  std::string file, grammar, graph, output, start_edge;
  std::vector<std::string> order, graphs;
  bool all_starts = false;
  NormalizeOptions normalize_options;
  std::size_t k = 4;
  OracleOptions oracle_options;

  auto* validate_cmd = app.add_subcommand("validate", "Check a grammar, graph or positional grammar file");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--grammar", grammar, "Check graph labels against this grammar");

  auto* translate_cmd = app.add_subcommand("translate", "Print positional productions or a positional string");
  translate_cmd->add_option("file", file)->required();
  translate_cmd->add_option("--order", order, "Edge ids in element order (graph files)")->delimiter(',');

  auto* wf_cmd = app.add_subcommand("wf-check", "Well-formedness of every production");
  wf_cmd->add_option("file", file)->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Reorder productions into a parsable positional grammar");
  normalize_cmd->add_option("file", file)->required();
  normalize_cmd->add_option("--max-duplicates", normalize_options.max_duplicates, "Duplicated copies allowed");
  normalize_cmd->add_flag("--wf-only", normalize_options.wf_only, "Stop at well-formedness, ignore the table");
  normalize_cmd->add_option("--search-budget", normalize_options.search_budget, "Plans tried before giving up");
  normalize_cmd->add_option("-o,--output", output, "Write the positional grammar here");

  auto* tables_cmd = app.add_subcommand("tables", "Build and dump the pLR table");
  tables_cmd->add_option("file", file)->required();

  auto* parse_cmd = app.add_subcommand("parse", "Parse a graph");
  parse_cmd->add_option("grammar", grammar)->required();
  parse_cmd->add_option("graph", graph)->required();
  parse_cmd->add_option("--start-edge", start_edge, "Edge id shifted first");
  parse_cmd->add_flag("--all-starts", all_starts, "Parse from every admissible start and compare trees");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the language up to k edges");
  enumerate_cmd->add_option("grammar", grammar)->required();
  enumerate_cmd->add_option("graphs", graphs, "Graphs whose derivation trees are counted");
  enumerate_cmd->add_option("-k,--max-edges", k, "Edge bound");

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check parser acceptance against enumeration");
  oracle_cmd->add_option("grammar", grammar)->required();
  oracle_cmd->add_option("graphs", graphs, "Extra graphs to compare");
  oracle_cmd->add_option("-k,--max-edges", oracle_options.max_edges, "Compare the language up to k edges");
  oracle_cmd->add_option("--mutations", oracle_options.mutations, "Out-of-language mutants");
  oracle_cmd->add_option("--seed", oracle_options.seed, "Mutation seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  Report report;
  try {
    if (validate_cmd->parsed()) {
      report = cmd_validate(file, grammar);
    } else if (translate_cmd->parsed()) {
      report = cmd_translate(file, order, flags);
    } else if (wf_cmd->parsed()) {
      report = cmd_wf_check(file);
    } else if (normalize_cmd->parsed()) {
      report = cmd_normalize(file, normalize_options, output);
    } else if (tables_cmd->parsed()) {
      report = cmd_tables(file, flags);
    } else if (parse_cmd->parsed()) {
      report = cmd_parse(grammar, graph, start_edge, all_starts);
    } else if (enumerate_cmd->parsed()) {
      report = cmd_enumerate(grammar, k, graphs);
    } else {
      report = cmd_oracle(grammar, oracle_options, graphs);
    }
  } catch (const DomainError& e) {
    report.outcome = "violation";
    report.payload = json{{"error", e.what()}};
    report.text = std::string("violation: ") + e.what() + "\n";
  } catch (const Error& e) {
    report.outcome = "error";
    report.payload = json{{"error", e.what()}};
    report.text.clear();
    err << "error: " << e.what() << '\n';
  }
  if (report.command.empty()) {
    for (const auto* sub : app.get_subcommands()) report.command = sub->get_name();
    if (!file.empty()) report.inputs.push_back(file);
    if (!grammar.empty()) report.inputs.push_back(grammar);
    if (!graph.empty()) report.inputs.push_back(graph);
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

  if (flags.json) {
    json j{{"command", report.command},
           {"inputs", report.inputs},
           {"outcome", report.outcome},
           {"payload", report.payload},
           {"elapsed_ms", elapsed.count()}};
    out << j.dump(2) << '\n';
  } else {
    out << report.text;
  }
  return exit_code(report.outcome);
}

}  // namespace hrgpg::cli
