#include "hrgpg/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "hrgpg/errors.hpp"
#include "text.hpp"

namespace hrgpg {

using detail::Cursor;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("file not found: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

NamedGraph parse_graph(std::string_view text) {
  NamedGraph out;
  bool header = false;
  bool ext_seen = false;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    Cursor c(detail::tokenize(line, line_no), line_no);
    if (c.at_end()) continue;
    const std::string keyword = c.ident("directive");
    if (keyword == "graph") {
      if (header) c.fail("duplicate 'graph' header");
      out.name = c.ident("graph name");
      header = true;
    } else if (!header) {
      c.fail("expected 'graph <name>' header before '" + keyword + "'");
    } else if (keyword == "edge") {
      Edge e;
      e.id = c.ident("edge id");
      e.label = c.ident("edge label");
      e.attachments = detail::node_list(c);
      out.graph.add_edge(std::move(e));
    } else if (keyword == "ext") {
      if (ext_seen) c.fail("duplicate 'ext' line");
      out.graph.set_externals(detail::node_list(c));
      ext_seen = true;
    } else {
      c.fail("unknown directive '" + keyword + "'");
    }
    c.expect_end();
  }
  if (!header) throw SyntaxError(0, "missing 'graph <name>' header");
  return out;
}

NamedGraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string write_graph(const NamedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.name << '\n';
  for (const auto& e : g.graph.edges()) {
    out << "edge " << e.id << ' ' << e.label << " (" << detail::join(e.attachments, ", ") << ")\n";
  }
  if (!g.graph.externals().empty()) {
    out << "ext (" << detail::join(g.graph.externals(), ", ") << ")\n";
  }
  return out.str();
}

}  // namespace hrgpg
