#include "text.hpp"

#include <cctype>

#include "hrgpg/errors.hpp"

namespace hrgpg::detail {
namespace {

bool ident_start(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

bool ident_char(char ch) { return ident_start(ch) || ch == '\'' || ch == '#' || ch == '.'; }

struct Fold {
  std::string_view utf8;
  std::string_view ascii;
};

constexpr Fold kFolds[] = {
    {"⟨", "<"}, {"⟩", ">"}, {"∧", "&"}, {"⇒", "=>"}, {"→", "->"},
};

constexpr std::string_view kMinus = "−";

}  // namespace

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '#') break;
    if (ident_start(ch)) {
      std::size_t j = i + 1;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({TokenKind::Ident, std::string(line.substr(i, j - i))});
      i = j;
      continue;
    }
    const bool ascii_minus = ch == '-' && i + 1 < line.size() &&
                             std::isdigit(static_cast<unsigned char>(line[i + 1]));
    const bool unicode_minus = line.substr(i, kMinus.size()) == kMinus &&
                               i + kMinus.size() < line.size() &&
                               std::isdigit(static_cast<unsigned char>(line[i + kMinus.size()]));
    if (ascii_minus || unicode_minus) {
      std::size_t j = i + (ascii_minus ? 1 : kMinus.size());
      const std::size_t digits = j;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({TokenKind::Ident, "-" + std::string(line.substr(digits, j - digits))});
      i = j;
      continue;
    }
    if (line.substr(i, 2) == "->" || line.substr(i, 2) == "=>") {
      out.push_back({TokenKind::Punct, std::string(line.substr(i, 2))});
      i += 2;
      continue;
    }
    bool folded = false;
    for (const auto& f : kFolds) {
      if (line.substr(i, f.utf8.size()) == f.utf8) {
        out.push_back({TokenKind::Punct, std::string(f.ascii)});
        i += f.utf8.size();
        folded = true;
        break;
      }
    }
    if (folded) continue;
    static constexpr std::string_view kPunct = "(),:=/<>&[]";
    if (kPunct.find(ch) != std::string_view::npos) {
      out.push_back({TokenKind::Punct, std::string(1, ch)});
      ++i;
      continue;
    }
    throw SyntaxError(line_no, "unexpected character '" + std::string(1, ch) + "'");
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool Cursor::peek_is(std::string_view punct) const {
  const Token* t = peek();
  return t != nullptr && t->kind == TokenKind::Punct && t->text == punct;
}

bool Cursor::accept(std::string_view punct) {
  if (!peek_is(punct)) return false;
  ++pos_;
  return true;
}

void Cursor::expect(std::string_view punct) {
  if (!accept(punct)) {
    const Token* t = peek();
    fail("expected '" + std::string(punct) + "'" +
         (t ? ", found '" + t->text + "'" : std::string(" at end of line")));
  }
}

std::string Cursor::ident(std::string_view what) {
  const Token* t = peek();
  if (t == nullptr || t->kind != TokenKind::Ident) {
    fail("expected " + std::string(what) + (t ? ", found '" + t->text + "'" : std::string()));
  }
  ++pos_;
  return t->text;
}

int Cursor::integer(std::string_view what) {
  const std::string text = ident(what);
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  fail("expected " + std::string(what) + ", found '" + text + "'");
}

void Cursor::expect_end() {
  if (!at_end()) fail("unexpected '" + peek()->text + "'");
}

void Cursor::fail(const std::string& message) const { throw SyntaxError(line_, message); }

LabelDecl label_decl(Cursor& c) {
  LabelDecl d;
  d.name = c.ident("label name");
  c.expect("/");
  d.arity = c.integer("arity");
  if (d.arity < 0) c.fail("negative arity for '" + d.name + "'");
  return d;
}

std::vector<std::string> node_list(Cursor& c) {
  std::vector<std::string> nodes;
  c.expect("(");
  if (c.accept(")")) return nodes;
  do {
    nodes.push_back(c.ident("node name"));
  } while (c.accept(","));
  c.expect(")");
  return nodes;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace hrgpg::detail
