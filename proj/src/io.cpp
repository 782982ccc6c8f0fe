#include "unsharp/io.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>

#include "unsharp/error.hpp"

namespace unsharp {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw error(errc::syntax_error, "line " + std::to_string(line) + ": " + what);
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

poset poset_document::to_poset() const { return poset::from_covers(labels, covers); }

std::vector<poset_document> parse_poset_file(std::string_view text) {
  std::vector<poset_document> docs;
  std::vector<bool> saw_elements;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_ws(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (words[0] == "poset") {
      if (words.size() != 2) syntax(line_no, "expected 'poset <name>'");
      docs.push_back(poset_document{std::string(words[1]), {}, {}, line_no});
      saw_elements.push_back(false);
    } else if (words[0] == "elements:") {
      if (docs.empty()) syntax(line_no, "'elements:' before any 'poset' header");
      for (std::size_t i = 1; i < words.size(); ++i) docs.back().labels.emplace_back(words[i]);
      saw_elements.back() = true;
    } else if (words[0] == "covers:") {
      if (docs.empty()) syntax(line_no, "'covers:' before any 'poset' header");
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string_view item = words[i];
        const std::size_t lt = item.find('<');
        if (lt == std::string_view::npos || lt == 0 || lt + 1 == item.size() ||
            item.find('<', lt + 1) != std::string_view::npos) {
          syntax(line_no, "malformed cover '" + std::string(item) + "', expected x<y");
        }
        docs.back().covers.emplace_back(std::string(item.substr(0, lt)), std::string(item.substr(lt + 1)));
      }
    } else {
      syntax(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
    if (end == text.size()) break;
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!saw_elements[i]) syntax(docs[i].line, "poset '" + docs[i].name + "' has no 'elements:' line");
  }
  return docs;
}

std::string write_poset_document(std::string_view name, const poset& p) {
  std::ostringstream out;
  out << "poset " << name << "\nelements:";
  for (const auto& l : p.labels()) out << ' ' << l;
  out << "\ncovers:";
  for (const auto& [lo, hi] : cover_relation(p)) out << ' ' << p.label(lo) << '<' << p.label(hi);
  out << '\n';
  return out.str();
}

std::string_view table_symbol(table_kind kind) {
  switch (kind) {
    case table_kind::section: return "x^y";
    case table_kind::implication: return "->";
    case table_kind::conjunction: return ".";
    case table_kind::relative: return "*";
    case table_kind::circ: return "o";
  }
  return "?";
}

std::string render_cell(const std::optional<element_set>& cell, const std::vector<std::string>& labels) {
  if (!cell) return "-";
  if (cell->is_singleton()) return labels[cell->single()];
  std::string out = "{";
  bool first = true;
  for (element e : *cell) {
    if (!first) out += ',';
    out += labels[e];
    first = false;
  }
  return out + "}";
}

std::string render_table(const operator_table& table, const std::vector<std::string>& labels) {
  const std::size_t n = table.size();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t head_width = table_symbol(table.kind()).size();
  std::vector<std::size_t> width(n);
  for (element y = 0; y < n; ++y) width[y] = labels[y].size();
  for (element x = 0; x < n; ++x) {
    head_width = std::max(head_width, labels[x].size());
    for (element y = 0; y < n; ++y) {
      cells[x][y] = render_cell(table.at(x, y), labels);
      width[y] = std::max(width[y], cells[x][y].size());
    }
  }

  auto row = [&](std::string_view head, auto&& cell_text) {
    std::string line(head);
    line.resize(head_width, ' ');
    line += " |";
    for (element y = 0; y < n; ++y) {
      std::string c = cell_text(y);
      c.resize(width[y], ' ');
      line += ' ' + c;
    }
    line.erase(line.find_last_not_of(' ') + 1);
    return line + '\n';
  };

  std::string out = row(table_symbol(table.kind()), [&](element y) { return labels[y]; });
  std::size_t body = 0;
  for (std::size_t w : width) body += w + 1;
  out += std::string(head_width, '-') + "-+" + std::string(body, '-') + '\n';
  for (element x = 0; x < n; ++x) out += row(labels[x], [&](element y) { return cells[x][y]; });
  return out;
}

std::string to_dot(std::string_view name, const poset& p) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (const auto& l : p.labels()) out << "  " << quoted(l) << ";\n";
  for (const auto& [lo, hi] : cover_relation(p)) {
    out << "  " << quoted(p.label(lo)) << " -> " << quoted(p.label(hi)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::json witness_json(const witness& w, const std::vector<std::string>& labels) {
  auto arr = nlohmann::json::array();
  for (element e : w) arr.push_back(e < labels.size() ? labels[e] : "#" + std::to_string(e));
  return arr;
}

}  // namespace

std::string report_to_json(std::string_view name, const check_report& report,
                           const std::vector<std::string>& labels) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const verdict& v : report.verdicts()) {
    nlohmann::json j{{"law", v.law}, {"pass", v.pass}};
    if (!v.witnesses.empty()) j["witness"] = witness_json(v.witnesses.front(), labels);
    if (!v.note.empty()) j["note"] = v.note;
    if (!v.pass) j["failures"] = v.failures;
    if (report.all_witnesses() && !v.witnesses.empty()) {
      auto all = nlohmann::json::array();
      for (const witness& w : v.witnesses) all.push_back(witness_json(w, labels));
      j["witnesses"] = std::move(all);
    }
    verdicts.push_back(std::move(j));
  }
  return nlohmann::json{{"name", name}, {"verdicts", std::move(verdicts)}}.dump();
}

std::string report_to_text(std::string_view name, const check_report& report,
                           const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "poset " << name << '\n';
  for (const verdict& v : report.verdicts()) {
    out << (v.pass ? "  PASS  " : "  FAIL  ") << v.law;
    if (!v.pass) {
      if (!v.note.empty()) out << "  [" << v.note << ']';
      if (!v.witnesses.empty()) {
        out << "  witness " << render_witness(v.witnesses.front(), labels);
        if (v.failures > 1) out << " (" << v.failures << " failing tuples)";
      }
      if (report.all_witnesses()) {
        for (std::size_t i = 1; i < v.witnesses.size(); ++i) {
          out << "\n          also " << render_witness(v.witnesses[i], labels);
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace unsharp
