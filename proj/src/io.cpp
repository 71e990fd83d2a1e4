#include "metdim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace metdim {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool parse_number(std::string_view word, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc() && ptr == word.data() + word.size();
}

}  // namespace

DiGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (words.size() != 2) throw ParseError(line_no, "expected two integers, got " + std::to_string(words.size()) + " fields");

    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_number(words[0], a) || !parse_number(words[1], b)) {
      throw ParseError(line_no, have_header ? "malformed arc line" : "malformed header, expected \"n m\"");
    }
    if (!have_header) {
      if (a > 0xFFFFFFFFull) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      arcs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
    } else {
      if (arcs.size() == m) throw ParseError(line_no, "more arc lines than the header's m = " + std::to_string(m));
      if (a >= n || b >= n) throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
      if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
      if (!seen.insert((a << 32) | b).second) {
        throw ParseError(line_no, "duplicate arc " + std::to_string(a) + " " + std::to_string(b));
      }
      arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (arcs.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " arc lines, found " + std::to_string(arcs.size()));
  }
  return DiGraph(static_cast<std::size_t>(n), std::move(arcs));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DiGraph read_edge_list(const std::filesystem::path& path) { return parse_edge_list(read_text_file(path)); }

std::string to_edge_list(const DiGraph& g, const std::vector<std::string>& comments) {
  std::string out;
  out.reserve(16 * (g.arc_count() + 1));
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += std::to_string(a.from);
    out += ' ';
    out += std::to_string(a.to);
    out += '\n';
  }
  return out;
}

std::string to_dot(const DiGraph& g, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Arc& a : g.arcs()) out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) + ";\n";
  out += "}\n";
  return out;
}

std::vector<Vertex> parse_vertex_list(std::string_view text, std::size_t n) {
  std::vector<Vertex> result;
  std::size_t line_no = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\n') ++line_no;
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::uint64_t v = 0;
    if (!parse_number(text.substr(start, i - start), v)) throw ParseError(line_no, "malformed vertex id");
    if (v >= n) throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
    result.push_back(static_cast<Vertex>(v));
  }
  return result;
}

}  // namespace metdim
