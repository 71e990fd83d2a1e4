#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/digraph.hpp"

namespace metdim {

/// Malformed input document. `line()` is 1-based; 0 means "whole document".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list document: optional '#' comment lines, a header "n m", then
/// exactly m lines "u v" with 0 <= u,v < n and u != v. Blank lines are
/// ignored. Duplicate arcs are rejected.
DiGraph parse_edge_list(std::string_view text);
DiGraph read_edge_list(const std::filesystem::path& path);

/// Inverse of parse_edge_list. Each entry of `comments` becomes a leading
/// "# ..." line.
std::string to_edge_list(const DiGraph& g, const std::vector<std::string>& comments = {});

std::string to_dot(const DiGraph& g, std::string_view name = "G");

/// Whitespace-separated vertex ids; every id must be < n.
std::vector<Vertex> parse_vertex_list(std::string_view text, std::size_t n);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace metdim
