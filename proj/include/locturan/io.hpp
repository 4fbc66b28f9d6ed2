#pragma once

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "locturan/graph.hpp"

namespace locturan {

// graph6: size header, then the upper triangle in column-major order
// ((0,1),(0,2),(1,2),(0,3),...) packed six bits per byte, each byte offset by 63.
// Orders up to 62 use a one-byte header; 63 and 64 use the 126-prefixed form.
// Padding bits must be zero. A trailing newline and a leading ">>graph6<<"
// marker are accepted.
inline Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view kMarker = ">>graph6<<";
  if (text.starts_with(kMarker)) base = kMarker.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto value_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 input truncated", i);
    const int ch = static_cast<unsigned char>(text[i]);
    if (ch < 63 || ch > 126) throw ParseError("graph6 byte out of range", i);
    return ch - 63;
  };

  std::size_t pos = base;
  if (pos >= text.size()) throw ParseError("graph6 input is empty", pos);
  long n = value_at(pos);
  if (n == 63) {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6 order exceeds 64", pos);
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | value_at(pos + static_cast<std::size_t>(k));
    if (n <= 62) throw ParseError("non-canonical graph6 size header", pos);
    if (n > kMaxVertices) throw ParseError("graph6 order " + std::to_string(n) + " exceeds 64", pos);
    pos += 4;
  } else {
    pos += 1;
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  for (std::size_t i = pos; i < text.size(); ++i) value_at(i);
  if (text.size() < pos + payload) throw ParseError("graph6 payload truncated", text.size());
  if (text.size() > pos + payload) throw ParseError("trailing garbage after graph6 payload", pos + payload);

  GraphBuilder b(order);
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = value_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (; k < payload * 6; ++k)
    if ((value_at(pos + k / 6) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero graph6 padding bit", pos + k / 6);
  return b.build();
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

// Edge-list text: a header line "n <count>", then one "u v" pair per line.
// Blank lines and '#' comments are ignored.
inline Graph parse_edge_list(std::string_view text) {
  std::size_t line_start = 0;
  bool have_header = false;
  GraphBuilder b(0);
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<long, std::size_t>> fields;
    std::string_view header_word;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::string_view tok = line.substr(i, j - i);
      if (!have_header && fields.empty() && header_word.empty() && tok == "n") {
        header_word = tok;
      } else {
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
          throw ParseError("expected an integer", line_start + i);
        fields.emplace_back(value, line_start + i);
      }
      i = j;
    }

    if (!header_word.empty() || !fields.empty()) {
      if (!have_header) {
        if (header_word.empty() || fields.size() != 1)
          throw ParseError("edge list must start with 'n <count>'", line_start);
        if (fields[0].first < 0 || fields[0].first > kMaxVertices)
          throw ParseError("vertex count outside [0, 64]", fields[0].second);
        b = GraphBuilder(static_cast<int>(fields[0].first));
        have_header = true;
      } else {
        if (fields.size() != 2 || !header_word.empty())
          throw ParseError("expected 'u v'", line_start);
        for (auto [value, offset] : fields)
          if (value < 0 || value >= b.order()) throw ParseError("vertex id out of range", offset);
        if (fields[0].first == fields[1].first) throw ParseError("self-loop", fields[0].second);
        b.add_edge(static_cast<Vertex>(fields[0].first), static_cast<Vertex>(fields[1].first));
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!have_header) throw ParseError("edge list is missing its 'n <count>' header", 0);
  return b.build();
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// Reads a whole input document: either one edge list (first meaningful line
// starts with "n") or any number of graph6 lines. Blank lines are skipped.
inline std::vector<Graph> parse_graphs(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[first]))) {
      ++first;
    } else if (text[first] == '#') {
      first = text.find('\n', first);
      if (first == std::string_view::npos) first = text.size();
    } else {
      break;
    }
  }
  if (first >= text.size()) return {};
  if (text[first] == 'n' && first + 1 < text.size() &&
      std::isspace(static_cast<unsigned char>(text[first + 1])))
    return {parse_edge_list(text)};

  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace locturan
