#ifndef NZFLOW_IO_HPP
#define NZFLOW_IO_HPP

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "assigning.hpp"
#include "errors.hpp"
#include "flows.hpp"
#include "graph.hpp"

namespace nzflow::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto t = std::string_view(line);
    t = trim(t.substr(0, t.find('#')));
    if (t.empty()) continue;
    out.emplace_back(number, std::string(t));
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected " + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    auto j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Graph document: header `n m`, then m lines `tail head`; `#` comments.
inline MultiGraph parse_graph(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError("graph document is empty; expected header 'n m'");
  const auto header = detail::split_ws(lines[0].second);
  if (header.size() != 2) throw ParseError("line " + std::to_string(lines[0].first) + ": header must be 'n m'");
  const auto n = detail::parse_uint(header[0], lines[0].first, "vertex count");
  const auto m = detail::parse_uint(header[1], lines[0].first, "edge count");
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                     " edge lines follow");
  }
  if (n > kMaxSetSize || m > kMaxSetSize) throw ParseError("graphs are limited to 64 vertices and 64 edges");
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [number, text] = lines[i];
    const auto toks = detail::split_ws(text);
    if (toks.size() != 2) throw ParseError("line " + std::to_string(number) + ": edge must be 'tail head'");
    const auto t = detail::parse_uint(toks[0], number, "tail vertex");
    const auto h = detail::parse_uint(toks[1], number, "head vertex");
    if (t >= n || h >= n) throw ParseError("line " + std::to_string(number) + ": vertex id out of range");
    ends.emplace_back(static_cast<VertexId>(t), static_cast<VertexId>(h));
  }
  return MultiGraph(n, ends);
}

inline MultiGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

inline GroupElement parse_element(std::string_view text, const GroupSpec& spec, std::size_t line) {
  const auto toks = detail::split_commas(text);
  if (toks.size() != spec.rank()) {
    throw ParseError("line " + std::to_string(line) + ": expected " + std::to_string(spec.rank()) + " residue(s) for " +
                     spec.name());
  }
  GroupElement x;
  for (std::size_t j = 0; j < toks.size(); ++j) {
    const auto r = detail::parse_uint(toks[j], line, "residue");
    if (r >= spec.cyclic_orders()[j]) {
      throw ParseError("line " + std::to_string(line) + ": residue " + std::to_string(r) + " out of range for Z" +
                       std::to_string(spec.cyclic_orders()[j]));
    }
    x.residues.push_back(static_cast<Residue>(r));
  }
  return x;
}

/// One group element per vertex line, residues comma-separated.
inline BFunction parse_b(std::istream& in, const GroupSpec& spec, std::size_t vertex_count) {
  const auto lines = detail::content_lines(in);
  if (lines.size() != vertex_count) {
    throw ParseError("b document has " + std::to_string(lines.size()) + " value lines for " +
                     std::to_string(vertex_count) + " vertices");
  }
  BFunction b{spec, {}};
  for (const auto& [number, text] : lines) b.values.push_back(parse_element(text, spec, number));
  return b;
}

inline BFunction parse_b(std::string_view text, const GroupSpec& spec, std::size_t vertex_count) {
  std::istringstream in{std::string(text)};
  return parse_b(in, spec, vertex_count);
}

inline std::string format_b(const BFunction& b) {
  std::string out;
  for (const auto& x : b.values) out += GroupSpec::format(x) + '\n';
  return out;
}

/// Comma-separated edge ids, smallest first.
inline EdgeOrder parse_order(std::string_view text, const MultiGraph& g) {
  std::vector<EdgeId> ids;
  if (!detail::trim(text).empty()) {
    for (auto tok : detail::split_commas(text)) ids.push_back(static_cast<EdgeId>(detail::parse_uint(tok, 1, "edge id")));
  }
  try {
    return EdgeOrder(g, std::move(ids));
  } catch (const InputError& e) {
    throw ParseError(std::string("bad --order: ") + e.what());
  }
}

template <class Range>
std::string join(const Range& r, std::string_view sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

/// "{0,2}"
template <class Set>
std::string format_set(Set s) {
  return "{" + join(s.members()) + "}";
}

template <class Set>
std::string format_sets(const std::vector<Set>& sets) {
  std::vector<std::string> parts;
  for (auto s : sets) parts.push_back(format_set(s));
  return "[" + join(parts, " ") + "]";
}

/// Line-oriented `key: value` report; fields print in insertion order.
class Report {
 public:
  Report& add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  template <class T>
    requires std::is_arithmetic_v<T>
  Report& add(std::string key, T value) {
    if constexpr (std::is_same_v<T, bool>) {
      return add(std::move(key), std::string(value ? "true" : "false"));
    } else {
      return add(std::move(key), std::to_string(value));
    }
  }
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

  void write(std::ostream& out) const {
    for (const auto& [k, v] : fields_) out << k << ": " << v << '\n';
  }
  std::string str() const {
    std::ostringstream out;
    write(out);
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace nzflow::io

#endif  // NZFLOW_IO_HPP
