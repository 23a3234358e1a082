#include "linknet/pajek.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <optional>
#include <vector>

#include "linknet/core.hpp"
#include "linknet/error.hpp"

namespace linknet::pajek {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  for (std::size_t number = 1;; ++number) {
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '%') lines.push_back({number, line});
    if (nl == std::string_view::npos) break;
  }
  return lines;
}

class Tokens {
 public:
  Tokens(const Line& line) : line_(line), rest_(line.text) {}

  std::optional<std::string_view> next() {
    rest_ = trim(rest_);
    if (rest_.empty()) return std::nullopt;
    std::size_t end = 0;
    while (end < rest_.size() && !is_space(rest_[end])) ++end;
    std::string_view tok = rest_.substr(0, end);
    rest_.remove_prefix(end);
    return tok;
  }

  /// A double-quoted label or a single bare token.
  std::optional<std::string> label() {
    rest_ = trim(rest_);
    if (rest_.empty()) return std::nullopt;
    if (rest_.front() == '"') {
      const std::size_t close = rest_.find('"', 1);
      if (close == std::string_view::npos) throw ParseError(line_.number, "unterminated label");
      std::string out(rest_.substr(1, close - 1));
      rest_.remove_prefix(close + 1);
      return out;
    }
    return std::string(*next());
  }

 private:
  const Line& line_;
  std::string_view rest_;
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<std::size_t> parse_count(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_real(std::string_view tok) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

// Larger headers are rejected instead of attempting the allocation.
constexpr std::size_t kMaxVertices = 100'000'000;

struct VertexHeader {
  std::size_t count = 0;
  std::optional<std::size_t> row_count;
};

bool is_keyword(const Line& line) { return line.text.front() == '*'; }

std::string keyword(const Line& line) {
  Tokens tok(line);
  return lower(*tok.next());
}

VertexHeader parse_vertex_header(const Line& line) {
  Tokens tok(line);
  tok.next();
  VertexHeader header;
  const auto n = tok.next();
  if (!n) throw BadVertexCount(line.number, "*Vertices without a vertex count");
  const auto count = parse_count(*n);
  if (!count) throw BadVertexCount(line.number, "bad vertex count '" + std::string(*n) + "'");
  if (*count > kMaxVertices) {
    throw BadVertexCount(line.number, "vertex count " + std::string(*n) + " exceeds the limit of " +
                                          std::to_string(kMaxVertices));
  }
  header.count = *count;
  if (const auto n1 = tok.next()) {
    const auto rows = parse_count(*n1);
    if (!rows) throw BadVertexCount(line.number, "bad row count '" + std::string(*n1) + "'");
    if (*rows > header.count) {
      throw BadVertexCount(line.number, "row count " + std::to_string(*rows) +
                                            " exceeds vertex count " +
                                            std::to_string(header.count));
    }
    header.row_count = *rows;
  }
  if (tok.next()) throw BadVertexCount(line.number, "unexpected token after vertex counts");
  return header;
}

// Position of the `*Vertices` line, skipping an optional `*Network` line.
std::size_t find_vertex_header(const std::vector<Line>& lines) {
  std::size_t pos = 0;
  if (pos < lines.size() && is_keyword(lines[pos]) && keyword(lines[pos]) == "*network") ++pos;
  if (pos >= lines.size()) throw BadVertexCount(lines.empty() ? 1 : lines.back().number,
                                                "missing *Vertices section");
  if (!is_keyword(lines[pos]) || keyword(lines[pos]) != "*vertices") {
    throw BadVertexCount(lines[pos].number, "expected *Vertices");
  }
  return pos;
}

std::size_t parse_vertex_index(std::string_view tok, std::size_t n, std::size_t line) {
  const auto v = parse_count(tok);
  if (!v) throw ParseError(line, "bad vertex number '" + std::string(tok) + "'");
  if (*v < 1 || *v > n) {
    throw IndexOutOfRange("vertex " + std::to_string(*v) + " outside 1.." + std::to_string(n),
                          line);
  }
  return *v;
}

std::string quoted(const std::string& label) {
  if (label.find('"') != std::string::npos) {
    throw Error("label '" + label + "' contains a double quote");
  }
  return '"' + label + '"';
}

void append_link(std::string& out, Index from, Index to, double weight) {
  out += std::to_string(from);
  out += ' ';
  out += std::to_string(to);
  out += ' ';
  out += format_number(weight);
  out += '\n';
}

// Header plus labels; returns the 1-based offset of column vertices.
std::size_t append_vertices(std::string& out, const NodeSetPtr& rows, const NodeSetPtr& cols) {
  const bool one_mode = same_mode(rows, cols);
  if (one_mode) {
    out += "*Vertices " + std::to_string(rows->size()) + "\n";
  } else {
    out += "*Vertices " + std::to_string(rows->size() + cols->size()) + " " +
           std::to_string(rows->size()) + "\n";
  }
  std::size_t v = 1;
  for (const auto& l : rows->labels()) out += std::to_string(v++) + " " + quoted(l) + "\n";
  if (!one_mode) {
    for (const auto& l : cols->labels()) out += std::to_string(v++) + " " + quoted(l) + "\n";
  }
  return one_mode ? 1 : rows->size() + 1;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto ptr = std::to_chars(buf, buf + sizeof buf, value).ptr;
  return std::string(buf, ptr);
}

SparseNetwork read_net(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  std::size_t pos = find_vertex_header(lines);
  const VertexHeader header = parse_vertex_header(lines[pos++]);
  const std::size_t n = header.count;

  std::vector<std::optional<std::string>> labels(n);
  for (; pos < lines.size() && !is_keyword(lines[pos]); ++pos) {
    Tokens tok(lines[pos]);
    const std::size_t v = parse_vertex_index(*tok.next(), n, lines[pos].number);
    if (labels[v - 1]) {
      throw ParseError(lines[pos].number, "vertex " + std::to_string(v) + " listed twice");
    }
    auto label = tok.label();
    labels[v - 1] = label ? *label : std::to_string(v);
  }

  // Default labels are vertex numbers; uniqueness is checked per mode.
  auto make_mode = [&](std::string name, std::size_t first, std::size_t last) {
    std::vector<std::string> out;
    out.reserve(last - first);
    for (std::size_t v = first; v < last; ++v) {
      out.push_back(labels[v] ? *labels[v] : std::to_string(v + 1));
    }
    try {
      return make_node_set(std::move(name), std::move(out));
    } catch (const Error& e) {
      throw ParseError(lines[find_vertex_header(lines)].number, e.what());
    }
  };
  const std::size_t n1 = header.row_count.value_or(n);
  const bool two_mode = header.row_count.has_value();
  NodeSetPtr rows = make_mode(two_mode ? "rows" : "vertices", 0, n1);
  NodeSetPtr cols = two_mode ? make_mode("cols", n1, n) : rows;

  std::vector<Entry> entries;
  while (pos < lines.size()) {
    const Line& head = lines[pos++];
    const std::string kind = keyword(head);
    const bool edges = kind == "*edges";
    if (!edges && kind != "*arcs") {
      if (kind == "*vertices") throw ParseError(head.number, "second *Vertices section");
      throw ParseError(head.number, "unsupported section " + kind);
    }
    for (; pos < lines.size() && !is_keyword(lines[pos]); ++pos) {
      const Line& line = lines[pos];
      Tokens tok(line);
      std::size_t from = parse_vertex_index(*tok.next(), n, line.number);
      const auto second = tok.next();
      if (!second) throw ParseError(line.number, "link without a target vertex");
      std::size_t to = parse_vertex_index(*second, n, line.number);
      double weight = 1.0;
      if (const auto w = tok.next()) {
        const auto value = parse_real(*w);
        if (!value || !std::isfinite(*value)) {
          throw ParseError(line.number, "bad weight '" + std::string(*w) + "'");
        }
        weight = *value;
      }
      if (two_mode) {
        if (edges && from > n1 && to <= n1) std::swap(from, to);
        if (from > n1 || to <= n1) {
          throw IndexOutOfRange("two-mode link " + std::to_string(from) + " " +
                                    std::to_string(to) + " must go from 1.." +
                                    std::to_string(n1) + " to " + std::to_string(n1 + 1) +
                                    ".." + std::to_string(n),
                                line.number);
        }
        entries.push_back({from - 1, to - n1 - 1, weight});
      } else {
        entries.push_back({from - 1, to - 1, weight});
        if (edges && from != to) entries.push_back({to - 1, from - 1, weight});
      }
    }
  }
  return SparseNetwork::from_entries(std::move(rows), std::move(cols), std::move(entries));
}

std::string write_net(const SparseNetwork& net, LinkStyle style) {
  std::string out;
  const std::size_t col_base = append_vertices(out, net.rows(), net.cols());
  if (net.empty()) return out;

  if (style == LinkStyle::arcs) {
    out += "*Arcs\n";
    for (const Entry& e : unfold(net).entries()) append_link(out, e.row + 1, e.col + col_base, e.weight);
    return out;
  }
  if (!net.directed()) {
    out += "*Edges\n";
    for (const Entry& e : net.entries()) append_link(out, e.row + 1, e.col + 1, e.weight);
    return out;
  }
  if (!net.one_mode()) {
    out += "*Edges\n";
    for (const Entry& e : net.entries()) append_link(out, e.row + 1, e.col + col_base, e.weight);
    return out;
  }
  if (is_symmetric(net, 0.0)) {
    out += "*Edges\n";
    for (const Entry& e : net.entries()) {
      if (e.row <= e.col) append_link(out, e.row + 1, e.col + 1, e.weight);
    }
    return out;
  }
  out += "*Arcs\n";
  for (const Entry& e : net.entries()) append_link(out, e.row + 1, e.col + 1, e.weight);
  return out;
}

std::string write_pairs(const PairTable& table, std::string_view comment) {
  std::string out;
  while (!comment.empty()) {
    const std::size_t nl = comment.find('\n');
    out += "% ";
    out += comment.substr(0, nl);
    out += '\n';
    comment = nl == std::string_view::npos ? std::string_view{} : comment.substr(nl + 1);
  }
  const std::size_t col_base = append_vertices(out, table.rows, table.cols);
  const bool one_mode = same_mode(table.rows, table.cols);
  const bool edges = one_mode && table.symmetric();
  out += edges ? "*Edges\n" : "*Arcs\n";
  for (const Entry& e : table.entries) {
    if (edges && e.row > e.col) continue;
    append_link(out, e.row + 1, e.col + (one_mode ? 1 : col_base), e.weight);
  }
  return out;
}

WeightVector read_vec(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  std::size_t pos = find_vertex_header(lines);
  const Line& head = lines[pos++];
  const VertexHeader header = parse_vertex_header(head);
  if (header.row_count) throw BadVertexCount(head.number, "a vector has a single mode");

  std::vector<double> values;
  values.reserve(header.count);
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    if (is_keyword(line)) throw ParseError(line.number, "unexpected section in a vector file");
    Tokens tok(line);
    const std::string_view t = *tok.next();
    const auto value = parse_real(t);
    if (!value || std::isinf(*value) || tok.next()) {
      throw ParseError(line.number, "bad vector value '" + std::string(line.text) + "'");
    }
    if (values.size() == header.count) {
      throw ParseError(line.number, "more than " + std::to_string(header.count) + " values");
    }
    values.push_back(std::isnan(*value) ? WeightVector::missing : *value);
  }
  if (values.size() != header.count) {
    throw ParseError(lines.back().number, "expected " + std::to_string(header.count) +
                                              " values, found " + std::to_string(values.size()));
  }
  return WeightVector(NodeSet::numbered("vertices", header.count), std::move(values));
}

WeightVector read_vec(std::string_view text, NodeSetPtr nodes) {
  WeightVector raw = read_vec(text);
  if (raw.size() != nodes->size()) {
    throw CompatibilityError("vector of length " + std::to_string(raw.size()) +
                             " does not match node set '" + nodes->name() + "' of size " +
                             std::to_string(nodes->size()));
  }
  return WeightVector(std::move(nodes), std::vector<double>(raw.values().begin(), raw.values().end()));
}

std::string write_vec(const WeightVector& vec) {
  std::string out = "*Vertices " + std::to_string(vec.size()) + "\n";
  for (double v : vec.values()) {
    out += std::isnan(v) ? std::string("nan") : format_number(v);
    out += '\n';
  }
  return out;
}

}  // namespace linknet::pajek
