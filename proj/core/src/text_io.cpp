#include "sylab/text_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sylab/error.hpp"

namespace sylab {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t number = 0;

  // Next line that is neither blank nor a comment. Comments are handed to
  // on_comment when given.
  template <typename OnComment>
  bool next(std::string& line, OnComment&& on_comment) {
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto start = line.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      if (line[start] == '#') {
        on_comment(line.substr(start + 1));
        continue;
      }
      line = line.substr(start);
      return true;
    }
    return false;
  }
  bool next(std::string& line) {
    return next(line, [](const std::string&) {});
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(number) + ": " + what);
  }
};

std::vector<std::string> words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::size_t parse_count(const LineReader& r, const std::string& w) {
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos || w.size() > 9) {
    r.error("expected a nonnegative integer, got '" + w + "'");
  }
  return static_cast<std::size_t>(std::stoul(w));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

BinaryMatroid parse_matroid(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.error("missing 'binary <d> <n>' header");
  auto head = words(line);
  if (head.size() != 3 || head[0] != "binary") r.error("expected 'binary <d> <n>'");
  std::size_t d = parse_count(r, head[1]);
  std::size_t n = parse_count(r, head[2]);
  if (d > BinaryMatroid::kMaxDim) r.error("dimension above 64");
  if (n > SubsetMask::kMaxElements) r.error("more than 64 elements");
  std::vector<std::uint64_t> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.next(line)) r.error("expected " + std::to_string(n) + " columns, found " + std::to_string(i));
    auto w = words(line);
    if (w.size() != 1 || w[0].size() != d || w[0].find_first_not_of("01") != std::string::npos) {
      r.error("column " + std::to_string(i) + " must be a bit string of length " + std::to_string(d));
    }
    std::uint64_t v = 0;
    for (char ch : w[0]) v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
    cols.push_back(v);
  }
  std::vector<std::string> labels;
  SubsetMask deleted;
  while (r.next(line)) {
    auto w = words(line);
    if (w[0] == "labels") {
      if (w.size() != n + 1) r.error("labels needs exactly " + std::to_string(n) + " names");
      labels.assign(w.begin() + 1, w.end());
    } else if (w[0] == "deleted") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t e = parse_count(r, w[i]);
        if (e >= n) r.error("deleted element " + w[i] + " out of range");
        deleted = deleted.with(e);
      }
    } else {
      r.error("unexpected line '" + line + "'");
    }
  }
  return BinaryMatroid(d, std::move(cols), std::move(labels), deleted);
}

BinaryMatroid parse_matroid(const std::string& text) {
  std::istringstream in(text);
  return parse_matroid(in);
}

BinaryMatroid read_matroid_file(const std::string& path) { return parse_matroid(slurp(path)); }

std::string emit_matroid(const BinaryMatroid& m) {
  std::ostringstream out;
  out << "binary " << m.dim() << ' ' << m.size() << '\n';
  for (auto c : m.columns()) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (((c >> (m.dim() - 1 - j)) & 1U) != 0 ? '1' : '0');
    out << '\n';
  }
  bool default_labels = true;
  for (std::size_t i = 0; i < m.size(); ++i) default_labels = default_labels && m.labels()[i] == std::to_string(i);
  if (!default_labels) {
    out << "labels";
    for (const auto& l : m.labels()) out << ' ' << l;
    out << '\n';
  }
  if (!m.deleted().empty()) {
    out << "deleted";
    for (auto i : m.deleted().indices()) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

Multigraph parse_graph(std::istream& in) {
  LineReader r{in};
  std::optional<std::size_t> marked;
  std::size_t marked_line = 0;
  auto on_comment = [&](const std::string& text) {
    auto w = words(text);
    if (w.size() == 2 && w[0] == "marked") {
      marked = parse_count(r, w[1]);
      marked_line = r.number;
    }
  };
  std::string line;
  if (!r.next(line, on_comment)) r.error("missing 'graph <V> <E>' header");
  auto head = words(line);
  if (head.size() != 3 || head[0] != "graph") r.error("expected 'graph <V> <E>'");
  std::size_t v = parse_count(r, head[1]);
  std::size_t e = parse_count(r, head[2]);
  Multigraph g(v);
  for (std::size_t i = 0; i < e; ++i) {
    if (!r.next(line, on_comment)) r.error("expected " + std::to_string(e) + " edges, found " + std::to_string(i));
    auto w = words(line);
    if (w.size() != 2) r.error("edge line must be 'u v'");
    std::size_t a = parse_count(r, w[0]);
    std::size_t b = parse_count(r, w[1]);
    if (a >= v || b >= v) r.error("vertex out of range");
    g.add_edge(a, b);
  }
  if (r.next(line, on_comment)) r.error("unexpected line '" + line + "'");
  if (marked) {
    if (*marked >= e) {
      r.number = marked_line;
      r.error("marked edge out of range");
    }
    g.set_marked(marked);
  }
  return g;
}

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Multigraph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

std::string emit_graph(const Multigraph& g, const GraphNotes& notes) {
  std::ostringstream out;
  if (notes.tau) out << "# tau " << to_string(*notes.tau) << '\n';
  if (notes.ratio) out << "# ratio " << to_string(*notes.ratio) << '\n';
  if (g.marked()) out << "# marked " << g.edge_position(*g.marked()) << '\n';
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.w << '\n';
  return out.str();
}

SubsetMask parse_index_list(const std::string& text, std::size_t n) {
  SubsetMask out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    auto start = item.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    auto end = item.find_last_not_of(" \t");
    item = item.substr(start, end - start + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3) {
      fail(ErrorKind::ParseError, "bad element index '" + item + "'");
    }
    std::size_t e = std::stoul(item);
    if (e >= n) fail(ErrorKind::ParseError, "element " + item + " out of range (n = " + std::to_string(n) + ")");
    if (out.contains(e)) fail(ErrorKind::ParseError, "element " + item + " listed twice");
    out = out.with(e);
  }
  return out;
}

std::string format_index_list(SubsetMask s) {
  std::string out;
  for (auto i : s.indices()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out;
}

}  // namespace sylab
