#include "vsr/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "vsr/error.hpp"

namespace vsr {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-comment, non-blank lines, each split into tokens; keeps line numbers
// for messages.
struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw FormatError("line " + std::to_string(line) + ": " + message);
}

long long to_int(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex to_vertex(std::string_view token, std::size_t line) {
  long long v = to_int(token, line);
  if (v < 0 || v > 1'000'000'000) fail(line, "vertex id out of range: " + std::string(token));
  return static_cast<Vertex>(v);
}

SeparatorState state_from(const std::vector<std::string_view>& tokens, std::size_t first, std::size_t line) {
  if (tokens.size() == first + 1 && tokens[first] == "-") return {};
  std::vector<Vertex> ids;
  for (std::size_t i = first; i < tokens.size(); ++i) ids.push_back(to_vertex(tokens[i], line));
  std::vector<Vertex> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(line, "repeated vertex in a state");
  return SeparatorState(std::move(sorted));
}

Graph graph_with_context(int n, const std::vector<Edge>& edges, std::size_t line) {
  try {
    return Graph(n, edges);
  } catch (const FormatError&) {
    throw;
  } catch (const InputError& e) {
    fail(line, e.what());
  }
}

// Keyword file shared by instances and ISR files.
struct KeywordFile {
  std::optional<Graph> graph;
  std::map<std::string, Line> fields;
};

KeywordFile parse_keywords(std::string_view text, const std::filesystem::path& base_dir,
                           std::initializer_list<std::string_view> allowed) {
  KeywordFile out;
  for (auto& line : content_lines(text)) {
    std::string key(line.tokens[0]);
    if (key == "graph") {
      if (out.graph) fail(line.number, "duplicate 'graph'");
      if (line.tokens.size() >= 2 && line.tokens[1] == "inline") {
        if (line.tokens.size() < 3 || line.tokens.size() % 2 != 1) fail(line.number, "graph inline <n> a b a b ...");
        int n = static_cast<int>(to_int(line.tokens[2], line.number));
        if (n < 0) fail(line.number, "negative vertex count");
        std::vector<Edge> edges;
        for (std::size_t i = 3; i + 1 < line.tokens.size(); i += 2) {
          edges.emplace_back(to_vertex(line.tokens[i], line.number), to_vertex(line.tokens[i + 1], line.number));
        }
        out.graph = graph_with_context(n, edges, line.number);
      } else if (line.tokens.size() == 2) {
        std::filesystem::path p(std::string(line.tokens[1]));
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        out.graph = load_graph(p);
      } else {
        fail(line.number, "graph <path> | graph inline <n> edges...");
      }
      continue;
    }
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(line.number, "unknown keyword '" + key + "'");
    if (out.fields.contains(key)) fail(line.number, "duplicate '" + key + "'");
    if (line.tokens.size() < 2) fail(line.number, "'" + key + "' needs a value");
    out.fields.emplace(key, std::move(line));
  }
  if (!out.graph) throw FormatError("missing 'graph'");
  return out;
}

const Line& require(const KeywordFile& file, const std::string& key) {
  auto it = file.fields.find(key);
  if (it == file.fields.end()) throw FormatError("missing '" + key + "'");
  return it->second;
}

Vertex single_vertex(const KeywordFile& file, const std::string& key) {
  const Line& line = require(file, key);
  if (line.tokens.size() != 2) fail(line.number, "'" + key + "' takes one vertex id");
  return to_vertex(line.tokens[1], line.number);
}

Rule rule_of(const KeywordFile& file) {
  const Line& line = require(file, "rule");
  if (line.tokens.size() != 2) fail(line.number, "'rule' takes one value");
  try {
    return parse_rule(line.tokens[1]);
  } catch (const FormatError& e) {
    fail(line.number, e.what());
  }
}

std::string join_state(const SeparatorState& S) { return S.to_string(); }

std::string inline_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph inline " << g.vertex_count();
  for (auto [a, b] : g.edges()) out << ' ' << a << ' ' << b;
  return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty graph file");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) fail(header.number, "header must be 'n m'");
  long long n = to_int(header.tokens[0], header.number);
  long long m = to_int(header.tokens[1], header.number);
  if (n < 0 || m < 0) fail(header.number, "negative count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw FormatError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) fail(line.number, "edge lines hold two vertex ids");
    edges.emplace_back(to_vertex(line.tokens[0], line.number), to_vertex(line.tokens[1], line.number));
  }
  return graph_with_context(static_cast<int>(n), edges, header.number);
}

Graph load_graph(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

ReconfigInstance parse_instance(std::string_view text, const std::filesystem::path& base_dir) {
  auto file = parse_keywords(text, base_dir, {"s", "t", "rule", "k", "source", "target"});
  Rule rule = rule_of(file);
  int k = 0;
  if (auto it = file.fields.find("k"); it != file.fields.end()) {
    if (rule != Rule::TAR) fail(it->second.number, "'k' only applies to TAR");
    if (it->second.tokens.size() != 2) fail(it->second.number, "'k' takes one value");
    k = static_cast<int>(to_int(it->second.tokens[1], it->second.number));
  } else if (rule == Rule::TAR) {
    throw FormatError("TAR instances need 'k'");
  }
  const Line& source = require(file, "source");
  const Line& target = require(file, "target");
  return ReconfigInstance::create(std::move(*file.graph), single_vertex(file, "s"), single_vertex(file, "t"), rule,
                                  state_from(source.tokens, 1, source.number),
                                  state_from(target.tokens, 1, target.number), k);
}

ReconfigInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path), path.parent_path());
}

std::string format_instance(const ReconfigInstance& instance) {
  std::ostringstream out;
  out << inline_graph(instance.graph()) << '\n';
  out << "s " << instance.s() << "\nt " << instance.t() << '\n';
  out << "rule " << rule_name(instance.rule()) << '\n';
  if (instance.rule() == Rule::TAR) out << "k " << instance.k() << '\n';
  out << "source " << join_state(instance.source()) << '\n';
  out << "target " << join_state(instance.target()) << '\n';
  return out.str();
}

IsrInstance parse_isr(std::string_view text, const std::filesystem::path& base_dir) {
  auto file = parse_keywords(text, base_dir, {"part", "rule", "source", "target"});
  IsrInstance isr;
  isr.rule = rule_of(file);
  const Line& part = require(file, "part");
  isr.part_a = state_from(part.tokens, 1, part.number).members();
  const Line& source = require(file, "source");
  const Line& target = require(file, "target");
  isr.source = state_from(source.tokens, 1, source.number);
  isr.target = state_from(target.tokens, 1, target.number);
  isr.graph = std::move(*file.graph);
  return isr;
}

IsrInstance load_isr(const std::filesystem::path& path) { return parse_isr(read_text_file(path), path.parent_path()); }

std::string format_isr(const IsrInstance& isr) {
  std::ostringstream out;
  out << inline_graph(isr.graph) << '\n';
  out << "part " << SeparatorState(isr.part_a).to_string() << '\n';
  out << "rule " << rule_name(isr.rule) << '\n';
  out << "source " << join_state(isr.source) << '\n';
  out << "target " << join_state(isr.target) << '\n';
  return out.str();
}

SeparatorState parse_state(std::string_view line) {
  auto tokens = split_ws(line);
  if (tokens.empty()) throw FormatError("empty state line (use '-' for the empty state)");
  return state_from(tokens, 0, 1);
}

ReconfigSequence parse_sequence(std::string_view text) {
  ReconfigSequence out;
  for (const auto& line : content_lines(text)) out.push_back(state_from(line.tokens, 0, line.number));
  if (out.empty()) throw FormatError("empty sequence");
  return out;
}

std::string format_sequence(const ReconfigSequence& seq) {
  std::string out;
  for (const auto& S : seq) out += S.to_string() + '\n';
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace vsr
