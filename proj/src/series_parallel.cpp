#include "vsr/series_parallel.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "vsr/error.hpp"
#include "vsr/separator.hpp"

namespace vsr {

namespace {

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool has_end(const PSNode& n, Vertex v) { return n.a == v || n.b == v; }

bool same_ends(const PSNode& n, Vertex u, Vertex v) { return ordered(n.a, n.b) == ordered(u, v); }

Vertex other_end(const PSNode& n, Vertex v) { return n.a == v ? n.b : n.a; }

}  // namespace

// ---------------------------------------------------------------- PSTree

void PSTree::finalize() {
  std::size_t count = nodes_.size();
  depth_.assign(count, 0);
  enter_.assign(count, 0);
  exit_.assign(count, 0);
  support_.clear();
  std::set<Vertex> vertices{node(root_).a, node(root_).b};

  int clock = 0;
  std::vector<std::pair<int, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [id, done] = stack.back();
    stack.pop_back();
    auto i = static_cast<std::size_t>(id);
    if (done) {
      exit_[i] = clock++;
      continue;
    }
    enter_[i] = clock++;
    stack.emplace_back(id, true);
    const PSNode& n = nodes_[i];
    if (n.op == SpOp::Series) {
      if (!vertices.insert(n.created).second) {
        throw ContractViolation("PS-tree creates vertex " + std::to_string(n.created) + " twice");
      }
      support_.emplace_back(n.created, id);
    }
    if (n.op != SpOp::Leaf) {
      for (int child : {n.right, n.left}) {
        depth_[static_cast<std::size_t>(child)] = depth_[i] + 1;
        stack.emplace_back(child, false);
      }
    }
  }
  std::sort(support_.begin(), support_.end());
  vertices_.assign(vertices.begin(), vertices.end());
}

bool PSTree::is_base_vertex(Vertex v) const {
  auto [a, b] = base_vertices();
  return v == a || v == b;
}

bool PSTree::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool PSTree::is_ancestor(int ancestor, int descendant) const {
  auto a = static_cast<std::size_t>(ancestor);
  auto d = static_cast<std::size_t>(descendant);
  return enter_.at(a) <= enter_.at(d) && exit_.at(d) <= exit_.at(a);
}

int PSTree::lca(int x, int y) const {
  while (depth(x) > depth(y)) x = node(x).parent;
  while (depth(y) > depth(x)) y = node(y).parent;
  while (x != y) {
    x = node(x).parent;
    y = node(y).parent;
  }
  return x;
}

std::optional<int> PSTree::support(Vertex v) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), std::pair<Vertex, int>{v, -1});
  if (it == support_.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::vector<int> PSTree::span(Vertex v) const {
  std::vector<int> out;
  auto supp = support(v);
  if (!supp) return out;
  for (int id = *supp; id >= 0; id = node(id).parent) {
    if (node(id).op == SpOp::Series) out.push_back(id);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Vertex> PSTree::pieces(int id) const {
  std::vector<Vertex> out;
  for (auto [v, supp] : support_) {
    if (is_ancestor(id, supp)) out.push_back(v);
  }
  return out;
}

bool PSTree::is_piece(Vertex v, int id) const {
  auto supp = support(v);
  return supp && is_ancestor(id, *supp);
}

int PSTree::epsilon(Vertex u, Vertex v) const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [&](const PSNode& n) {
    return n.op == SpOp::Parallel && same_ends(n, u, v);
  }));
}

bool PSTree::edge_ever_exists(Vertex u, Vertex v) const {
  return std::any_of(nodes_.begin(), nodes_.end(), [&](const PSNode& n) { return same_ends(n, u, v); });
}

std::vector<int> PSTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].op == SpOp::Leaf) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<Edge> PSTree::replay() const {
  // Children are created from the operation itself and must then be found
  // among the current edges under the endpoints recorded in the tree.
  std::multiset<Edge> current{ordered(node(root_).a, node(root_).b)};
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const PSNode& n = node(stack.back());
    stack.pop_back();
    auto it = current.find(ordered(n.a, n.b));
    if (it == current.end()) {
      throw ContractViolation("PS-tree replay: edge " + std::to_string(n.a) + "-" + std::to_string(n.b) +
                              " is not present when its operation applies");
    }
    if (n.op == SpOp::Leaf) continue;
    current.erase(it);
    if (n.op == SpOp::Parallel) {
      current.insert(ordered(n.a, n.b));
      current.insert(ordered(n.a, n.b));
    } else {
      current.insert(ordered(n.a, n.created));
      current.insert(ordered(n.created, n.b));
    }
    stack.push_back(n.right);
    stack.push_back(n.left);
  }
  return {current.begin(), current.end()};
}

std::string PSTree::to_string() const {
  auto render = [&](auto&& self, int id) -> std::string {
    const PSNode& n = node(id);
    std::string ends = std::to_string(n.a) + "-" + std::to_string(n.b);
    if (n.op == SpOp::Leaf) return ends;
    std::string head = n.op == SpOp::Parallel ? "P(" + ends : "S(" + ends + "/" + std::to_string(n.created);
    return head + ": " + self(self, n.left) + ", " + self(self, n.right) + ")";
  };
  return render(render, root_);
}

// ---------------------------------------------------------------- builder

PSTreeBuilder::PSTreeBuilder(Vertex a, Vertex b) {
  if (a == b) throw InputError("PSTreeBuilder: base edge needs two distinct vertices");
  tree_.nodes_.push_back(PSNode{a, b});
  tree_.root_ = 0;
}

namespace {

PSNode& open_leaf(std::vector<PSNode>& nodes, int edge) {
  if (edge < 0 || static_cast<std::size_t>(edge) >= nodes.size()) throw InputError("PSTreeBuilder: unknown edge");
  PSNode& n = nodes[static_cast<std::size_t>(edge)];
  if (n.op != SpOp::Leaf) throw InputError("PSTreeBuilder: edge " + std::to_string(edge) + " was already expanded");
  return n;
}

}  // namespace

std::pair<int, int> PSTreeBuilder::parallel(int edge) {
  auto& nodes = tree_.nodes_;
  PSNode copy = open_leaf(nodes, edge);
  int left = static_cast<int>(nodes.size());
  nodes.push_back(PSNode{copy.a, copy.b, SpOp::Leaf, -1, -1, edge});
  nodes.push_back(PSNode{copy.a, copy.b, SpOp::Leaf, -1, -1, edge});
  PSNode& n = nodes[static_cast<std::size_t>(edge)];
  n.op = SpOp::Parallel;
  n.left = left;
  n.right = left + 1;
  return {left, left + 1};
}

std::pair<int, int> PSTreeBuilder::series(int edge, Vertex created) {
  auto& nodes = tree_.nodes_;
  PSNode copy = open_leaf(nodes, edge);
  for (const auto& n : nodes) {
    if (n.a == created || n.b == created) {
      throw InputError("PSTreeBuilder: vertex " + std::to_string(created) + " already exists");
    }
  }
  int left = static_cast<int>(nodes.size());
  nodes.push_back(PSNode{copy.a, created, SpOp::Leaf, -1, -1, edge});
  nodes.push_back(PSNode{created, copy.b, SpOp::Leaf, -1, -1, edge});
  PSNode& n = nodes[static_cast<std::size_t>(edge)];
  n.op = SpOp::Series;
  n.left = left;
  n.right = left + 1;
  n.created = created;
  return {left, left + 1};
}

PSTree PSTreeBuilder::build() && {
  if (tree_.nodes_[0].op != SpOp::Parallel) throw ContractViolation("PS-tree root must be a Parallel node");
  tree_.finalize();
  return std::move(tree_);
}

// ---------------------------------------------------------------- decomposition

PSTree decompose_block(const std::vector<Edge>& edges) {
  PSTree tree;
  auto& nodes = tree.nodes_;
  std::set<Vertex> alive;
  std::map<Vertex, std::set<int>> incident;
  std::map<Edge, std::set<int>> bundles;  // endpoint pair -> active edge ids

  auto add_edge = [&](int id) {
    const PSNode& n = nodes[static_cast<std::size_t>(id)];
    incident[n.a].insert(id);
    incident[n.b].insert(id);
    bundles[ordered(n.a, n.b)].insert(id);
  };
  auto drop_edge = [&](int id) {
    const PSNode& n = nodes[static_cast<std::size_t>(id)];
    incident[n.a].erase(id);
    incident[n.b].erase(id);
    auto key = ordered(n.a, n.b);
    bundles[key].erase(id);
    if (bundles[key].empty()) bundles.erase(key);
  };

  for (auto [a, b] : edges) {
    auto e = ordered(a, b);
    nodes.push_back(PSNode{e.first, e.second});
    alive.insert(a);
    alive.insert(b);
    add_edge(static_cast<int>(nodes.size()) - 1);
  }
  std::vector<int> block_vertices(alive.begin(), alive.end());
  if (alive.size() < 3) throw InputError("decompose_block: a block needs at least three vertices");

  std::size_t active = nodes.size();
  while (!(alive.size() == 2 && active == 1)) {
    auto bundle = std::find_if(bundles.begin(), bundles.end(), [](const auto& kv) { return kv.second.size() > 1; });
    if (bundle != bundles.end()) {
      auto it = bundle->second.begin();
      int e1 = *it;
      int e2 = *std::next(it);
      Edge ends = bundle->first;
      drop_edge(e1);
      drop_edge(e2);
      int id = static_cast<int>(nodes.size());
      nodes.push_back(PSNode{ends.first, ends.second, SpOp::Parallel, e1, e2});
      nodes[static_cast<std::size_t>(e1)].parent = id;
      nodes[static_cast<std::size_t>(e2)].parent = id;
      add_edge(id);
      --active;
      continue;
    }
    auto v = std::find_if(alive.begin(), alive.end(), [&](Vertex x) { return incident[x].size() == 2; });
    if (v == alive.end()) throw NotSeriesParallel(0, block_vertices);
    Vertex z = *v;
    int f1 = *incident[z].begin();
    int f2 = *std::next(incident[z].begin());
    Vertex x = other_end(nodes[static_cast<std::size_t>(f1)], z);
    Vertex y = other_end(nodes[static_cast<std::size_t>(f2)], z);
    if (x > y) {
      std::swap(x, y);
      std::swap(f1, f2);
    }
    drop_edge(f1);
    drop_edge(f2);
    alive.erase(z);
    int id = static_cast<int>(nodes.size());
    nodes.push_back(PSNode{x, y, SpOp::Series, f1, f2, -1, z});
    nodes[static_cast<std::size_t>(f1)].parent = id;
    nodes[static_cast<std::size_t>(f2)].parent = id;
    add_edge(id);
    --active;
  }
  tree.root_ = static_cast<int>(nodes.size()) - 1;
  if (nodes.back().op != SpOp::Parallel) throw NotSeriesParallel(0, block_vertices);
  tree.finalize();
  return tree;
}

std::optional<std::size_t> SpDecomposition::block_containing(Vertex x, Vertex y) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& vs = blocks[i].vertices;
    if (std::binary_search(vs.begin(), vs.end(), x) && std::binary_search(vs.begin(), vs.end(), y)) return i;
  }
  return std::nullopt;
}

SpDecomposition recognize_and_decompose(const Graph& g) {
  auto structure = biconnected_blocks(g);
  SpDecomposition out;
  out.cut_vertices = structure.cut_vertices;
  for (std::size_t i = 0; i < structure.blocks.size(); ++i) {
    SpBlock block;
    block.vertices = structure.blocks[i];
    for (Vertex a : block.vertices) {
      for (Vertex b : g.neighbors(a)) {
        if (a < b && std::binary_search(block.vertices.begin(), block.vertices.end(), b)) block.edges.emplace_back(a, b);
      }
    }
    if (block.vertices.size() > 2) {
      try {
        block.tree = decompose_block(block.edges);
      } catch (const NotSeriesParallel&) {
        throw NotSeriesParallel(i, block.vertices);
      }
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

bool is_series_parallel(const Graph& g) {
  try {
    recognize_and_decompose(g);
    return true;
  } catch (const NotSeriesParallel&) {
    return false;
  }
}

// ---------------------------------------------------------------- classification

std::string_view pair_kind_name(PairKind kind) noexcept {
  switch (kind) {
    case PairKind::Parallel:
      return "parallel";
    case PairKind::Serial:
      return "serial";
    case PairKind::Sequential:
      return "sequential";
    case PairKind::Nested:
      return "nested";
    case PairKind::RootBoth:
      return "root-both";
    case PairKind::RootEdge:
      return "root-edge";
    case PairKind::RootNoEdge:
      return "root-no-edge";
    case PairKind::CutVertexSeparated:
      return "cut-vertex";
  }
  return "?";
}

namespace {

// Vertices created by subdividing an st-edge.
std::vector<Vertex> vertices_on(const PSTree& tree, Vertex s, Vertex t) {
  std::vector<Vertex> out;
  for (const auto& n : tree.nodes()) {
    if (n.op == SpOp::Series && same_ends(n, s, t)) out.push_back(n.created);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The child of `id` whose subtree holds `descendant`.
int child_towards(const PSTree& tree, int id, int descendant) {
  const PSNode& n = tree.node(id);
  return tree.is_ancestor(n.left, descendant) ? n.left : n.right;
}

// Lowest s-incident Series node on the span of t, the child of it that
// leads to t (not s-incident), and the witnesses (a, z).
void nested_witness(const PSTree& tree, Vertex s, Vertex t, PairClassification& out) {
  int supp_t = *tree.support(t);
  std::optional<int> lowest;
  for (int id : tree.span(t)) {
    if (has_end(tree.node(id), s)) lowest = id;
  }
  if (!lowest) throw ContractViolation("classify_pair: no edge at s above the support of t");
  const PSNode& f = tree.node(*lowest);
  out.a = other_end(f, s);
  out.b = f.created;
  out.anchor = child_towards(tree, *lowest, supp_t);
}

}  // namespace

PairClassification classify_pair(const PSTree& tree, Vertex s, Vertex t) {
  if (s == t) throw InputError("classify_pair: terminals must be distinct");
  if (!tree.contains(s) || !tree.contains(t)) throw InputError("classify_pair: terminal outside the block");
  for (int leaf : tree.leaves()) {
    if (same_ends(tree.node(leaf), s, t)) throw InputError("classify_pair: terminals are adjacent");
  }

  PairClassification out;
  bool s_base = tree.is_base_vertex(s);
  bool t_base = tree.is_base_vertex(t);
  if (s_base && t_base) {
    out.kind = PairKind::RootBoth;
    out.v_st = vertices_on(tree, s, t);
    out.anchor = tree.root();
    return out;
  }
  // Orient so that t is the endpoint whose span is walked.
  if (t_base || (!s_base && !tree.edge_ever_exists(s, t) && tree.is_ancestor(*tree.support(t), *tree.support(s)))) {
    std::swap(s, t);
    out.swapped = true;
  }
  if (!s_base && !t_base && tree.edge_ever_exists(s, t) && !has_end(tree.node(*tree.support(t)), s)) {
    std::swap(s, t);
    out.swapped = !out.swapped;
  }

  int supp_t = *tree.support(t);
  if (tree.is_base_vertex(s)) {
    if (has_end(tree.node(supp_t), s)) {
      out.kind = PairKind::RootEdge;
      out.a = other_end(tree.node(supp_t), s);
      out.v_st = vertices_on(tree, s, t);
      out.anchor = supp_t;
    } else {
      out.kind = PairKind::RootNoEdge;
      nested_witness(tree, s, t, out);
    }
    return out;
  }

  int supp_s = *tree.support(s);
  if (tree.edge_ever_exists(s, t)) {
    out.kind = PairKind::Sequential;
    out.a = other_end(tree.node(supp_t), s);
    out.v_st = vertices_on(tree, s, t);
    out.anchor = supp_t;
    return out;
  }
  if (tree.is_ancestor(supp_s, supp_t)) {
    out.kind = PairKind::Nested;
    nested_witness(tree, s, t, out);
    return out;
  }
  int l = tree.lca(supp_s, supp_t);
  const PSNode& join = tree.node(l);
  out.anchor = child_towards(tree, l, supp_t);
  if (join.op == SpOp::Parallel) {
    out.kind = PairKind::Parallel;
    out.a = join.a;
    out.b = join.b;
  } else {
    out.kind = PairKind::Serial;
    out.b = join.created;
    out.a = other_end(tree.node(out.anchor), join.created);
  }
  return out;
}

PairClassification classify_pair(const Graph& g, const SpDecomposition& decomposition, Vertex s, Vertex t) {
  check_terminals(g, s, t);
  if (g.adjacent(s, t)) throw InputError("classify_pair: terminals are adjacent");
  if (auto block = decomposition.block_containing(s, t)) {
    const auto& tree = decomposition.blocks[*block].tree;
    if (!tree) throw ContractViolation("classify_pair: terminals share a bridge block");
    auto out = classify_pair(*tree, s, t);
    out.block = block;
    return out;
  }
  for (Vertex w : decomposition.cut_vertices) {
    if (w != s && w != t && is_separator(g, s, t, SeparatorState{w})) {
      PairClassification out;
      out.kind = PairKind::CutVertexSeparated;
      out.cut = w;
      return out;
    }
  }
  throw InputError("classify_pair: terminals lie in different components");
}

namespace {

CanonicalSeparator canonical_from(const PSTree* tree, PairClassification c, Vertex s, Vertex t) {
  CanonicalSeparator out;
  switch (c.kind) {
    case PairKind::Parallel:
    case PairKind::Serial:
    case PairKind::Nested:
    case PairKind::RootNoEdge:
      out.members = SeparatorState{c.a, c.b};
      break;
    case PairKind::Sequential:
    case PairKind::RootEdge:
      out.members = SeparatorState(c.v_st).with(c.a);
      break;
    case PairKind::RootBoth:
      out.members = SeparatorState(c.v_st);
      break;
    case PairKind::CutVertexSeparated:
      out.members = SeparatorState{c.cut};
      break;
  }
  out.epsilon = tree ? tree->epsilon(s, t) : 0;
  out.classification = std::move(c);
  return out;
}

}  // namespace

CanonicalSeparator canonical_separator(const PSTree& tree, Vertex s, Vertex t) {
  return canonical_from(&tree, classify_pair(tree, s, t), s, t);
}

CanonicalSeparator canonical_separator(const Graph& g, const SpDecomposition& decomposition, Vertex s, Vertex t) {
  auto c = classify_pair(g, decomposition, s, t);
  const PSTree* tree = c.block ? &*decomposition.blocks[*c.block].tree : nullptr;
  return canonical_from(tree, std::move(c), s, t);
}

// ---------------------------------------------------------------- reconfiguration

namespace {

using Move = std::pair<Vertex, Vertex>;

class CanonicalWalk {
 public:
  CanonicalWalk(const Graph& g, const PSTree& tree, Vertex s, Vertex t, const CanonicalSeparator& canon,
                SpSolveStats& stats)
      : g_(g), tree_(tree), s_(s), t_(t), canon_(canon), stats_(stats) {
    const auto& c = canon.classification;
    // (role_s, role_t) as oriented by the classification.
    role_s_ = c.swapped ? t : s;
    role_t_ = c.swapped ? s : t;
    if (c.anchor >= 0 && c.kind != PairKind::RootBoth) sides_.push_back({role_t_, role_s_, c.anchor});
    if (c.kind == PairKind::Parallel || c.kind == PairKind::Serial) {
      int supp_s = *tree.support(role_s_);
      int l = tree.node(c.anchor).parent;
      sides_.push_back({role_s_, role_t_, child_towards(tree, l, supp_s)});
    }
  }

  ReconfigSequence run(const SeparatorState& start) {
    const SeparatorState& m = canon_.members;
    ReconfigSequence seq{start};
    std::unordered_set<SeparatorState> visited{start};
    while (!seq.back().contains_all(m)) {
      const SeparatorState X = seq.back();
      std::optional<SeparatorState> next;
      for (auto [w, x] : candidates(X)) {
        if (!X.contains(w) || X.contains(x) || x == s_ || x == t_) continue;
        SeparatorState Y = X.moved(w, x);
        if (visited.contains(Y) || !is_separator(g_, s_, t_, Y)) continue;
        next = std::move(Y);
        break;
      }
      if (!next) {
        auto rest = search(X);
        ++stats_.search_fallbacks;
        stats_.search_moves += rest.size() - 1;
        seq.insert(seq.end(), rest.begin() + 1, rest.end());
        break;
      }
      ++stats_.lemma_moves;
      visited.insert(*next);
      seq.push_back(std::move(*next));
    }
    return seq;
  }

 private:
  struct Side {
    Vertex near;  // the terminal whose span is walked
    Vertex far;
    int anchor;
  };

  // Series nodes on the span of `v` inside the subtree of `anchor`, from the
  // anchor down to the support.
  std::vector<int> suffix(Vertex v, int anchor) const {
    std::vector<int> out;
    for (int id : tree_.span(v)) {
      if (tree_.is_ancestor(anchor, id)) out.push_back(id);
    }
    return out;
  }

  std::vector<Move> candidates(const SeparatorState& X) {
    const SeparatorState& m = canon_.members;
    std::vector<Move> out;
    auto spare = [&](Vertex keep) {
      std::vector<Vertex> tokens;
      for (Vertex w : X) {
        if (!m.contains(w) && w != keep) tokens.push_back(w);
      }
      return tokens;
    };

    for (const auto& side : sides_) {
      auto f = suffix(side.near, side.anchor);
      // Walk up the span from the highest edge whose ends are both held.
      for (std::size_t i = 1; i < f.size(); ++i) {
        const PSNode& lower = tree_.node(f[i]);
        if (!X.contains(lower.a) || !X.contains(lower.b)) continue;
        const PSNode& upper = tree_.node(f[i - 1]);
        Vertex shared = has_end(upper, lower.a) ? lower.a : lower.b;
        out.emplace_back(other_end(lower, shared), other_end(upper, shared));
        break;
      }
      // Complete an edge of the span with one end held.
      for (int id : f) {
        const PSNode& e = tree_.node(id);
        bool ha = X.contains(e.a);
        bool hb = X.contains(e.b);
        if (ha == hb) continue;
        Vertex held = ha ? e.a : e.b;
        for (Vertex w : spare(held)) out.emplace_back(w, ha ? e.b : e.a);
      }
      // Pieces of an edge between the support's ends and the terminal.
      if (auto supp = tree_.support(side.near)) {
        const PSNode& sp = tree_.node(*supp);
        for (Vertex w : X) {
          for (Vertex end : {sp.a, sp.b}) {
            if (piece_of_pair(w, end, side.near)) out.emplace_back(w, end);
          }
        }
      }
      parallel_pathway(X, side, out);
      // Any spare token onto a free end of the span.
      for (int id : f) {
        const PSNode& e = tree_.node(id);
        for (Vertex end : {e.a, e.b}) {
          if (X.contains(end)) continue;
          for (Vertex w : spare(-1)) out.emplace_back(w, end);
        }
      }
    }

    const auto& c = canon_.classification;
    for (Vertex z : c.v_st) {
      if (X.contains(z)) continue;
      int supp = *tree_.support(z);
      for (Vertex w : X) {
        if (tree_.is_piece(w, supp)) out.emplace_back(w, z);
      }
    }
    if (c.kind == PairKind::Sequential || c.kind == PairKind::RootEdge) {
      for (Vertex w : X) {
        if (piece_of_pair(w, role_t_, c.a)) out.emplace_back(w, c.a);
      }
    }
    for (Vertex x : m) {
      if (X.contains(x)) continue;
      for (Vertex w : spare(-1)) out.emplace_back(w, x);
    }
    return out;
  }

  // Whether w was created inside some edge joining u and v.
  bool piece_of_pair(Vertex w, Vertex u, Vertex v) const {
    auto supp = tree_.support(w);
    if (!supp) return false;
    for (int id = *supp; id >= 0; id = tree_.node(id).parent) {
      if (same_ends(tree_.node(id), u, v)) return true;
    }
    return false;
  }

  // A token parallel to the walked terminal with respect to a free pair
  // (x, y): exactly one of x, y should be reachable, and the token moves
  // there. Only claimed for minimal states.
  void parallel_pathway(const SeparatorState& X, const Side& side, std::vector<Move>& out) {
    auto supp_near = tree_.support(side.near);
    if (!supp_near || !is_minimal_separator(g_, s_, t_, X)) return;
    std::optional<std::vector<char>> reach;
    for (Vertex w : X) {
      auto supp_w = tree_.support(w);
      if (!supp_w || tree_.is_ancestor(*supp_w, *supp_near) || tree_.is_ancestor(*supp_near, *supp_w)) continue;
      int l = tree_.lca(*supp_w, *supp_near);
      const PSNode& join = tree_.node(l);
      if (join.op != SpOp::Parallel || X.contains(join.a) || X.contains(join.b)) continue;
      if (tree_.is_piece(side.far, child_towards(tree_, l, *supp_w))) continue;
      if (!reach) reach = reachable_from(g_, side.near, X.mask(g_.vertex_count()));
      ++stats_.pathway_checks;
      bool ra = (*reach)[static_cast<std::size_t>(join.a)] != 0;
      bool rb = (*reach)[static_cast<std::size_t>(join.b)] != 0;
      if (ra == rb) {
        ++stats_.pathway_violations;
        assert(!"parallel pathway: both or neither end reachable");
        continue;
      }
      out.emplace_back(w, ra ? join.a : join.b);
    }
  }

  // Best-first search over jumps towards any separator holding M.
  ReconfigSequence search(const SeparatorState& start) const {
    const SeparatorState& m = canon_.members;
    constexpr std::size_t cap = 200'000;
    auto missing = [&](const SeparatorState& S) { return set_difference(m, S).size(); };
    std::map<SeparatorState, SeparatorState> parent{{start, start}};
    std::set<std::pair<std::size_t, SeparatorState>> open{{missing(start), start}};
    while (!open.empty()) {
      SeparatorState S = open.begin()->second;
      open.erase(open.begin());
      if (S.contains_all(m)) {
        ReconfigSequence seq{S};
        while (seq.back() != start) seq.push_back(parent.at(seq.back()));
        std::reverse(seq.begin(), seq.end());
        return seq;
      }
      for (Vertex w : S) {
        for (Vertex x = 0; x < g_.vertex_count(); ++x) {
          if (x == s_ || x == t_ || S.contains(x)) continue;
          SeparatorState Y = S.moved(w, x);
          if (parent.contains(Y) || !is_separator(g_, s_, t_, Y)) continue;
          if (parent.size() >= cap) throw ResourceLimit("canonical separator search exceeded its state cap");
          parent.emplace(Y, S);
          open.emplace(missing(Y), std::move(Y));
        }
      }
    }
    throw ContractViolation("no jump sequence reaches the canonical separator");
  }

  const Graph& g_;
  const PSTree& tree_;
  Vertex s_;
  Vertex t_;
  const CanonicalSeparator& canon_;
  SpSolveStats& stats_;
  Vertex role_s_ = -1;
  Vertex role_t_ = -1;
  std::vector<Side> sides_;
};

}  // namespace

ReconfigSequence reconfigure_to_canonical(const Graph& g, const SpDecomposition& decomposition, Vertex s, Vertex t,
                                          const SeparatorState& minimal, SpSolveStats* stats) {
  if (!is_minimal_separator(g, s, t, minimal)) {
    throw ContractViolation("reconfigure_to_canonical: start is not a minimal st-separator");
  }
  SpSolveStats local;
  SpSolveStats& st = stats ? *stats : local;
  auto canon = canonical_separator(g, decomposition, s, t);
  if (minimal.contains_all(canon.members)) return {minimal};
  if (canon.classification.kind == PairKind::CutVertexSeparated) {
    ++st.lemma_moves;
    return {minimal, minimal.moved(*minimal.begin(), canon.classification.cut)};
  }
  const PSTree& tree = *decomposition.blocks[*canon.classification.block].tree;
  return CanonicalWalk(g, tree, s, t, canon, st).run(minimal);
}

namespace {

// Replays a walk of the minimal core with the surplus tokens carried along.
// A jump onto a surplus position trades roles with that token instead.
ReconfigSequence with_surplus(const ReconfigSequence& core, SeparatorState surplus) {
  ReconfigSequence out{set_union(core.front(), surplus)};
  for (std::size_t i = 1; i < core.size(); ++i) {
    Vertex from = *set_difference(core[i - 1], core[i]).begin();
    Vertex to = *set_difference(core[i], core[i - 1]).begin();
    if (surplus.contains(to)) {
      surplus = surplus.without(to).with(from);
      continue;
    }
    out.push_back(out.back().moved(from, to));
  }
  return out;
}

ReconfigSequence bridge(const SeparatorState& from, const SeparatorState& to) {
  ReconfigSequence out{from};
  while (out.back() != to) {
    const auto& X = out.back();
    out.push_back(X.moved(*set_difference(X, to).begin(), *set_difference(to, X).begin()));
  }
  return out;
}

}  // namespace

ReconfigSequence sp_solve_tj(const ReconfigInstance& instance, SpSolveStats* stats) {
  if (instance.rule() != Rule::TJ) throw InputError("sp_solve_tj: TJ instance required");
  return sp_solve_tj(instance, recognize_and_decompose(instance.graph()), stats);
}

ReconfigSequence sp_solve_tj(const ReconfigInstance& instance, const SpDecomposition& decomposition,
                             SpSolveStats* stats) {
  if (instance.rule() != Rule::TJ) throw InputError("sp_solve_tj: TJ instance required");
  const Graph& g = instance.graph();
  Vertex s = instance.s();
  Vertex t = instance.t();
  const auto& A = instance.source();
  const auto& B = instance.target();
  if (A == B) return {A};

  std::vector<char> none(static_cast<std::size_t>(g.vertex_count()), 0);
  if (!reachable_from(g, s, none)[static_cast<std::size_t>(t)]) return bridge(A, B);

  auto walk = [&](const SeparatorState& S) {
    SeparatorState core = shrink_to_minimal(g, s, t, S);
    return with_surplus(reconfigure_to_canonical(g, decomposition, s, t, core, stats), set_difference(S, core));
  };
  ReconfigSequence forward = walk(A);
  ReconfigSequence backward = walk(B);
  ReconfigSequence seq = forward;
  auto middle = bridge(forward.back(), backward.back());
  seq.insert(seq.end(), middle.begin() + 1, middle.end());
  seq.insert(seq.end(), backward.rbegin() + 1, backward.rend());
  seq = remove_repeats(std::move(seq));
  if (!verify_sequence(instance, seq)) throw ContractViolation("sp_solve_tj produced an invalid sequence");
  return seq;
}

}  // namespace vsr
