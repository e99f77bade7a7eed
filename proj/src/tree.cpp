#include "lukatree/tree.hpp"

#include <limits>
#include <utility>

#include "lukatree/error.hpp"

namespace lukatree {

PlanarTree PlanarTree::from_children(const TreeAlphabet& alphabet, std::vector<Letter> labels,
                                     const std::vector<std::vector<NodeId>>& children,
                                     NodeId root) {
  const std::size_t n = labels.size();
  if (n == 0 || children.size() != n || root >= n) {
    fail(ErrorCode::InvalidArgument, "malformed tree description");
  }
  if (n > std::numeric_limits<NodeId>::max()) fail(ErrorCode::InvalidArgument, "tree too large");
  PlanarTree tree(alphabet);
  tree.child_begin_.reserve(n + 1);
  tree.child_begin_.push_back(0);
  std::vector<std::uint32_t> in_degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] >= alphabet.size()) fail(ErrorCode::InvalidArgument, "label out of range");
    if (children[v].size() != alphabet.arity(labels[v])) {
      fail(ErrorCode::InvalidArgument, "node " + std::to_string(v) + " has " +
                                           std::to_string(children[v].size()) +
                                           " children, its label requires " +
                                           std::to_string(alphabet.arity(labels[v])));
    }
    for (auto c : children[v]) {
      if (c >= n) fail(ErrorCode::InvalidArgument, "child id out of range");
      ++in_degree[c];
      tree.children_.push_back(c);
    }
    tree.child_begin_.push_back(tree.children_.size());
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_degree[v] != (v == root ? 0u : 1u)) {
      fail(ErrorCode::InvalidArgument, "node " + std::to_string(v) + " has wrong parent count");
    }
  }
  // One parent per non-root node plus reachability of all n nodes rules out
  // cycles.
  std::vector<NodeId> stack{root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++reached;
    for (auto c : children[v]) stack.push_back(c);
  }
  if (reached != n) fail(ErrorCode::InvalidArgument, "not every node is reachable from the root");
  tree.labels_ = std::move(labels);
  tree.root_ = root;
  return tree;
}

PlanarTree word_to_tree(const LukasiewiczWord& word, const TreeAlphabet& alphabet) {
  const std::size_t n = word.size();
  PlanarTree tree(alphabet);
  tree.labels_.assign(word.letters().begin(), word.letters().end());
  tree.child_begin_.resize(n + 1);
  std::uint64_t offset = 0;
  for (std::size_t v = 0; v < n; ++v) {
    tree.child_begin_[v] = offset;
    offset += alphabet.arity(word[v]);
  }
  tree.child_begin_[n] = offset;
  tree.children_.resize(offset);

  // Each stack entry is a node still waiting for children, with the slot its
  // next child goes to.
  std::vector<std::pair<NodeId, std::uint64_t>> pending;
  for (std::size_t v = 0; v < n; ++v) {
    if (!pending.empty()) {
      auto& [parent, slot] = pending.back();
      tree.children_[slot++] = static_cast<NodeId>(v);
      if (slot == tree.child_begin_[parent + 1]) pending.pop_back();
    }
    if (alphabet.arity(word[v]) > 0) {
      pending.emplace_back(static_cast<NodeId>(v), tree.child_begin_[v]);
    }
  }
  tree.root_ = 0;
  return tree;
}

LukasiewiczWord tree_to_word(const PlanarTree& tree) {
  Word word;
  word.reserve(tree.size());
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    word.push_back(tree.label(v));
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return LukasiewiczWord(std::move(word));
}

std::uint64_t height(const PlanarTree& tree) {
  std::uint64_t best = 0;
  std::vector<std::pair<NodeId, std::uint64_t>> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    if (depth > best) best = depth;
    for (auto c : tree.children(v)) stack.emplace_back(c, depth + 1);
  }
  return best;
}

DegreeTuple degree_census(const PlanarTree& tree) {
  std::vector<std::uint64_t> counts(tree.alphabet().size(), 0);
  for (NodeId v = 0; v < tree.size(); ++v) ++counts[tree.label(v)];
  return DegreeTuple(std::move(counts));
}

namespace {

std::string to_parenthesized(const PlanarTree& tree) {
  const auto& alphabet = tree.alphabet();
  std::string out;
  out.reserve(tree.size() * 2);
  // (node, index of the next child to emit)
  std::vector<std::pair<NodeId, std::size_t>> stack;
  out += alphabet.symbol(tree.label(tree.root()));
  if (!tree.children(tree.root()).empty()) {
    out += '(';
    stack.emplace_back(tree.root(), 0);
  }
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = tree.children(v);
    if (next == kids.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    if (next > 0) out += ',';
    auto child = kids[next++];
    out += alphabet.symbol(tree.label(child));
    if (!tree.children(child).empty()) {
      out += '(';
      stack.emplace_back(child, 0);
    }
  }
  return out;
}

std::string to_dot(const PlanarTree& tree) {
  const auto& alphabet = tree.alphabet();
  // Renumber in preorder so the output does not depend on arena layout.
  std::vector<std::uint64_t> rank(tree.size());
  std::vector<NodeId> order;
  order.reserve(tree.size());
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    rank[v] = order.size();
    order.push_back(v);
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  std::string out = "digraph tree {\n";
  for (auto v : order) {
    out += "  n" + std::to_string(rank[v]) + " [label=\"" + alphabet.symbol(tree.label(v)) +
           "\"];\n";
  }
  for (auto v : order) {
    for (auto c : tree.children(v)) {
      out += "  n" + std::to_string(rank[v]) + " -> n" + std::to_string(rank[c]) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string serialize(const PlanarTree& tree, TreeFormat format) {
  switch (format) {
    case TreeFormat::Parenthesized: return to_parenthesized(tree);
    case TreeFormat::Dot: return to_dot(tree);
    case TreeFormat::Luka: return format_word(tree_to_word(tree).letters(), tree.alphabet());
  }
  fail(ErrorCode::InvalidArgument, "unknown tree format");
}

}  // namespace lukatree
