#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lukatree/alphabet.hpp"
#include "lukatree/words.hpp"

namespace lukatree {

using NodeId = std::uint32_t;

// Rooted planar tree stored as a flat arena. Node ids are arbitrary; the
// children of node v are children()[child_begin(v) .. child_begin(v+1)) in
// left-to-right order. Every node labelled a_i has exactly f(a_i) + 1
// children. Immutable after construction.
class PlanarTree {
 public:
  // Builds from explicit per-node labels and child lists. Checks arity,
  // single root, acyclicity and reachability; throws InvalidArgument.
  static PlanarTree from_children(const TreeAlphabet& alphabet, std::vector<Letter> labels,
                                  const std::vector<std::vector<NodeId>>& children, NodeId root);

  std::size_t size() const noexcept { return labels_.size(); }
  NodeId root() const noexcept { return root_; }
  Letter label(NodeId v) const { return labels_.at(v); }
  std::span<const NodeId> children(NodeId v) const {
    return std::span<const NodeId>(children_).subspan(child_begin_.at(v),
                                                      child_begin_.at(v + 1) - child_begin_[v]);
  }
  const TreeAlphabet& alphabet() const noexcept { return alphabet_; }

 private:
  PlanarTree(TreeAlphabet alphabet) : alphabet_(std::move(alphabet)) {}
  friend PlanarTree word_to_tree(const LukasiewiczWord&, const TreeAlphabet&);

  TreeAlphabet alphabet_;
  std::vector<Letter> labels_;
  std::vector<std::uint64_t> child_begin_;
  std::vector<NodeId> children_;
  NodeId root_ = 0;
};

// The tree whose preorder label sequence is `word`. Node ids are preorder
// ranks. Linear and recursion-free.
PlanarTree word_to_tree(const LukasiewiczWord& word, const TreeAlphabet& alphabet);

// Preorder (left-first depth-first) label sequence.
LukasiewiczWord tree_to_word(const PlanarTree& tree);

// Longest root-to-node path, in edges.
std::uint64_t height(const PlanarTree& tree);

// Number of nodes per letter.
DegreeTuple degree_census(const PlanarTree& tree);

enum class TreeFormat { Parenthesized, Dot, Luka };

// Parenthesized: `c(a,b(a))`, leaves as bare letters, no whitespace.
// Dot: a Graphviz digraph with nodes numbered in preorder.
// Luka: the preorder letter string.
std::string serialize(const PlanarTree& tree, TreeFormat format);

}  // namespace lukatree
