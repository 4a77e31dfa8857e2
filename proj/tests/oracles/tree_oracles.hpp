#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nilcmetrix/text_model.hpp"

namespace oracle {

using nilcmetrix::ConstituencyNode;

inline ConstituencyNode leaf(std::size_t index) {
  ConstituencyNode n;
  n.label = "w" + std::to_string(index);
  n.leaf_token = index;
  return n;
}

inline ConstituencyNode node(std::string label, std::vector<ConstituencyNode> children) {
  ConstituencyNode n;
  n.label = std::move(label);
  n.children = std::move(children);
  return n;
}

/// Yngve loads by explicit stack simulation: a word's load is the number of
/// constituents still waiting on the stack when the word is produced.
inline std::vector<double> yngve_stack(const ConstituencyNode& root) {
  std::vector<double> out;
  std::vector<const ConstituencyNode*> stack{&root};
  while (!stack.empty()) {
    const ConstituencyNode* n = stack.back();
    stack.pop_back();
    if (n->children.empty()) {
      out.push_back(static_cast<double>(stack.size()));
      continue;
    }
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

/// Frazier scores by climbing parent pointers from each leaf.
inline std::vector<double> frazier_climb(const ConstituencyNode& root,
                                         const std::vector<std::string>& sentence_labels) {
  struct Flat {
    const ConstituencyNode* node;
    int parent;
    std::size_t position;
  };
  std::vector<Flat> flat;
  std::vector<int> leaves;
  std::function<void(const ConstituencyNode&, int, std::size_t)> visit =
      [&](const ConstituencyNode& n, int parent, std::size_t position) {
        int me = static_cast<int>(flat.size());
        flat.push_back({&n, parent, position});
        if (n.children.empty()) leaves.push_back(me);
        for (std::size_t i = 0; i < n.children.size(); ++i) visit(n.children[i], me, i);
      };
  visit(root, -1, 0);

  auto sentential = [&](int idx) {
    const std::string& label = flat[static_cast<std::size_t>(idx)].node->label;
    std::string base = label.substr(0, label.find_first_of("-="));
    for (const auto& s : sentence_labels) {
      if (s == base) return true;
    }
    return false;
  };

  std::vector<double> out;
  for (int leaf_idx : leaves) {
    int cur = leaf_idx;
    std::vector<int> path{cur};
    while (flat[static_cast<std::size_t>(cur)].parent >= 0 &&
           flat[static_cast<std::size_t>(cur)].position == 0) {
      cur = flat[static_cast<std::size_t>(cur)].parent;
      path.push_back(cur);
    }
    if (path.size() == 1) {
      out.push_back(0);
      continue;
    }
    double score = 0;
    for (int p : path) {
      int parent = flat[static_cast<std::size_t>(p)].parent;
      score += parent >= 0 && sentential(parent) ? 1.5 : 1.0;
    }
    out.push_back(score);
  }
  return out;
}

inline double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0 : s / static_cast<double>(v.size());
}

/// Every ordered tree over leaves [first, first + n): internal nodes have at
/// least two children and carry a label from `labels`; each leaf may also be
/// wrapped in a unary preterminal "P"; the whole tree may be wrapped in one
/// unary root from `labels`.
inline void enumerate_trees(std::size_t n, const std::vector<std::string>& labels,
                            const std::function<void(const ConstituencyNode&)>& sink) {
  std::function<std::vector<ConstituencyNode>(std::size_t, std::size_t)> build;
  std::function<void(std::size_t, std::size_t, std::vector<ConstituencyNode>&,
                     std::vector<std::vector<ConstituencyNode>>&)>
      splits;

  // All ways to cut [first, first+n) into >= 2 consecutive non-empty parts,
  // expanded into children lists.
  splits = [&](std::size_t first, std::size_t n_left, std::vector<ConstituencyNode>& prefix,
               std::vector<std::vector<ConstituencyNode>>& out) {
    if (n_left == 0) {
      if (prefix.size() >= 2) out.push_back(prefix);
      return;
    }
    for (std::size_t k = 1; k <= n_left; ++k) {
      if (prefix.empty() && k == n_left) continue;
      for (auto& sub : build(first, k)) {
        prefix.push_back(sub);
        splits(first + k, n_left - k, prefix, out);
        prefix.pop_back();
      }
    }
  };

  build = [&](std::size_t first, std::size_t n_leaves) {
    std::vector<ConstituencyNode> out;
    if (n_leaves == 1) {
      out.push_back(leaf(first));
      out.push_back(node("P", {leaf(first)}));
      return out;
    }
    std::vector<ConstituencyNode> prefix;
    std::vector<std::vector<ConstituencyNode>> lists;
    splits(first, n_leaves, prefix, lists);
    for (const auto& children : lists) {
      for (const auto& label : labels) out.push_back(node(label, children));
    }
    return out;
  };

  for (const auto& tree : build(1, n)) {
    sink(tree);
    for (const auto& label : labels) sink(node(label, {tree}));
  }
}

}  // namespace oracle
