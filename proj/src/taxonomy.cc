// Copyright 2026 The labelqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "labelqa/taxonomy.h"

#include <algorithm>
#include <unordered_set>

#include "labelqa/error.h"
#include "labelqa/io.h"
#include "labelqa/text.h"

namespace labelqa {
namespace {

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

// Walks parent links from `start` until a node repeats and renders the loop.
std::string DescribeCycle(std::size_t start,
                          const std::vector<std::size_t> &parent,
                          const std::vector<TaxonomyNode> &nodes) {
  std::vector<std::size_t> path;
  std::unordered_set<std::size_t> seen;
  std::size_t cur = start;
  while (cur != kNoParent && !seen.count(cur)) {
    seen.insert(cur);
    path.push_back(cur);
    cur = parent[cur];
  }
  std::string out;
  auto loop_start = std::find(path.begin(), path.end(), cur);
  for (auto it = loop_start; it != path.end(); ++it) {
    out += nodes[*it].id;
    out += " -> ";
  }
  out += nodes[cur].id;
  return out;
}

}  // namespace

TaxonomyTree TaxonomyTree::Build(std::span<const TaxonomyEntry> entries,
                                 const TaxonomyOptions &options) {
  if (entries.empty()) throw Error(ErrorCode::kEmptySource, "no entries");
  const std::string root_name = AsciiLower(options.root_name);
  if (root_name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "root name must be non-empty");
  }

  TaxonomyTree tree;
  tree.nodes_.reserve(entries.size() + 1);
  for (const TaxonomyEntry &e : entries) {
    TaxonomyNode n{e.id, AsciiLower(e.name), e.parent_id, 0};
    if (std::all_of(n.name.begin(), n.name.end(), IsAsciiSpace)) {
      throw Error(ErrorCode::kInvalidArgument, "blank name for id " + e.id);
    }
    if (!tree.index_.emplace(n.id, tree.nodes_.size()).second) {
      throw Error(ErrorCode::kDuplicateId, e.id);
    }
    tree.nodes_.push_back(std::move(n));
  }

  std::vector<std::size_t> top_level;
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
    const auto &p = tree.nodes_[i].parent_id;
    if (!p) {
      top_level.push_back(i);
    } else if (!tree.index_.count(*p)) {
      throw Error(ErrorCode::kDanglingParent,
                  tree.nodes_[i].id + " (parent " + *p + ")");
    }
  }

  if (top_level.size() == 1 && tree.nodes_[top_level[0]].name == root_name) {
    tree.root_ = top_level[0];
  } else {
    if (tree.index_.count(root_name)) {
      throw Error(ErrorCode::kDuplicateId,
                  root_name + " (reserved for the synthetic root)");
    }
    tree.root_ = tree.nodes_.size();
    tree.index_.emplace(root_name, tree.root_);
    tree.nodes_.push_back({root_name, root_name, std::nullopt, 0});
    for (std::size_t i : top_level) tree.nodes_[i].parent_id = root_name;
  }

  const std::size_t n = tree.nodes_.size();
  std::vector<std::size_t> parent(n, kNoParent);
  tree.children_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (i == tree.root_) continue;
    parent[i] = tree.index_.at(*tree.nodes_[i].parent_id);
    tree.children_[parent[i]].push_back(i);
  }

  // Levels by traversal from the root; anything unreached sits on a cycle
  // (or hangs below one).
  std::vector<std::size_t> stack{tree.root_};
  std::vector<bool> reached(n, false);
  tree.nodes_[tree.root_].level = 1;
  reached[tree.root_] = true;
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t c : tree.children_[cur]) {
      tree.nodes_[c].level = tree.nodes_[cur].level + 1;
      tree.height_ = std::max(tree.height_, tree.nodes_[c].level);
      reached[c] = true;
      stack.push_back(c);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!reached[i]) {
      throw Error(ErrorCode::kCycleDetected,
                  DescribeCycle(i, parent, tree.nodes_));
    }
  }
  return tree;
}

bool TaxonomyTree::contains(std::string_view id) const {
  return index_.count(std::string(id)) > 0;
}

std::size_t TaxonomyTree::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown node id " + std::string(id));
  }
  return it->second;
}

const TaxonomyNode &TaxonomyTree::node(std::string_view id) const {
  return nodes_[index_of(id)];
}

std::vector<std::string> TaxonomyTree::children(std::string_view id) const {
  std::vector<std::string> out;
  for (std::size_t c : children_[index_of(id)]) out.push_back(nodes_[c].id);
  return out;
}

std::vector<std::size_t> TaxonomyTree::PreOrder(std::size_t start) const {
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    order.push_back(cur);
    const auto &kids = children_[cur];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<TaxonomyEntry> ParseTaxonomyEntries(std::string_view text,
                                                std::string_view source_name) {
  std::vector<TaxonomyEntry> entries;
  for (const JsonLine &line : ParseJsonLines(text, source_name)) {
    TaxonomyEntry e;
    e.id = RequireString(line, source_name, "id");
    e.name = RequireString(line, source_name, "name");
    const Json &p = RequireField(line, source_name, "parent_id");
    if (p.is_string()) {
      e.parent_id = p.get<std::string>();
    } else if (!p.is_null()) {
      throw Error(ErrorCode::kParse,
                  std::string(source_name) + ":" +
                      std::to_string(line.line_number) +
                      ": parent_id must be a string or null");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

TaxonomyTree LoadTaxonomyText(std::string_view text,
                              const TaxonomyOptions &options) {
  auto entries = ParseTaxonomyEntries(text, "<taxonomy>");
  return TaxonomyTree::Build(entries, options);
}

TaxonomyTree LoadTaxonomy(const std::filesystem::path &path,
                          const TaxonomyOptions &options) {
  auto entries = ParseTaxonomyEntries(ReadFile(path), path.string());
  return TaxonomyTree::Build(entries, options);
}

std::string SerializeTaxonomy(const TaxonomyTree &tree) {
  std::string out;
  for (std::size_t i : tree.PreOrder()) {
    const TaxonomyNode &n = tree.node_at(i);
    Json line;
    line["id"] = n.id;
    line["name"] = n.name;
    line["parent_id"] = n.parent_id ? Json(*n.parent_id) : Json(nullptr);
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::vector<Subtree> SubtreesAtLevel(const TaxonomyTree &tree, int level) {
  if (level < 1 || level > tree.height()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(level) + " not in [1, " +
                    std::to_string(tree.height()) + "]");
  }
  std::vector<Subtree> out;
  for (std::size_t i : tree.PreOrder()) {
    if (tree.node_at(i).level != level) continue;
    Subtree s;
    s.parent_id = tree.node_at(i).id;
    for (std::size_t m : tree.PreOrder(i)) {
      s.member_ids.push_back(tree.node_at(m).id);
    }
    out.push_back(std::move(s));
  }
  return out;
}

PartitionStats ComputePartitionStats(const TaxonomyTree &tree, int level) {
  const auto subtrees = SubtreesAtLevel(tree, level);
  PartitionStats stats;
  stats.parent_level = level;
  stats.subtree_count = subtrees.size();
  stats.min_nodes = subtrees.front().node_count();
  for (const Subtree &s : subtrees) {
    stats.total_nodes += s.node_count();
    stats.max_nodes = std::max(stats.max_nodes, s.node_count());
    stats.min_nodes = std::min(stats.min_nodes, s.node_count());
  }
  return stats;
}

std::vector<std::string> FindConcept(const TaxonomyTree &tree,
                                     std::string_view name) {
  const std::string wanted = AsciiLower(name);
  std::vector<std::string> hits;
  for (std::size_t i : tree.PreOrder()) {
    if (tree.node_at(i).name == wanted) hits.push_back(tree.node_at(i).id);
  }
  return hits;
}

}  // namespace labelqa
