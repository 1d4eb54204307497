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

#ifndef LABELQA_TAXONOMY_H_
#define LABELQA_TAXONOMY_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace labelqa {

inline constexpr std::string_view kDefaultRootName = "eurovoc";

// One row of the flat node-list source format.
struct TaxonomyEntry {
  std::string id;
  std::string name;
  std::optional<std::string> parent_id;
};

struct TaxonomyNode {
  std::string id;
  std::string name;  // lowercase, non-empty
  std::optional<std::string> parent_id;  // empty only for the root
  int level = 1;  // root is 1
};

struct TaxonomyOptions {
  std::string root_name = std::string(kDefaultRootName);
};

// Immutable label hierarchy with a single root. Children keep the order in
// which they appeared in the source.
class TaxonomyTree {
 public:
  // Throws Error with kEmptySource, kDuplicateId, kDanglingParent or
  // kCycleDetected. Names are lowercased. A synthetic root is inserted
  // unless the source already has exactly one top-level node carrying the
  // root name.
  static TaxonomyTree Build(std::span<const TaxonomyEntry> entries,
                            const TaxonomyOptions &options = {});

  std::size_t size() const { return nodes_.size(); }
  int height() const { return height_; }
  const std::string &root_id() const { return nodes_[root_].id; }

  bool contains(std::string_view id) const;
  // Throws kInvalidArgument for unknown ids.
  const TaxonomyNode &node(std::string_view id) const;
  std::vector<std::string> children(std::string_view id) const;

  // Index-based access for traversals that run per record.
  std::size_t index_of(std::string_view id) const;
  const TaxonomyNode &node_at(std::size_t index) const {
    return nodes_[index];
  }
  const std::vector<std::size_t> &children_at(std::size_t index) const {
    return children_[index];
  }
  std::size_t root_index() const { return root_; }

  // Pre-order from `start` (parent first, source child order).
  std::vector<std::size_t> PreOrder(std::size_t start) const;
  std::vector<std::size_t> PreOrder() const { return PreOrder(root_); }

 private:
  TaxonomyTree() = default;

  std::vector<TaxonomyNode> nodes_;
  std::vector<std::vector<std::size_t>> children_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t root_ = 0;
  int height_ = 1;
};

// Parses the JSONL node-list format: {"id":..., "name":..., "parent_id":
// ... | null} per line.
std::vector<TaxonomyEntry> ParseTaxonomyEntries(std::string_view text,
                                                std::string_view source_name);
TaxonomyTree LoadTaxonomy(const std::filesystem::path &path,
                          const TaxonomyOptions &options = {});
TaxonomyTree LoadTaxonomyText(std::string_view text,
                              const TaxonomyOptions &options = {});

// Canonical node-list rendering: pre-order, root first with parent_id null.
// LoadTaxonomyText(SerializeTaxonomy(t)) reproduces t.
std::string SerializeTaxonomy(const TaxonomyTree &tree);

struct Subtree {
  std::string parent_id;
  std::vector<std::string> member_ids;  // pre-order, member_ids[0] == parent

  std::size_t node_count() const { return member_ids.size(); }
};

// One subtree per node at `level`, in pre-order of their parents. A leaf at
// that level gives a singleton subtree. Throws kLevelOutOfRange unless
// 1 <= level <= height.
std::vector<Subtree> SubtreesAtLevel(const TaxonomyTree &tree, int level);

struct PartitionStats {
  int parent_level = 0;
  std::size_t subtree_count = 0;
  std::size_t total_nodes = 0;  // mean = total_nodes / subtree_count
  std::size_t max_nodes = 0;
  std::size_t min_nodes = 0;

  double mean_nodes() const {
    return static_cast<double>(total_nodes) /
           static_cast<double>(subtree_count);
  }
  // Nearest integer, halves rounded up.
  std::size_t mean_nodes_rounded() const {
    return (2 * total_nodes + subtree_count) / (2 * subtree_count);
  }
};

PartitionStats ComputePartitionStats(const TaxonomyTree &tree, int level);

// Case-insensitive exact name match; ids returned in pre-order. Duplicate
// names are legal and all hits are returned.
std::vector<std::string> FindConcept(const TaxonomyTree &tree,
                                     std::string_view name);

}  // namespace labelqa

#endif  // LABELQA_TAXONOMY_H_
