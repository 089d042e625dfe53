// Copyright 2026 The snacs-hi Authors.
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

#ifndef SNACS_HIERARCHY_H_
#define SNACS_HIERARCHY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snacs/error.h"

namespace snacs {

enum class Group { kCircumstance, kParticipant, kConfiguration, kContext, kSpecial };

std::string_view GroupName(Group group);
std::optional<Group> ParseGroup(std::string_view name);

// One node of the label inventory.
struct Supersense {
  std::string name;
  Group group = Group::kSpecial;
  std::optional<std::string> parent;
  int depth = 0;
  bool placement_uncertain = false;
};

// A (scene role, function) pair. Written as a single label when the two
// coincide and as "Scene↝Function" otherwise.
struct ConstrualLabel {
  std::string scene;
  std::string function;

  ConstrualLabel() = default;
  ConstrualLabel(std::string scene_role, std::string fn)
      : scene(std::move(scene_role)), function(std::move(fn)) {}
  static ConstrualLabel Congruent(const std::string &label) {
    return ConstrualLabel(label, label);
  }

  bool congruent() const { return scene == function; }
  std::string ToString() const;

  // Accepts "Label" or "Scene↝Function". Returns nullopt on bad syntax.
  static std::optional<ConstrualLabel> Parse(std::string_view text);

  auto operator<=>(const ConstrualLabel &) const = default;
};

inline constexpr std::string_view kConstrualArrow = "↝";

// Immutable supersense forest. Safe for concurrent reads.
class Hierarchy {
 public:
  // Parses the line-based inventory format:
  //   name <TAB> parent-or-"-" <TAB> group [<TAB> flags]
  // Throws LoadError on duplicates, dangling parents, cycles, group mismatch,
  // or an empty inventory.
  static Hierarchy Load(std::string_view text);
  static Hierarchy LoadFile(const std::filesystem::path &path);

  bool Contains(std::string_view name) const;
  const Supersense *Find(std::string_view name) const;
  // Throws UnknownLabelError.
  const Supersense &Get(std::string_view name) const;

  // True iff `ancestor` lies on the parent chain of `descendant` (reflexive).
  bool Subsumes(std::string_view ancestor, std::string_view descendant) const;

  // Deepest common ancestor. Throws Error("no common ancestor") when the two
  // labels live under different roots.
  const std::string &Lca(std::string_view a, std::string_view b) const;

  // Name of the root of the tree containing `name`.
  const std::string &RootOf(std::string_view name) const;

  // Parent chain from `name` up to its root, inclusive on both ends.
  std::vector<std::string> Chain(std::string_view name) const;

  bool Contains(const ConstrualLabel &label) const {
    return Contains(label.scene) && Contains(label.function);
  }

  // Nodes in file order.
  const std::vector<Supersense> &nodes() const { return nodes_; }
  std::vector<std::string> roots() const;
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<Supersense> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace snacs

#endif  // SNACS_HIERARCHY_H_
