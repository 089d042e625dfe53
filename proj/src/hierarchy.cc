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

#include "snacs/hierarchy.h"

#include <fstream>
#include <set>
#include <sstream>

#include "text_util.h"

namespace snacs {

namespace {

constexpr int kMaxDepth = 5;

struct RawNode {
  std::string name;
  std::string parent;
  Group group;
  bool uncertain;
  int line;
};

}  // namespace

std::string_view GroupName(Group group) {
  switch (group) {
    case Group::kCircumstance: return "Circumstance";
    case Group::kParticipant: return "Participant";
    case Group::kConfiguration: return "Configuration";
    case Group::kContext: return "Context";
    case Group::kSpecial: return "Special";
  }
  return "Special";
}

std::optional<Group> ParseGroup(std::string_view name) {
  for (Group g : {Group::kCircumstance, Group::kParticipant,
                  Group::kConfiguration, Group::kContext, Group::kSpecial}) {
    if (GroupName(g) == name) return g;
  }
  return std::nullopt;
}

std::string ConstrualLabel::ToString() const {
  if (congruent()) return scene;
  return scene + std::string(kConstrualArrow) + function;
}

std::optional<ConstrualLabel> ConstrualLabel::Parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto pos = text.find(kConstrualArrow);
  if (pos == std::string_view::npos) {
    if (!text::IsLabelName(text)) return std::nullopt;
    return Congruent(std::string(text));
  }
  std::string_view scene = text.substr(0, pos);
  std::string_view function = text.substr(pos + kConstrualArrow.size());
  if (!text::IsLabelName(scene) || !text::IsLabelName(function)) {
    return std::nullopt;
  }
  return ConstrualLabel(std::string(scene), std::string(function));
}

Hierarchy Hierarchy::Load(std::string_view data) {
  std::vector<RawNode> raw;
  std::map<std::string, int, std::less<>> first_line;
  int line_no = 0;
  for (std::string_view line : text::SplitLines(data)) {
    ++line_no;
    std::string_view body = text::StripComment(line);
    if (text::Trim(body).empty()) continue;
    auto fields = text::Split(body, '\t');
    if (fields.size() < 3 || fields.size() > 4) {
      throw LoadError("expected 3 or 4 TAB-separated fields", line_no);
    }
    RawNode node;
    node.name = std::string(text::Trim(fields[0]));
    node.parent = std::string(text::Trim(fields[1]));
    node.line = line_no;
    node.uncertain = false;
    if (node.name.empty()) throw LoadError("empty label name", line_no, 1);
    auto group = ParseGroup(text::Trim(fields[2]));
    if (!group) {
      throw LoadError("unknown group '" + std::string(fields[2]) + "'", line_no);
    }
    node.group = *group;
    if (fields.size() == 4) {
      for (auto flag : text::Split(fields[3], ',')) {
        flag = text::Trim(flag);
        if (flag == "placement-uncertain") {
          node.uncertain = true;
        } else if (!flag.empty()) {
          throw LoadError("unknown flag '" + std::string(flag) + "'", line_no);
        }
      }
    }
    auto [it, inserted] = first_line.emplace(node.name, line_no);
    if (!inserted) {
      throw LoadError("duplicate name '" + node.name + "' (first defined on line " +
                          std::to_string(it->second) + ")",
                      line_no);
    }
    raw.push_back(std::move(node));
  }
  if (raw.empty()) throw LoadError("no roots", 0);

  std::map<std::string, const RawNode *, std::less<>> by_name;
  for (const auto &n : raw) by_name[n.name] = &n;

  bool any_root = false;
  for (const auto &n : raw) {
    if (n.parent == "-") {
      any_root = true;
      continue;
    }
    auto it = by_name.find(n.parent);
    if (it == by_name.end()) {
      throw LoadError("dangling parent '" + n.parent + "' for '" + n.name + "'",
                      n.line);
    }
    if (it->second->group != n.group) {
      throw LoadError("'" + n.name + "' is in group " +
                          std::string(GroupName(n.group)) + " but its parent '" +
                          n.parent + "' is not",
                      n.line);
    }
  }
  if (!any_root) throw LoadError("no roots", 0);

  Hierarchy h;
  h.nodes_.reserve(raw.size());
  for (const auto &n : raw) {
    // Walk up the chain; a chain longer than the node count means a cycle.
    int depth = 0;
    std::set<std::string, std::less<>> seen{n.name};
    const RawNode *cur = &n;
    while (cur->parent != "-") {
      cur = by_name.at(cur->parent);
      if (!seen.insert(cur->name).second) {
        throw LoadError("cycle through '" + n.name + "'", n.line);
      }
      ++depth;
    }
    if (depth > kMaxDepth) {
      throw LoadError("'" + n.name + "' is nested deeper than " +
                          std::to_string(kMaxDepth),
                      n.line);
    }
    Supersense s;
    s.name = n.name;
    s.group = n.group;
    if (n.parent != "-") s.parent = n.parent;
    s.depth = depth;
    s.placement_uncertain = n.uncertain;
    h.index_[s.name] = h.nodes_.size();
    h.nodes_.push_back(std::move(s));
  }
  return h;
}

Hierarchy Hierarchy::LoadFile(const std::filesystem::path &path) {
  return Load(text::ReadFile(path));
}

bool Hierarchy::Contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

const Supersense *Hierarchy::Find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

const Supersense &Hierarchy::Get(std::string_view name) const {
  const Supersense *s = Find(name);
  if (s == nullptr) throw UnknownLabelError(std::string(name));
  return *s;
}

std::vector<std::string> Hierarchy::Chain(std::string_view name) const {
  std::vector<std::string> chain;
  const Supersense *cur = &Get(name);
  chain.push_back(cur->name);
  while (cur->parent) {
    cur = &Get(*cur->parent);
    chain.push_back(cur->name);
  }
  return chain;
}

bool Hierarchy::Subsumes(std::string_view ancestor,
                         std::string_view descendant) const {
  Get(ancestor);
  for (const auto &n : Chain(descendant)) {
    if (n == ancestor) return true;
  }
  return false;
}

const std::string &Hierarchy::RootOf(std::string_view name) const {
  const Supersense *cur = &Get(name);
  while (cur->parent) cur = &Get(*cur->parent);
  return cur->name;
}

const std::string &Hierarchy::Lca(std::string_view a, std::string_view b) const {
  auto chain_a = Chain(a);
  const Supersense *cur = &Get(b);
  for (;;) {
    for (const auto &n : chain_a) {
      if (n == cur->name) return cur->name;
    }
    if (!cur->parent) break;
    cur = &Get(*cur->parent);
  }
  throw Error("no common ancestor for " + std::string(a) + " and " +
              std::string(b));
}

std::vector<std::string> Hierarchy::roots() const {
  std::vector<std::string> out;
  for (const auto &n : nodes_) {
    if (!n.parent) out.push_back(n.name);
  }
  return out;
}

}  // namespace snacs
