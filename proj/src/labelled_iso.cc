// Copyright 2026 The tempowl Authors
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

#include "labelled_iso.h"

#include <algorithm>
#include <map>
#include <utility>

namespace tempowl::internal {
namespace {

// Joint 1-WL over both graphs so class ids are comparable. Returns
// per-node classes of the concatenation [first..., second...].
std::vector<std::uint32_t> JointClasses(const LabelledGraph& a,
                                        const LabelledGraph& b) {
  const std::size_t na = a.size();
  const std::size_t total = na + b.size();
  auto graph_of = [&](std::size_t x) -> const LabelledGraph& {
    return x < na ? a : b;
  };
  auto local = [&](std::size_t x) { return x < na ? x : x - na; };

  std::map<std::vector<std::uint32_t>, std::uint32_t> label_ids;
  auto label_id = [&](const std::vector<std::uint32_t>& s) {
    return label_ids.emplace(s, static_cast<std::uint32_t>(label_ids.size()))
        .first->second;
  };

  std::vector<std::uint32_t> colour(total);
  {
    std::map<std::string, std::uint32_t> ids;
    for (std::size_t x = 0; x < total; ++x) {
      colour[x] = ids.emplace(graph_of(x).node_keys[local(x)],
                              static_cast<std::uint32_t>(ids.size()))
                      .first->second;
    }
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(total);
    for (std::size_t x = 0; x < total; ++x) {
      const LabelledGraph& g = graph_of(x);
      const std::size_t offset = x < na ? 0 : na;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> nbrs;
      for (std::size_t y = 0; y < g.size(); ++y) {
        const auto& ls = g.LabelsOf(local(x), y);
        if (!ls.empty()) nbrs.emplace_back(colour[offset + y], label_id(ls));
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::vector<std::uint32_t> sig{colour[x]};
      for (auto [c, l] : nbrs) {
        sig.push_back(c);
        sig.push_back(l);
      }
      next[x] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()))
                    .first->second;
    }
    colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class Search {
 public:
  Search(const LabelledGraph& a, const LabelledGraph& b,
         std::vector<std::uint32_t> classes)
      : a_(a), b_(b), classes_(std::move(classes)), n_(a.size()),
        image_(n_, kUnmapped), used_(n_, false) {}

  std::optional<std::vector<std::size_t>> Run() {
    BuildOrder();
    if (!Extend(0)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  std::uint32_t ClassOfFirst(std::size_t v) const { return classes_[v]; }
  std::uint32_t ClassOfSecond(std::size_t u) const { return classes_[n_ + u]; }

  // Smallest class first, then nodes with the most labelled pairs into the
  // already ordered prefix.
  void BuildOrder() {
    std::vector<std::size_t> class_size(n_ * 2 + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) ++class_size[ClassOfFirst(v)];
    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> links(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = kUnmapped;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best == kUnmapped || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_size[ClassOfFirst(v)] < class_size[ClassOfFirst(best)])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t w = 0; w < n_; ++w) {
        if (!a_.LabelsOf(best, w).empty()) ++links[w];
      }
    }
  }

  bool Consistent(std::size_t v, std::size_t u) const {
    for (std::size_t k = 0; k < depth_; ++k) {
      const std::size_t w = order_[k];
      if (a_.LabelsOf(v, w) != b_.LabelsOf(u, image_[w])) return false;
    }
    return true;
  }

  bool Extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    depth_ = depth;
    for (std::size_t u = 0; u < n_; ++u) {
      if (used_[u] || ClassOfSecond(u) != ClassOfFirst(v)) continue;
      if (!Consistent(v, u)) continue;
      image_[v] = u;
      used_[u] = true;
      if (Extend(depth + 1)) return true;
      used_[u] = false;
      image_[v] = kUnmapped;
      depth_ = depth;
    }
    return false;
  }

  const LabelledGraph& a_;
  const LabelledGraph& b_;
  std::vector<std::uint32_t> classes_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::size_t depth_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> FindIsomorphism(
    const LabelledGraph& first, const LabelledGraph& second) {
  if (first.size() != second.size()) return std::nullopt;
  std::vector<std::uint32_t> classes = JointClasses(first, second);
  std::vector<std::uint32_t> hist_a(classes.begin(),
                                    classes.begin() + first.size());
  std::vector<std::uint32_t> hist_b(classes.begin() + first.size(),
                                    classes.end());
  std::sort(hist_a.begin(), hist_a.end());
  std::sort(hist_b.begin(), hist_b.end());
  if (hist_a != hist_b) return std::nullopt;
  return Search(first, second, std::move(classes)).Run();
}

}  // namespace tempowl::internal
