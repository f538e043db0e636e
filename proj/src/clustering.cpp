#include "proxigraph/clustering.hpp"

#include <algorithm>

namespace proxigraph {

std::size_t Clustering::noise_count() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), kNoise));
}

std::vector<std::vector<Index>> Clustering::members() const {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(cluster_count));
  for (Index i = 0; i < labels.size(); ++i)
    if (labels[i] != kNoise) out[static_cast<std::size_t>(labels[i])].push_back(i);
  return out;
}

void renumber_by_first_member(Clustering& c) {
  std::vector<int> remap(static_cast<std::size_t>(c.cluster_count), -1);
  int next = 0;
  for (int& label : c.labels) {
    if (label == kNoise) continue;
    auto& slot = remap[static_cast<std::size_t>(label)];
    if (slot < 0) slot = next++;
    label = slot;
  }
  auto permute = [&](auto& values) {
    auto copy = values;
    for (std::size_t old = 0; old < remap.size(); ++old)
      if (remap[old] >= 0) values[static_cast<std::size_t>(remap[old])] = copy[old];
    values.resize(static_cast<std::size_t>(next));
  };
  if (c.centers) permute(*c.centers);
  if (c.medoids) permute(*c.medoids);
  c.cluster_count = next;
}

}  // namespace proxigraph
