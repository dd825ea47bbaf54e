#include "detail_graph.hpp"

#include <algorithm>

namespace modc::detail {

SccResult strongly_connected(const std::vector<std::array<std::uint32_t, 2>>& succ) {
  const std::uint32_t n = static_cast<std::uint32_t>(succ.size());
  SccResult out;
  out.component.assign(n, kNoEdge);

  std::vector<std::uint32_t> index(n, kNoEdge);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0;

  struct Frame {
    std::uint32_t node;
    unsigned edge;
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kNoEdge) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < 2) {
        const std::uint32_t w = succ[f.node][f.edge++];
        if (w == kNoEdge) continue;
        if (index[w] == kNoEdge) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        const std::uint32_t v = f.node;
        if (low[v] == index[v]) {
          const std::uint32_t id = out.count++;
          std::uint32_t members = 0;
          while (true) {
            const std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            out.component[w] = id;
            ++members;
            if (w == v) break;
          }
          out.size.push_back(members);
        }
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().node] = std::min(low[frames.back().node], low[v]);
        }
      }
    }
  }
  return out;
}

std::vector<char> on_cycle_flags(const std::vector<std::array<std::uint32_t, 2>>& succ,
                                 const SccResult& scc) {
  std::vector<char> out(succ.size(), 0);
  for (std::uint32_t v = 0; v < succ.size(); ++v) {
    if (scc.size[scc.component[v]] >= 2) {
      out[v] = 1;
    } else if (succ[v][0] == v || succ[v][1] == v) {
      out[v] = 1;
    }
  }
  return out;
}

std::vector<char> reaches(const std::vector<std::array<std::uint32_t, 2>>& succ,
                          const std::vector<char>& seed) {
  const std::uint32_t n = static_cast<std::uint32_t>(succ.size());
  std::vector<std::vector<std::uint32_t>> reverse(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (unsigned b = 0; b < 2; ++b) {
      if (succ[v][b] != kNoEdge) reverse[succ[v][b]].push_back(v);
    }
  }
  std::vector<char> out(seed);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (out[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.back();
    queue.pop_back();
    for (std::uint32_t w : reverse[v]) {
      if (!out[w]) {
        out[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace modc::detail
