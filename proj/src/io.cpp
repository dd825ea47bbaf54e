#include "modc/io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "modc/errors.hpp"

namespace modc {

namespace {

constexpr std::uint32_t kNone = ClosedSet::kNoTransition;

std::vector<std::string> satisfying_vectors(const Delta02Set& s) {
  std::vector<std::string> out;
  const std::size_t k = s.component_count();
  for (std::uint32_t mask = 0; mask < s.condition().size(); ++mask) {
    if (!s.condition_at(mask)) continue;
    std::string bits(k, '0');
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) bits[i] = '1';
    }
    out.push_back(std::move(bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json to_json(const ClosedSet& c) {
  Json edges = Json::array();
  for (std::uint32_t q = 0; q < c.state_count(); ++q) {
    for (unsigned b = 0; b < 2; ++b) {
      if (c.next(q, b) != kNone) edges.push_back({q, b, c.next(q, b)});
    }
  }
  Json out;
  out["states"] = c.state_count();
  if (c.is_empty_set()) {
    out["initial"] = nullptr;
  } else {
    out["initial"] = 0;
  }
  out["edges"] = std::move(edges);
  return out;
}

ClosedSet closed_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("states") || !j.contains("initial") ||
      !j.contains("edges")) {
    throw argument_error("closed set json: expected states, initial, edges");
  }
  const std::uint32_t states = j.at("states").get<std::uint32_t>();
  std::vector<std::array<std::uint32_t, 2>> t(states, {kNone, kNone});
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) {
      throw argument_error("closed set json: edge must be [from, bit, to]");
    }
    const std::uint32_t from = e[0].get<std::uint32_t>();
    const std::uint32_t bit = e[1].get<std::uint32_t>();
    const std::uint32_t to = e[2].get<std::uint32_t>();
    if (from >= states || to >= states || bit > 1) {
      throw argument_error("closed set json: edge out of range");
    }
    if (t[from][bit] != kNone) {
      throw argument_error("closed set json: duplicate edge");
    }
    t[from][bit] = to;
  }
  std::uint32_t initial = kNone;
  if (!j.at("initial").is_null()) initial = j.at("initial").get<std::uint32_t>();
  if ((initial == kNone) != (states == 0)) {
    throw argument_error("closed set json: initial must be null exactly when states = 0");
  }
  ClosedSet out = ClosedSet::canonicalize(initial, std::move(t));
  if (to_json(out) != j) {
    throw argument_error("closed set json: automaton is not in canonical form");
  }
  return out;
}

Json to_json(const Delta02Set& s) {
  Json components = Json::array();
  for (const ClosedSet& c : s.components()) components.push_back(to_json(c));
  Json condition = Json::array();
  for (const std::string& bits : satisfying_vectors(s)) condition.push_back(bits);
  Json out;
  out["components"] = std::move(components);
  out["condition"] = std::move(condition);
  return out;
}

Delta02Set delta02_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("condition")) {
    throw argument_error("delta02 json: expected components and condition");
  }
  std::vector<ClosedSet> components;
  for (const Json& c : j.at("components")) components.push_back(closed_set_from_json(c));
  const std::size_t k = components.size();
  std::vector<bool> condition(std::size_t{1} << k, false);
  for (const Json& entry : j.at("condition")) {
    const std::string bits = entry.get<std::string>();
    if (bits.size() != k || !is_bit_string(bits)) {
      throw argument_error("delta02 json: condition entry must be a k-bit string");
    }
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (bits[i] == '1') mask |= 1u << i;
    }
    condition[mask] = true;
  }
  Delta02Set out = Delta02Set::from_parts(std::move(components), std::move(condition));
  if (to_json(out) != j) {
    throw argument_error("delta02 json: value is not in normalized form");
  }
  return out;
}

Json to_json(const DifferenceChain& chain) {
  Json pairs = Json::array();
  for (const auto& [f, h] : chain.pairs()) {
    pairs.push_back(Json::array({to_json(f), to_json(h)}));
  }
  Json out;
  out["rank"] = chain.rank();
  out["pairs"] = std::move(pairs);
  return out;
}

DifferenceChain chain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("pairs")) {
    throw argument_error("chain json: expected rank and pairs");
  }
  std::vector<DifferenceChain::Pair> pairs;
  for (const Json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) {
      throw argument_error("chain json: pair must be [F, H]");
    }
    pairs.emplace_back(closed_set_from_json(p[0]), closed_set_from_json(p[1]));
  }
  if (j.at("rank").get<std::size_t>() != pairs.size()) {
    throw argument_error("chain json: rank must equal the number of pairs");
  }
  return DifferenceChain::from_pairs(std::move(pairs));
}

Json to_json(const SelectionReport& report) {
  Json kernels = Json::array();
  for (const auto& [kf, kh] : report.kernels) {
    kernels.push_back(Json::array({to_json(kf), to_json(kh)}));
  }
  Json out;
  out["chain"] = to_json(report.chain);
  out["kernels"] = std::move(kernels);
  out["selected"] = to_json(report.selected);
  return out;
}

std::string to_text(const ClosedSet& c) {
  std::string out = "states: " + std::to_string(c.state_count()) + "\n";
  out += c.is_empty_set() ? "initial: none\n" : "initial: 0\n";
  for (std::uint32_t q = 0; q < c.state_count(); ++q) {
    for (unsigned b = 0; b < 2; ++b) {
      if (c.next(q, b) != kNone) {
        out += std::to_string(q) + " -" + std::to_string(b) + "-> " +
               std::to_string(c.next(q, b)) + "\n";
      }
    }
  }
  return out;
}

std::string to_text(const Delta02Set& s) {
  const ClosedSet closed = closure(s);
  if (equals(s, lift(closed))) return to_text(closed);

  std::string out = "components: " + std::to_string(s.component_count()) + "\n";
  out += "condition:";
  for (const std::string& bits : satisfying_vectors(s)) out += " " + bits;
  out += "\n";
  for (std::size_t i = 0; i < s.component_count(); ++i) {
    out += "component " + std::to_string(i) + "\n";
    out += to_text(s.component(i));
  }
  return out;
}

std::string to_text(const DifferenceChain& chain) {
  std::string out = "rank: " + std::to_string(chain.rank()) + "\n";
  for (std::size_t i = 0; i < chain.rank(); ++i) {
    out += "F[" + std::to_string(i) + "]\n" + to_text(chain.pair(i).first);
    out += "H[" + std::to_string(i) + "]\n" + to_text(chain.pair(i).second);
  }
  return out;
}

namespace {

void dot_body(const ClosedSet& c, const std::string& prefix, std::string& out) {
  if (!c.is_empty_set()) {
    out += "  " + prefix + "0 [shape=doublecircle];\n";
  }
  for (std::uint32_t q = 0; q < c.state_count(); ++q) {
    for (unsigned b = 0; b < 2; ++b) {
      if (c.next(q, b) != kNone) {
        out += "  " + prefix + std::to_string(q) + " -> " + prefix +
               std::to_string(c.next(q, b)) + " [label=\"" + std::to_string(b) + "\"];\n";
      }
    }
  }
}

}  // namespace

std::string to_dot(const ClosedSet& c) {
  std::string out = "digraph closed_set {\n  rankdir=LR;\n  node [shape=circle];\n";
  dot_body(c, "", out);
  out += "}\n";
  return out;
}

std::string to_dot(const Delta02Set& s) {
  const ClosedSet closed = closure(s);
  if (equals(s, lift(closed))) return to_dot(closed);

  std::string out = "digraph delta02 {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  label=\"condition:";
  for (const std::string& bits : satisfying_vectors(s)) out += " " + bits;
  out += "\";\n";
  for (std::size_t i = 0; i < s.component_count(); ++i) {
    const std::string prefix = "c" + std::to_string(i) + "_";
    out += "  subgraph cluster_" + std::to_string(i) + " {\n";
    out += "    label=\"component " + std::to_string(i) + "\";\n";
    std::string body;
    dot_body(s.component(i), prefix, body);
    // Indent the shared body one extra level.
    std::string indented;
    for (std::size_t at = 0; at < body.size();) {
      const std::size_t end = body.find('\n', at);
      indented += "  " + body.substr(at, end - at + 1);
      at = end + 1;
    }
    out += indented;
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace modc
