#pragma once

#include <string>

#include <json.hpp>

#include "modc/closed_set.hpp"
#include "modc/delta02.hpp"
#include "modc/hierarchy.hpp"
#include "modc/selector.hpp"

namespace modc {

using Json = nlohmann::ordered_json;

// JSON encodings. Encoding then decoding is the identity; decoding
// validates canonicity and rejects non-canonical automata.
Json to_json(const ClosedSet& c);
ClosedSet closed_set_from_json(const Json& j);

Json to_json(const Delta02Set& s);
Delta02Set delta02_from_json(const Json& j);

Json to_json(const DifferenceChain& chain);
DifferenceChain chain_from_json(const Json& j);

Json to_json(const SelectionReport& report);

// Plain-text rendering, used by the command line. A Delta02Set that is
// closed prints as its canonical automaton; otherwise the components and
// the satisfying flag vectors are listed.
std::string to_text(const ClosedSet& c);
std::string to_text(const Delta02Set& s);
std::string to_text(const DifferenceChain& chain);

// Graphviz output: one node per state, a doubled circle on the initial
// state, edges labeled 0/1.
std::string to_dot(const ClosedSet& c);
std::string to_dot(const Delta02Set& s);

}  // namespace modc
