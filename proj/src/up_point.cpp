#include "modc/up_point.hpp"

#include <algorithm>

#include "modc/errors.hpp"

namespace modc {

bool is_bit_string(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

namespace {

// Length of the shortest word whose repetition gives w.
std::size_t primitive_root_length(std::string_view w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < w.size() && periodic; ++i) {
      periodic = w[i] == w[i - d];
    }
    if (periodic) return d;
  }
  return w.size();
}

}  // namespace

UpPoint::UpPoint(std::string_view stem, std::string_view cycle)
    : stem_(stem), cycle_(cycle) {
  if (!is_bit_string(stem_) || !is_bit_string(cycle_)) {
    throw argument_error("up point: stem and cycle must be bit strings");
  }
  if (cycle_.empty()) {
    throw argument_error("up point: cycle must be nonempty");
  }
  cycle_.resize(primitive_root_length(cycle_));
  // Absorb a stem suffix that merely delays the periodic part: u.b and a
  // cycle ending in b denote the same point as u with the cycle rotated
  // one step backwards.
  while (!stem_.empty() && stem_.back() == cycle_.back()) {
    stem_.pop_back();
    cycle_.insert(cycle_.begin(), cycle_.back());
    cycle_.pop_back();
  }
}

char UpPoint::at(std::size_t i) const noexcept {
  if (i < stem_.size()) return stem_[i];
  return cycle_[(i - stem_.size()) % cycle_.size()];
}

std::string UpPoint::prefix(std::size_t length) const {
  std::string out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(at(i));
  return out;
}

std::string UpPoint::to_string() const {
  std::string out = "pt(";
  out += stem_.empty() ? "e" : stem_;
  out += ',';
  out += cycle_;
  out += ')';
  return out;
}

}  // namespace modc
