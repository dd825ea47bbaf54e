#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace modc {

bool is_bit_string(std::string_view s);

// An ultimately periodic point stem.cycle.cycle... of Cantor space.
//
// Values are canonical: the cycle is primitive (not a power of a shorter
// word) and the stem is shortest possible (while the stem ends with the
// bit the cycle ends with, that bit is absorbed by rotating the cycle).
// Two canonical values denote the same point iff they are identical.
class UpPoint {
 public:
  // Canonicalizes. The cycle must be a nonempty bit string, the stem a
  // possibly empty bit string; otherwise argument_error.
  UpPoint(std::string_view stem, std::string_view cycle);

  const std::string& stem() const noexcept { return stem_; }
  const std::string& cycle() const noexcept { return cycle_; }

  // Letter i of the infinite expansion.
  char at(std::size_t i) const noexcept;

  std::string prefix(std::size_t length) const;

  // Renders as pt(stem,cycle) with e for the empty stem.
  std::string to_string() const;

  friend bool operator==(const UpPoint&, const UpPoint&) = default;
  // Lexicographic on (stem, cycle); used for ordered enumeration.
  friend std::strong_ordering operator<=>(const UpPoint&, const UpPoint&) = default;

 private:
  std::string stem_;
  std::string cycle_;
};

}  // namespace modc
