#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rev {

// A fixed-length assignment of 0/1 values: the state of a reversible
// circuit's wires, or a truth assignment to variables (variable k lives
// at bit k-1). Serialized with bit 0 leftmost.
class BitState {
 public:
  // All-zero state of the given size.
  explicit BitState(std::size_t size) : bits_(size, 0) {}

  // Parses a string of '0'/'1' characters, leftmost character first.
  static BitState from_string(std::string_view text);

  // The state whose bits spell `index` in binary with bit 0 as the most
  // significant position: from_index(3, 0b011) has bits 0, 1, 1. Requires
  // size <= 64 and index < 2^size.
  static BitState from_index(std::size_t size, std::uint64_t index);

  // Inverse of from_index. Requires size() <= 64.
  std::uint64_t to_index() const;

  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t k) const { return bits_[k] != 0; }
  void set_bit(std::size_t k, bool value) { bits_[k] = value ? 1 : 0; }

  // '0'/'1' characters, bit 0 first.
  std::string to_string() const;

  friend bool operator==(const BitState&, const BitState&) = default;
  friend auto operator<=>(const BitState&, const BitState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace rev
