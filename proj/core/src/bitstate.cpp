#include "revequiv/bitstate.hpp"

#include "revequiv/errors.hpp"

namespace rev {

BitState BitState::from_string(std::string_view text) {
  BitState s(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '1')
      s.bits_[k] = 1;
    else if (text[k] != '0')
      throw ParseError("bit string may contain only '0' and '1': " +
                       std::string(text));
  }
  return s;
}

BitState BitState::from_index(std::size_t size, std::uint64_t index) {
  if (size > 64) throw IndexError("from_index supports at most 64 bits");
  if (size < 64 && index >> size)
    throw IndexError("index does not fit in " + std::to_string(size) + " bits");
  BitState s(size);
  for (std::size_t k = 0; k < size; ++k)
    s.bits_[k] = static_cast<std::uint8_t>((index >> (size - 1 - k)) & 1);
  return s;
}

std::uint64_t BitState::to_index() const {
  if (size() > 64) throw IndexError("to_index supports at most 64 bits");
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < size(); ++k) index = (index << 1) | bits_[k];
  return index;
}

std::string BitState::to_string() const {
  std::string out(size(), '0');
  for (std::size_t k = 0; k < size(); ++k)
    if (bits_[k]) out[k] = '1';
  return out;
}

}  // namespace rev
