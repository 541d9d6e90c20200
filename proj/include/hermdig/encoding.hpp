#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hermdig/digraph.hpp"

namespace hermdig {

/// Largest order representable in the compact encoding.
inline constexpr int kMaxEncodedOrder = 62;

class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Compact "hd6" encoding: chr(63 + n), then the pair states in table order
/// as 2-bit codes, three per character (first code in the high bits),
/// each character chr(63 + v) for the 6-bit value v; the last character is
/// zero padded.
std::string encode(const Digraph& x);
Digraph decode(std::string_view text);

/// Line-oriented text format: "n=<N>", then one line per pair, "u>v" for an
/// arc and "u=v" for a digon. Blank lines and lines starting with '#' are
/// ignored when parsing; "u>v" together with "v>u" yields a digon.
std::string to_text(const Digraph& x);
Digraph from_text(std::string_view text);

}  // namespace hermdig
