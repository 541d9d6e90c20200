#include "hermdig/encoding.hpp"

#include <charconv>
#include <sstream>

namespace hermdig {

namespace {

constexpr int kBias = 63;

}  // namespace

std::string encode(const Digraph& x) {
  const int n = x.order();
  if (n > kMaxEncodedOrder)
    throw std::length_error("order " + std::to_string(n) + " exceeds the encoding limit");
  std::string out;
  out.reserve(1 + (x.pair_count() + 2) / 3);
  out.push_back(static_cast<char>(kBias + n));
  const auto pairs = x.pairs();
  for (std::size_t k = 0; k < pairs.size(); k += 3) {
    int v = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      v <<= 2;
      if (k + j < pairs.size()) v |= static_cast<int>(pairs[k + j]);
    }
    out.push_back(static_cast<char>(kBias + v));
  }
  return out;
}

Digraph decode(std::string_view text) {
  if (text.empty()) throw DecodeError("empty input", 0);
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n < 0 || n > kMaxEncodedOrder) throw DecodeError("malformed header", 0);
  Digraph d(n);
  const std::size_t pairs = d.pair_count();
  const std::size_t chars = (pairs + 2) / 3;
  for (std::size_t c = 0; c < chars; ++c) {
    const std::size_t pos = c + 1;
    if (pos >= text.size()) throw DecodeError("truncated input", text.size());
    const int v = static_cast<unsigned char>(text[pos]) - kBias;
    if (v < 0 || v > 63) throw DecodeError("character out of range", pos);
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t k = 3 * c + j;
      const int code = (v >> (4 - 2 * j)) & 3;
      if (k >= pairs) {
        if (code != 0) throw DecodeError("nonzero padding", pos);
        continue;
      }
      // pair k -> (i, jj) in table order
      int i = 0;
      std::size_t base = 0;
      while (base + static_cast<std::size_t>(n - i - 1) <= k) {
        base += static_cast<std::size_t>(n - i - 1);
        ++i;
      }
      const int jj = i + 1 + static_cast<int>(k - base);
      d.set_state(i, jj, static_cast<PairState>(code));
    }
  }
  if (text.size() != chars + 1) throw DecodeError("trailing garbage", chars + 1);
  return d;
}

std::string to_text(const Digraph& x) {
  std::ostringstream os;
  os << "n=" << x.order() << '\n';
  for (int u = 0; u < x.order(); ++u)
    for (int v = u + 1; v < x.order(); ++v) switch (x.state(u, v)) {
        case PairState::Fwd: os << u << '>' << v << '\n'; break;
        case PairState::Bwd: os << v << '>' << u << '\n'; break;
        case PairState::Digon: os << u << '=' << v << '\n'; break;
        case PairState::None: break;
      }
  return os.str();
}

namespace {

int parse_int(std::string_view s, std::size_t line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DecodeError("bad integer '" + std::string(s) + "'", line);
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Digraph from_text(std::string_view text) {
  Digraph d;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (!line.starts_with("n=")) throw DecodeError("expected 'n=<N>' header", line_no);
      const int n = parse_int(trim(line.substr(2)), line_no);
      if (n < 0) throw DecodeError("negative order", line_no);
      d = Digraph(n);
      have_header = true;
      continue;
    }
    const auto sep = line.find_first_of(">=");
    if (sep == std::string_view::npos) throw DecodeError("expected 'u>v' or 'u=v'", line_no);
    const int u = parse_int(trim(line.substr(0, sep)), line_no);
    const int v = parse_int(trim(line.substr(sep + 1)), line_no);
    if (u < 0 || v < 0 || u >= d.order() || v >= d.order() || u == v)
      throw DecodeError("bad vertex pair", line_no);
    if (line[sep] == '>')
      d.add_arc(u, v);
    else
      d.add_digon(u, v);
  }
  if (!have_header) throw DecodeError("missing 'n=<N>' header", line_no);
  return d;
}

}  // namespace hermdig
