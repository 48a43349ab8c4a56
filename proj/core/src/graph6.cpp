#include "gracegraph/graph6.hpp"

#include <vector>

namespace gracegraph {

namespace {

void append_sextets(std::string& out, const std::vector<bool>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (size_t j = 0; j < 6; ++j) {
      x <<= 1;
      if (i + j < bits.size() && bits[i + j]) x |= 1;
    }
    out.push_back(static_cast<char>(x + 63));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  long long n = g.order();
  if (n > kGraph6MaxOrder)
    throw error(error::kind::unsupported, "graph6: order above cap");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 258047 >= n >= 63: '~' then 18 bits
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 0x3f) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(n * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_sextets(out, bits);
  return out;
}

Graph decode_graph6(std::string_view s) {
  size_t pos = 0;
  // optional header used by some tools
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) pos = header.size();
  if (pos >= s.size()) fail_input("graph6: empty string");

  auto val = [&](size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      fail_input("graph6: invalid character at position " + std::to_string(i));
    return c - 63;
  };

  long long n;
  if (s[pos] != '~') {
    n = val(pos++);
  } else {
    ++pos;
    if (pos < s.size() && s[pos] == '~')
      fail_input("graph6: orders above 258047 not supported");
    if (pos + 3 > s.size()) fail_input("graph6: truncated order field");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | val(pos++);
  }
  if (n > kGraph6MaxOrder)
    throw error(error::kind::unsupported, "graph6: order above cap");

  long long nbits = n * (n - 1) / 2;
  long long nchars = (nbits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) < nchars)
    fail_input("graph6: truncated edge bits");
  if (static_cast<long long>(s.size() - pos) > nchars)
    fail_input("graph6: trailing characters");

  std::vector<Edge> edges;
  long long bit = 0;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) cur = val(pos + bit / 6);
      if (cur & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  return Graph::build(static_cast<int>(n), edges);
}

}  // namespace gracegraph
