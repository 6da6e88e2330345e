#include "spectral_gate/graph6.hpp"

#include <algorithm>
#include <fstream>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

namespace {

constexpr int kBias = 63;
constexpr std::int64_t kMaxOrder = 258047;  // largest n with the 4-byte size field

// Reads 6-bit groups from a byte range, most significant bit first.
class BitReader {
 public:
  BitReader(std::string_view data, std::size_t base) : data_(data), base_(base) {}

  std::size_t remaining() const { return data_.size() * 6 - pos_; }

  int bit() {
    const std::size_t byte = pos_ / 6;
    const int shift = 5 - static_cast<int>(pos_ % 6);
    ++pos_;
    return ((data_[byte] - kBias) >> shift) & 1;
  }

  std::uint64_t bits(int count) {
    std::uint64_t x = 0;
    for (int i = 0; i < count; ++i) x = (x << 1) | static_cast<std::uint64_t>(bit());
    return x;
  }

  std::size_t byte_offset() const { return base_ + pos_ / 6; }

 private:
  std::string_view data_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

class BitWriter {
 public:
  void put(std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i) push(static_cast<int>((value >> i) & 1U));
  }
  std::size_t pending() const { return fill_; }
  // Zero-fills a partial last group.
  std::string finish() {
    if (fill_ != 0) put(0, 6 - static_cast<int>(fill_));
    return std::move(out_);
  }

 private:
  void push(int b) {
    cur_ = (cur_ << 1) | b;
    if (++fill_ == 6) {
      out_.push_back(static_cast<char>(cur_ + kBias));
      cur_ = 0;
      fill_ = 0;
    }
  }
  std::string out_;
  int cur_ = 0;
  std::size_t fill_ = 0;
};

void check_printable(std::string_view s, std::size_t base) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw MalformedEncoding("byte outside 63..126", base + i);
  }
}

// Parses N(n) starting at `pos`; advances pos past it.
std::int64_t read_order(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw MalformedEncoding("missing vertex count", pos);
  if (s[pos] != '~') return s[pos++] - kBias;
  int groups = 3;
  ++pos;
  if (pos < s.size() && s[pos] == '~') {
    groups = 6;
    ++pos;
  }
  if (pos + static_cast<std::size_t>(groups) > s.size()) throw MalformedEncoding("truncated vertex count", s.size());
  std::int64_t n = 0;
  for (int i = 0; i < groups; ++i) n = (n << 6) | (s[pos++] - kBias);
  if (n > kMaxOrder) throw MalformedEncoding("vertex count too large", pos - 1);
  return n;
}

void write_order(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  if (n > kMaxOrder) throw DomainError("graph too large to encode");
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
}

int bits_for(std::int64_t n) {
  int nb = 0;
  for (std::int64_t i = n - 1; i > 0; i >>= 1) ++nb;
  return nb;
}

Multigraph decode_graph6(std::string_view s, std::size_t base) {
  std::size_t pos = 0;
  const std::int64_t n = read_order(s, pos);
  const std::int64_t pairs = n * (n - 1) / 2;
  const auto want = static_cast<std::size_t>((pairs + 5) / 6);
  const std::string_view body = s.substr(pos);
  if (body.size() < want) throw MalformedEncoding("truncated adjacency data", base + s.size());
  if (body.size() > want) throw MalformedEncoding("trailing bytes", base + pos + want);
  BitReader in(body, base + pos);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (in.bit()) edges.emplace_back(i, j);
  while (in.remaining() > 0) {
    const std::size_t at = in.byte_offset();
    if (in.bit()) throw MalformedEncoding("non-zero padding bit", at);
  }
  return Multigraph::from_edge_list(static_cast<int>(n), edges);
}

Multigraph decode_sparse6(std::string_view s, std::size_t base) {
  std::size_t pos = 1;  // skip ':'
  const std::int64_t n = read_order(s, pos);
  const int nb = bits_for(n);
  BitReader in(s.substr(pos), base + pos);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::int64_t v = 0;
  while (in.remaining() >= static_cast<std::size_t>(nb) + 1) {
    if (in.bit()) ++v;
    const auto x = static_cast<std::int64_t>(in.bits(nb));
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else if (x == v) {
      throw LoopEdge(static_cast<int>(v));
    } else {
      edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
    }
  }
  return Multigraph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace

Multigraph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t base = 0;
  for (std::string_view header : {std::string_view(">>graph6<<"), std::string_view(">>sparse6<<")}) {
    if (line.substr(0, header.size()) == header) {
      line.remove_prefix(header.size());
      base = header.size();
    }
  }
  if (line.empty()) throw MalformedEncoding("empty line", base);
  if (line.front() == '&') throw MalformedEncoding("digraph6 is not supported", base);
  if (line.front() == ';') throw MalformedEncoding("incremental sparse6 is not supported", base);
  if (line.front() == ':') {
    check_printable(line.substr(1), base + 1);
    return decode_sparse6(line, base);
  }
  check_printable(line, base);
  return decode_graph6(line, base);
}

std::string encode_graph6(const Multigraph& g) {
  if (!g.simple()) throw DomainError("graph6 cannot encode parallel edges");
  std::string out;
  const int n = g.order();
  write_order(out, n);
  BitWriter w;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) w.put(g.multiplicity(i, j) > 0 ? 1 : 0, 1);
  return out + w.finish();
}

std::string encode_sparse6(const Multigraph& g) {
  const int n = g.order();
  std::string out = ":";
  write_order(out, n);
  const int nb = bits_for(n);

  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(),
            [](const EdgeCount& a, const EdgeCount& b) { return a.v != b.v ? a.v < b.v : a.u < b.u; });

  BitWriter w;
  std::int64_t last = 0;
  for (const auto& e : edges) {
    for (int c = 0; c < e.count; ++c) {
      if (e.v == last) {
        w.put(0, 1);
        w.put(static_cast<std::uint64_t>(e.u), nb);
        continue;
      }
      w.put(1, 1);
      if (e.v > last + 1) {
        w.put(static_cast<std::uint64_t>(e.v), nb);
        w.put(0, 1);
      }
      w.put(static_cast<std::uint64_t>(e.u), nb);
      last = e.v;
    }
  }
  const auto fill = static_cast<int>(w.pending());
  if (fill != 0) {
    const int pad = 6 - fill;
    // All-ones padding would read back as an edge when n is a power of two
    // and the last vertex seen is n-2.
    if (pad >= nb + 1 && last == n - 2 && n == (1 << nb)) {
      w.put(0, 1);
      w.put((std::uint64_t{1} << (pad - 1)) - 1, pad - 1);
    } else {
      w.put((std::uint64_t{1} << pad) - 1, pad);
    }
  }
  return out + w.finish();
}

std::string encode_graph(const Multigraph& g) { return g.simple() ? encode_graph6(g) : encode_sparse6(g); }

std::vector<Multigraph> read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<Multigraph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const MalformedEncoding& e) {
      throw MalformedEncoding(path.string() + " line " + std::to_string(lineno) + ": " + e.reason(), e.offset());
    }
  }
  return graphs;
}

}  // namespace spectral_gate
