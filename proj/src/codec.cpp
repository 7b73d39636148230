#include "eqhuff/codec.hpp"

#include <array>
#include <istream>
#include <iterator>
#include <ostream>
#include <unordered_map>

namespace eqhuff {

namespace {

// Binary trie over the code words; leaves carry the codebook entry index.
class DecodeTrie {
 public:
  explicit DecodeTrie(const Codebook& codebook) {
    nodes_.push_back({});
    for (std::size_t e = 0; e < codebook.size(); ++e) {
      const auto& code = codebook[e].code;
      if (code.empty()) throw CodecError("codebook has an empty code word");
      std::size_t at = 0;
      for (char c : code) {
        if (nodes_[at].symbol >= 0) throw CodecError("codebook is not prefix-free");
        const int b = c == '1' ? 1 : 0;
        if (nodes_[at].child[b] == 0) {
          nodes_[at].child[b] = nodes_.size();
          nodes_.push_back({});
        }
        at = nodes_[at].child[b];
      }
      if (nodes_[at].symbol >= 0 || nodes_[at].child[0] || nodes_[at].child[1]) {
        throw CodecError("codebook is not prefix-free");
      }
      nodes_[at].symbol = static_cast<long>(e);
    }
  }

  // Node 0 is the root; child index 0 means absent.
  struct Node {
    std::array<std::size_t, 2> child{0, 0};
    long symbol = -1;
  };

  const Node& node(std::size_t i) const { return nodes_[i]; }

 private:
  std::vector<Node> nodes_;
};

}  // namespace

std::string Bitstream::to_string() const {
  std::string s;
  s.reserve(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) s.push_back(bit(i) ? '1' : '0');
  return s;
}

void BitWriter::put(bool bit) {
  if (out_.bit_count % 8 == 0) out_.payload.push_back(0);
  if (bit) out_.payload.back() |= static_cast<std::uint8_t>(0x80U >> (out_.bit_count % 8));
  ++out_.bit_count;
}

void BitWriter::put(std::string_view bits) {
  for (char c : bits) put(c == '1');
}

Bitstream BitWriter::finish() && { return std::move(out_); }

Bitstream encode(const Codebook& codebook, const std::vector<std::string>& ids) {
  std::unordered_map<std::string_view, std::string_view> lookup;
  for (const auto& e : codebook.entries()) lookup.emplace(e.id, e.code);
  BitWriter writer;
  for (const auto& id : ids) {
    const auto it = lookup.find(id);
    if (it == lookup.end()) throw CodecError("unknown symbol id '" + id + "'");
    writer.put(it->second);
  }
  return std::move(writer).finish();
}

std::vector<std::string> decode(const Codebook& codebook, const Bitstream& stream,
                                std::size_t count) {
  const DecodeTrie trie(codebook);
  std::vector<std::string> out;
  out.reserve(count);
  std::size_t pos = 0;
  while (out.size() < count) {
    std::size_t at = 0;
    const std::size_t start = pos;
    while (trie.node(at).symbol < 0) {
      if (pos >= stream.bit_count) {
        throw CodecError("bit stream exhausted inside a code word at bit " +
                         std::to_string(start) + " (symbol " + std::to_string(out.size()) +
                         ")");
      }
      const std::size_t next = trie.node(at).child[stream.bit(pos) ? 1 : 0];
      if (next == 0) {
        throw CodecError("no code word matches at bit " + std::to_string(start));
      }
      at = next;
      ++pos;
    }
    out.push_back(codebook[static_cast<std::size_t>(trie.node(at).symbol)].id);
  }
  return out;
}

void write_stream(std::ostream& os, const Bitstream& stream, std::uint64_t count) {
  std::array<char, 8> header{};
  for (std::size_t i = 0; i < 8; ++i) {
    header[i] = static_cast<char>((count >> (8 * i)) & 0xFFU);
  }
  os.write(header.data(), header.size());
  os.write(reinterpret_cast<const char*>(stream.payload.data()),
           static_cast<std::streamsize>(stream.payload.size()));
  if (!os) throw CodecError("failed to write stream");
}

StreamFile read_stream(std::istream& is) {
  std::array<char, 8> header{};
  if (!is.read(header.data(), header.size())) {
    throw CodecError("stream shorter than its 8-byte header");
  }
  StreamFile file;
  for (std::size_t i = 0; i < 8; ++i) {
    file.count |= static_cast<std::uint64_t>(static_cast<unsigned char>(header[i])) << (8 * i);
  }
  file.stream.payload.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
  file.stream.bit_count = file.stream.payload.size() * 8;
  return file;
}

}  // namespace eqhuff
