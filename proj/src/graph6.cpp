#include "codis/graph6.hpp"

#include <cstdint>
#include <vector>

namespace codis {

namespace {

constexpr int64_t kMaxOrder = 1 << 18;

struct ByteReader {
    std::string_view s;
    size_t pos = 0;

    int take() {
        if (pos >= s.size()) throw FormatError("unexpected end of input", pos);
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) throw FormatError("byte out of printable range 63..126", pos);
        ++pos;
        return c - 63;
    }
    bool done() const { return pos >= s.size(); }
};

int64_t read_order(ByteReader& r) {
    int v = r.take();
    if (v < 63) return v;
    // '~' prefix: 18-bit form, '~~' prefix: 36-bit form.
    int w = r.take();
    if (w < 63) {
        int64_t n = w;
        for (int i = 0; i < 2; ++i) n = (n << 6) | r.take();
        return n;
    }
    int64_t n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | r.take();
    return n;
}

struct BitReader {
    ByteReader& r;
    int cur = 0;
    int left = 0;

    int bit() {
        if (left == 0) {
            cur = r.take();
            left = 6;
        }
        --left;
        return (cur >> left) & 1;
    }
    int bits(int k) {
        int v = 0;
        for (int i = 0; i < k; ++i) v = (v << 1) | bit();
        return v;
    }
    bool exhausted(int need) const {
        return left < need && r.done();
    }
    int available() const { return left + 6 * static_cast<int>(r.s.size() - r.pos); }
};

std::string_view strip_header(std::string_view text, std::string_view header) {
    if (text.substr(0, header.size()) == header) return text.substr(header.size());
    return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_header(text, ">>graph6<<");
    ByteReader r{text};
    int64_t n64 = read_order(r);
    if (n64 > kMaxOrder) throw FormatError("graph order exceeds supported maximum", 0);
    int n = static_cast<int>(n64);
    BitReader bits{r};
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.bit()) edges.emplace_back(i, j);
    // Remaining bits are padding and must be zero.
    while (bits.left > 0)
        if (bits.bit()) throw FormatError("nonzero padding bits", r.pos);
    if (!r.done()) throw FormatError("trailing bytes after graph6 body", r.pos);
    return Graph::from_edges(n, edges);
}

Graph parse_sparse6(std::string_view text) {
    text = strip_header(text, ">>sparse6<<");
    if (text.empty() || text[0] != ':') throw FormatError("sparse6 input must start with ':'", 0);
    ByteReader r{text.substr(1)};
    int64_t n64 = read_order(r);
    if (n64 > kMaxOrder) throw FormatError("graph order exceeds supported maximum", 0);
    int n = static_cast<int>(n64);
    int k = 0;
    while ((1 << k) < (n > 1 ? n - 1 : 1) + 1) ++k;
    if (k == 0) k = 1;
    BitReader bits{r};
    std::vector<std::pair<int, int>> edges;
    int v = 0;
    while (bits.available() >= 1 + k) {
        int b = bits.bit();
        int x = bits.bits(k);
        if (b) ++v;
        if (v >= n || x >= n) break;
        if (x > v)
            v = x;
        else if (x != v)
            edges.emplace_back(x, v);
        else
            throw FormatError("loop edge in sparse6 stream", r.pos);
    }
    return Graph::from_edges(n, edges);
}

Graph parse_graph_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    std::string_view body = line;
    body = strip_header(body, ">>graph6<<");
    body = strip_header(body, ">>sparse6<<");
    if (!body.empty() && body[0] == ':') return parse_sparse6(body);
    return parse_graph6(body);
}

std::string emit_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace codis
