#include "codis/formats.hpp"

#include <charconv>
#include <vector>

namespace codis {

namespace {

struct LineScanner {
    std::string_view text;
    size_t pos = 0;
    size_t line_no = 0;

    bool next(std::string_view& line) {
        while (pos < text.size()) {
            size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) raw.remove_suffix(1);
            while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t')) raw.remove_prefix(1);
            if (raw.empty() || raw.front() == '#') continue;
            line = raw;
            return true;
        }
        return false;
    }
};

std::pair<long, long> parse_pair(std::string_view line, size_t line_no) {
    long a = 0, b = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{}) throw FormatError("expected two integers", line_no);
    p = r1.ptr;
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr != end) throw FormatError("expected two integers", line_no);
    return {a, b};
}

std::vector<std::pair<int, int>> parse_pair_file(std::string_view text, int& n, bool allow_reverse_dup) {
    LineScanner sc{text};
    std::string_view line;
    if (!sc.next(line)) throw FormatError("missing 'n m' header", 1);
    auto [hn, hm] = parse_pair(line, sc.line_no);
    if (hn < 0 || hm < 0) throw FormatError("negative header values", sc.line_no);
    n = static_cast<int>(hn);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(hm);
    for (long i = 0; i < hm; ++i) {
        if (!sc.next(line)) throw FormatError("fewer lines than header promises", sc.line_no + 1);
        auto [u, v] = parse_pair(line, sc.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError("vertex id outside 0.." + std::to_string(n - 1), sc.line_no);
        if (u == v) throw FormatError("loop edge", sc.line_no);
        for (auto [a, b] : pairs)
            if ((a == u && b == v) || (allow_reverse_dup ? false : (a == v && b == u)))
                throw FormatError("duplicate edge", sc.line_no);
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (sc.next(line)) throw FormatError("trailing content after declared edges", sc.line_no);
    return pairs;
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
    int n = 0;
    auto pairs = parse_pair_file(text, n, false);
    return Graph::from_edges(n, pairs);
}

Digraph parse_digraph(std::string_view text) {
    int n = 0;
    auto pairs = parse_pair_file(text, n, true);
    return Digraph::from_edges(n, pairs);
}

Poset parse_poset(std::string_view text) {
    int n = 0;
    auto pairs = parse_pair_file(text, n, true);
    try {
        return Poset::from_covers(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what(), 0);
    }
}

std::string emit_edgelist(const Graph& g) {
    auto es = g.edges();
    std::string out = std::to_string(g.n()) + " " + std::to_string(es.size()) + "\n";
    for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace codis
