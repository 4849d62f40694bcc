#include "graphcert/codec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "graphcert/errors.hpp"

namespace graphcert {

namespace {

constexpr int kGraph6MaxOrder = 258047;  // largest order of the 4-byte header

struct IntToken {
    long long value;
    std::size_t offset;
};

// All whitespace-separated decimal integers in `text`, with their offsets.
std::vector<IntToken> tokenize_ints(std::string_view text) {
    std::vector<IntToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = text[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (!std::isdigit(c))
            throw ParseError("expected a nonnegative integer", i);
        std::size_t start = i;
        long long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > kMaxVertices * static_cast<long long>(kMaxVertices))
                throw ParseError("integer too large", start);
            ++i;
        }
        out.push_back({value, start});
    }
    return out;
}

std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph decode_edge_list(std::string_view text) {
    auto tokens = tokenize_ints(text);
    if (tokens.size() < 2)
        throw ParseError("missing order/size header", text.size());
    long long n = tokens[0].value;
    long long m = tokens[1].value;
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph order out of range", tokens[0].offset);
    if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw ParseError("expected " + std::to_string(2 * m) +
                             " endpoint integers after the header, found " +
                             std::to_string(tokens.size() - 2),
                         tokens.size() > 2 ? tokens[2].offset : text.size());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<long long> seen;
    for (long long i = 0; i < m; ++i) {
        const auto& tu = tokens[2 + 2 * i];
        const auto& tv = tokens[3 + 2 * i];
        if (tu.value >= n) throw ParseError("vertex out of range", tu.offset);
        if (tv.value >= n) throw ParseError("vertex out of range", tv.offset);
        if (tu.value == tv.value) throw ParseError("loop edge", tu.offset);
        long long a = std::min(tu.value, tv.value);
        long long b = std::max(tu.value, tv.value);
        if (!seen.insert(a * n + b).second)
            throw ParseError("duplicate edge", tu.offset);
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    if (n > kGraph6MaxOrder)
        throw FormatOverflowError("graph6 supports order <= " +
                                  std::to_string(kGraph6MaxOrder));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 input", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", i);
    }
    std::size_t pos = 0;
    long long n;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw ParseError("graph6 orders beyond " +
                                 std::to_string(kGraph6MaxOrder) +
                                 " are not supported",
                             1);
        if (text.size() < 4) throw ParseError("truncated graph6 header", text.size());
        n = static_cast<long long>(text[1] - 63) << 12 |
            static_cast<long long>(text[2] - 63) << 6 |
            static_cast<long long>(text[3] - 63);
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph order out of range", 0);
    long long pairs = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos != body)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                             " bytes, expected " + std::to_string(body),
                         pos);
    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[pos + bit / 6] - 63;
            if (byte >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    for (long long b = pairs; b < static_cast<long long>(body) * 6; ++b)
        if ((text[pos + b / 6] - 63) >> (5 - b % 6) & 1)
            throw ParseError("nonzero padding bit", pos + b / 6);
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

}  // namespace

std::string encode_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edge_list ? encode_edge_list(g)
                                            : encode_graph6(g);
}

Graph decode_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::edge_list ? decode_edge_list(text)
                                            : decode_graph6(text);
}

GraphFormat format_for_path(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".el") == 0)
        return GraphFormat::edge_list;
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
        return GraphFormat::graph6;
    throw InvalidParameterError("cannot infer graph format from '" + path +
                                "' (expected .el or .g6)");
}

Graph load_graph_file(const std::string& path) {
    GraphFormat format = format_for_path(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameterError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (format == GraphFormat::graph6) {
        // One graph per file: reject trailing content after the first line.
        auto nl = text.find('\n');
        if (nl != std::string::npos &&
            text.find_first_not_of("\r\n", nl) != std::string::npos)
            throw InvalidParameterError("'" + path +
                                        "' holds more than one graph6 line");
    }
    return decode_graph(text, format);
}

}  // namespace graphcert
