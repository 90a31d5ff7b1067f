#include "egt/graph6.hpp"

namespace egt {

namespace {

constexpr std::string_view kBanner = ">>graph6<<";

std::string where(std::size_t line) {
    return line == 0 ? std::string("graph6: ") : "graph6 line " + std::to_string(line) + ": ";
}

std::string_view trim_eol(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view to_string(Graph6ErrorKind kind) {
    switch (kind) {
    case Graph6ErrorKind::MalformedHeader: return "malformed-header";
    case Graph6ErrorKind::CharOutOfRange: return "char-out-of-range";
    case Graph6ErrorKind::TruncatedPayload: return "truncated-payload";
    case Graph6ErrorKind::TrailingData: return "trailing-data";
    case Graph6ErrorKind::NonzeroPadding: return "nonzero-padding";
    case Graph6ErrorKind::CapacityExceeded: return "capacity-exceeded";
    }
    return "unknown";
}

Graph6Error::Graph6Error(Graph6ErrorKind kind, std::size_t line, const std::string &what)
    : std::runtime_error(where(line) + std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      line_(line) {}

Graph parse_graph6(std::string_view text, std::size_t line) {
    text = trim_eol(text);
    if (text.starts_with(kBanner)) text.remove_prefix(kBanner.size());
    if (text.empty()) throw Graph6Error(Graph6ErrorKind::MalformedHeader, line, "empty line");

    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6ErrorKind::CharOutOfRange, line,
                              "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader, line, "short 8-byte header");
        throw Graph6Error(Graph6ErrorKind::CapacityExceeded, line,
                          "8-byte header encodes more than 258047 vertices");
    } else {
        if (text.size() < 4)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader, line, "short 4-byte header");
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        if (n < 63)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader, line,
                              "4-byte header used for n = " + std::to_string(n));
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error(Graph6ErrorKind::CapacityExceeded, line,
                          "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    const std::size_t have = text.size() - pos;
    if (have < need)
        throw Graph6Error(Graph6ErrorKind::TruncatedPayload, line,
                          "expected " + std::to_string(need) + " payload bytes, got " +
                              std::to_string(have));
    if (have > need)
        throw Graph6Error(Graph6ErrorKind::TrailingData, line,
                          std::to_string(have - need) + " bytes after payload");

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    for (; k < need * 6; ++k) {
        const int byte = text[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw Graph6Error(Graph6ErrorKind::NonzeroPadding, line, "padding bit set");
    }
    return g;
}

std::string encode_graph6(const Graph &g) {
    const int n = g.order();
    if (n > 62)
        throw CapacityError("graph6 encoder supports n <= 62, got " + std::to_string(n));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, '\0');
    out[0] = static_cast<char>(63 + n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (g.has_edge(u, v)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = static_cast<char>(out[i] + 63);
    return out;
}

std::optional<GraphStream::Item> GraphStream::next() {
    while (std::getline(in_, buf_)) {
        ++line_;
        std::string_view text = trim_eol(buf_);
        if (text.starts_with(kBanner)) text.remove_prefix(kBanner.size());
        if (text.empty() || text.starts_with(">>")) continue;
        Item item{line_, std::string(text), Graph{}};
        try {
            item.value = parse_graph6(text, line_);
        } catch (const Graph6Error &e) {
            if (strict_) throw;
            item.value = e;
        }
        return item;
    }
    return std::nullopt;
}

void GraphStream::skip_to(std::size_t line) {
    while (line_ < line && std::getline(in_, buf_)) ++line_;
}

}  // namespace egt
