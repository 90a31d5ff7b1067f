#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "egt/graph.hpp"

namespace egt {

enum class Graph6ErrorKind {
    MalformedHeader,
    CharOutOfRange,
    TruncatedPayload,
    TrailingData,
    NonzeroPadding,
    CapacityExceeded,
};

std::string_view to_string(Graph6ErrorKind kind);

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, std::size_t line, const std::string &what);

    Graph6ErrorKind kind() const { return kind_; }
    /// 1-based input line, or 0 when the string was not read from a stream.
    std::size_t line() const { return line_; }

private:
    Graph6ErrorKind kind_;
    std::size_t line_;
};

/// Decodes one graph6 string. Trailing '\r' / '\n' are ignored; an optional
/// ">>graph6<<" prefix is accepted. The 4-byte header ('~' + 18 bits) is recognised
/// and accepted up to the 64-vertex capacity.
Graph parse_graph6(std::string_view text, std::size_t line = 0);

/// Encodes g in the single-byte-header form; throws CapacityError for n > 62.
std::string encode_graph6(const Graph &g);

/// Pulls graph6 lines off an input stream one at a time.
///
/// Blank lines and lines starting with ">>" are skipped (a ">>graph6<<" banner glued to
/// the first graph is stripped). In strict mode a bad line throws Graph6Error; in lenient
/// mode it is returned as an error item and the stream continues.
class GraphStream {
public:
    struct Item {
        std::size_t line = 0;
        std::string text;
        std::variant<Graph, Graph6Error> value;

        bool ok() const { return std::holds_alternative<Graph>(value); }
        const Graph &graph() const { return std::get<Graph>(value); }
        const Graph6Error &error() const { return std::get<Graph6Error>(value); }
    };

    explicit GraphStream(std::istream &in, bool strict = true) : in_(in), strict_(strict) {}

    std::optional<Item> next();

    /// Number of physical lines read so far.
    std::size_t lines_read() const { return line_; }

    /// Consumes lines without parsing until lines_read() == line.
    void skip_to(std::size_t line);

private:
    std::istream &in_;
    bool strict_;
    std::size_t line_ = 0;
    std::string buf_;
};

}  // namespace egt
