#ifndef PUSHLAB_FORMATS_HPP
#define PUSHLAB_FORMATS_HPP

#include <pushlab/graph.hpp>

#include <string>
#include <string_view>

namespace pushlab
{
    class Orientation;

    /// graph6 line without the trailing newline.
    auto write_graph6(const Graph & g) -> std::string;

    /// Accepts one graph6 line; a single trailing '\n' is tolerated. Throws FormatError.
    auto parse_graph6(std::string_view text) -> Graph;

    /// digraph6 line ('&' prefix) without the trailing newline.
    auto write_digraph6(const Orientation & d) -> std::string;

    /// Parses a digraph6 line into an orientation; rejects loops and opposite arc pairs.
    auto parse_digraph6(std::string_view text) -> Orientation;
}

#endif
