#include <pushlab/formats.hpp>
#include <pushlab/orientation.hpp>
#include <pushlab/error.hpp>

#include <vector>

namespace pushlab
{
    namespace
    {
        auto pack_bits(const std::vector<bool> & bits) -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < bits.size(); i += 6) {
                int group = 0;
                for (std::size_t k = 0; k < 6; ++k)
                    group = (group << 1) | ((i + k < bits.size() && bits[i + k]) ? 1 : 0);
                out.push_back(static_cast<char>(group + 63));
            }
            return out;
        }

        auto unpack_bits(std::string_view body, std::size_t bit_count, std::string_view what) -> std::vector<bool>
        {
            std::size_t groups = (bit_count + 5) / 6;
            if (body.size() != groups)
                throw FormatError{ std::string{ what } + ": expected " + std::to_string(groups) + " data bytes, got "
                    + std::to_string(body.size()) };
            std::vector<bool> bits;
            bits.reserve(groups * 6);
            for (char c : body) {
                int byte = static_cast<unsigned char>(c);
                if (byte < 63 || byte > 126)
                    throw FormatError{ std::string{ what } + ": byte " + std::to_string(byte) + " outside 63..126" };
                int group = byte - 63;
                for (int k = 5; k >= 0; --k)
                    bits.push_back((group >> k) & 1);
            }
            for (std::size_t i = bit_count; i < bits.size(); ++i)
                if (bits[i])
                    throw FormatError{ std::string{ what } + ": nonzero padding bits" };
            bits.resize(bit_count);
            return bits;
        }

        auto strip_newline(std::string_view text) -> std::string_view
        {
            if (! text.empty() && text.back() == '\n')
                text.remove_suffix(1);
            if (! text.empty() && text.back() == '\r')
                text.remove_suffix(1);
            return text;
        }

        auto read_order(std::string_view text, std::string_view what) -> int
        {
            if (text.empty())
                throw FormatError{ std::string{ what } + ": empty input" };
            int byte = static_cast<unsigned char>(text.front());
            if (byte < 63 || byte > 126)
                throw FormatError{ std::string{ what } + ": byte " + std::to_string(byte) + " outside 63..126" };
            int n = byte - 63;
            if (n > 62)
                throw FormatError{ std::string{ what } + ": multi-byte order header is not supported" };
            if (n < 1 || n > max_order)
                throw FormatError{ std::string{ what } + ": order " + std::to_string(n) + " outside 1..12" };
            return n;
        }
    }

    auto write_graph6(const Graph & g) -> std::string
    {
        int n = g.order();
        std::vector<bool> bits;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g.adjacent(i, j));
        return static_cast<char>(n + 63) + pack_bits(bits);
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        text = strip_newline(text);
        if (! text.empty() && text.front() == '&')
            throw FormatError{ "graph6: got a digraph6 line" };
        int n = read_order(text, "graph6");
        auto bits = unpack_bits(text.substr(1), static_cast<std::size_t>(n * (n - 1) / 2), "graph6");
        GraphBuilder b{ n };
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (bits[k++])
                    b.add_edge(i, j);
        return b.build();
    }

    auto write_digraph6(const Orientation & d) -> std::string
    {
        int n = d.order();
        std::vector<bool> bits;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                bits.push_back(d.has_arc(i, j));
        return '&' + (static_cast<char>(n + 63) + pack_bits(bits));
    }

    auto parse_digraph6(std::string_view text) -> Orientation
    {
        text = strip_newline(text);
        if (text.empty() || text.front() != '&')
            throw FormatError{ "digraph6: line must start with '&'" };
        text.remove_prefix(1);
        int n = read_order(text, "digraph6");
        auto bits = unpack_bits(text.substr(1), static_cast<std::size_t>(n * n), "digraph6");

        GraphBuilder b{ n };
        OutMasks out{};
        for (int i = 0; i < n; ++i) {
            if (bits[i * n + i])
                throw FormatError{ "digraph6: loop at vertex " + std::to_string(i) };
            for (int j = 0; j < n; ++j) {
                if (! bits[i * n + j])
                    continue;
                if (bits[j * n + i])
                    throw FormatError{ "digraph6: opposite arcs between " + std::to_string(i) + " and " + std::to_string(j) };
                out[i] |= bit(j);
                b.add_edge(i, j);
            }
        }
        return Orientation::from_out_masks(b.build(), out);
    }
}
