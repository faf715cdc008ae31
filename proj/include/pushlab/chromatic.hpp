#ifndef PUSHLAB_CHROMATIC_HPP
#define PUSHLAB_CHROMATIC_HPP

#include <pushlab/orientation.hpp>

#include <span>
#include <vector>

namespace pushlab
{
    inline constexpr int max_chromatic_order = 7;

    struct ColoringCertificate
    {
        std::vector<int> colours;
        int size = 0;
    };

    struct OrientedChromatic
    {
        int number = 0;
        ColoringCertificate certificate;
    };

    /// Adjacent vertices differ, and no two colour classes have arcs in both directions.
    auto is_oriented_colouring(const Orientation & d, std::span<const int> colours) -> bool;

    /// Exact, by backtracking. Throws GraphError above order 7.
    auto oriented_chromatic_number(const Orientation & d) -> OrientedChromatic;

    /// Minimum over the push class. Throws GraphError above order 7.
    auto pushable_chromatic_number(const Orientation & d) -> int;
}

#endif
