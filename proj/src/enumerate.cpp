#include <pushlab/enumerate.hpp>
#include <pushlab/canonical.hpp>
#include <pushlab/error.hpp>

#include <algorithm>
#include <string>

namespace pushlab
{
    namespace
    {
        auto canonical_children(const Graph & parent) -> std::vector<Graph>
        {
            int k = parent.order();
            std::vector<Graph> children;
            for (Mask s = 0; s < bit(k); ++s) {
                GraphBuilder b{ k + 1 };
                for (int v = 0; v < k; ++v)
                    b.set_neighbours(v, parent.neighbours(v));
                b.set_neighbours(k, s);
                Graph child = b.build();
                if (is_canonical(child))
                    children.push_back(child);
            }
            return children;
        }
    }

    auto extend_by_one_vertex(const std::vector<Graph> & parents, Execution how) -> std::vector<Graph>
    {
        auto batches = kernels::map(how, parents, canonical_children);
        std::vector<Graph> result;
        for (auto & batch : batches)
            result.insert(result.end(), batch.begin(), batch.end());
        std::sort(result.begin(), result.end(), [] (const Graph & a, const Graph & b) { return encode(a) < encode(b); });
        return result;
    }

    auto enumerate_graphs(int n, Execution how) -> std::vector<Graph>
    {
        if (n < 1 || n > max_enumeration_order)
            throw GraphError{ "enumerate_graphs supports 1..9 vertices, got " + std::to_string(n) };
        std::vector<Graph> level{ Graph{ 1 } };
        for (int k = 2; k <= n; ++k)
            level = extend_by_one_vertex(level, how);
        return level;
    }
}
