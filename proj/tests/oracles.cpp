#include "oracles.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle
{
    auto bitstring(const Graph & g, const std::vector<int> & perm) -> std::string
    {
        int n = g.order();
        std::vector<int> at(n);
        for (int v = 0; v < n; ++v)
            at[perm[v]] = v;
        std::string s;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                s += g.adjacent(at[i], at[j]) ? '1' : '0';
        return s;
    }

    auto naive_canonical_bits(const Graph & g) -> std::string
    {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::string best = bitstring(g, perm);
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::min(best, bitstring(g, perm));
        return best;
    }

    auto automorphism_count(const Graph & g) -> std::uint64_t
    {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t count = 0;
        do {
            bool ok = true;
            for (int u = 0; u < g.order() && ok; ++u)
                for (int v = u + 1; v < g.order() && ok; ++v)
                    ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
            count += ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return count;
    }

    auto boost_planar(const Graph & g) -> bool
    {
        using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
        BG bg(g.order());
        for (auto [u, v] : g.edges())
            boost::add_edge(u, v, bg);
        return boost::boyer_myrvold_planarity_test(bg);
    }

    auto arcs_of(const pushlab::Orientation & d) -> Arcs
    {
        Arcs a{ d.order(), {} };
        for (int u = 0; u < d.order(); ++u)
            for (int v = 0; v < d.order(); ++v)
                if (d.has_arc(u, v))
                    a.arcs.emplace_back(u, v);
        return a;
    }

    auto oriented_clique(const Arcs & a) -> bool
    {
        std::set<std::pair<int, int>> arc(a.arcs.begin(), a.arcs.end());
        for (int u = 0; u < a.n; ++u)
            for (int v = u + 1; v < a.n; ++v) {
                if (arc.contains({ u, v }) || arc.contains({ v, u }))
                    continue;
                bool path = false;
                for (int w = 0; w < a.n && ! path; ++w)
                    path = (arc.contains({ u, w }) && arc.contains({ w, v })) || (arc.contains({ v, w }) && arc.contains({ w, u }));
                if (! path)
                    return false;
            }
        return true;
    }

    namespace
    {
        auto pushed(const Arcs & a, unsigned s) -> Arcs
        {
            Arcs r{ a.n, {} };
            for (auto [x, y] : a.arcs) {
                bool flip = ((s >> x) & 1u) != ((s >> y) & 1u);
                r.arcs.emplace_back(flip ? std::pair{ y, x } : std::pair{ x, y });
            }
            return r;
        }

        auto colourable(const Arcs & a, int k) -> bool
        {
            std::vector<int> colour(a.n, 0);
            while (true) {
                bool ok = true;
                std::set<std::pair<int, int>> between;
                for (auto [x, y] : a.arcs) {
                    if (colour[x] == colour[y]) {
                        ok = false;
                        break;
                    }
                    between.insert({ colour[x], colour[y] });
                }
                if (ok)
                    for (auto [c, d] : between)
                        if (between.contains({ d, c }))
                            ok = false;
                if (ok)
                    return true;
                int i = 0;
                while (i < a.n && ++colour[i] == k)
                    colour[i++] = 0;
                if (i == a.n)
                    return false;
            }
        }

        auto orientations(const Graph & g) -> std::vector<Arcs>
        {
            auto edges = g.edges();
            std::vector<Arcs> all;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{ 1 } << edges.size()); ++bits) {
                Arcs a{ g.order(), {} };
                for (std::size_t i = 0; i < edges.size(); ++i)
                    a.arcs.emplace_back((bits >> i) & 1u ? std::pair{ edges[i].u, edges[i].v } : std::pair{ edges[i].v, edges[i].u });
                all.push_back(std::move(a));
            }
            return all;
        }
    }

    auto push_clique(const Arcs & a) -> bool
    {
        for (unsigned s = 0; s < (1u << a.n); ++s)
            if (! oriented_clique(pushed(a, s)))
                return false;
        return true;
    }

    auto oriented_chromatic(const Arcs & a) -> int
    {
        int k = 1;
        while (! colourable(a, k))
            ++k;
        return k;
    }

    auto pushable_chromatic(const Arcs & a) -> int
    {
        int best = a.n;
        for (unsigned s = 0; s < (1u << a.n); ++s)
            best = std::min(best, oriented_chromatic(pushed(a, s)));
        return best;
    }

    auto underlying_push_clique(const Graph & g) -> bool
    {
        for (const auto & a : orientations(g))
            if (push_clique(a))
                return true;
        return false;
    }

    auto underlying_oriented_clique(const Graph & g) -> bool
    {
        for (const auto & a : orientations(g))
            if (oriented_clique(a))
                return true;
        return false;
    }

    auto all_labelled_graphs(int n) -> std::vector<Graph>
    {
        std::vector<pushlab::Edge> pairs;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                pairs.push_back({ i, j });
        std::vector<Graph> all;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{ 1 } << pairs.size()); ++bits) {
            pushlab::GraphBuilder b{ n };
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((bits >> i) & 1u)
                    b.add_edge(pairs[i].u, pairs[i].v);
            all.push_back(b.build());
        }
        return all;
    }
}
