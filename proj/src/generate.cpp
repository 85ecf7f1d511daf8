#include "oneplanar/generate.hpp"

#include <algorithm>
#include <set>

namespace oneplanar {

Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back(mk_edge(u, a + v));
    return Graph(a + b, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(mk_edge(v, (v + 1) % n));
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph make_theta(int num_paths, int path_length) {
    if (num_paths < 2 || path_length < 1)
        throw std::invalid_argument("theta needs >= 2 paths of length >= 1");
    if (path_length == 1 && num_paths > 1)
        throw std::invalid_argument("theta paths of length 1 would be parallel");
    std::vector<Edge> edges;
    int next = 2;  // 0 and 1 are the hubs
    for (int p = 0; p < num_paths; ++p) {
        int prev = 0;
        for (int i = 0; i + 1 < path_length; ++i) {
            edges.push_back(mk_edge(prev, next));
            prev = next++;
        }
        edges.push_back(mk_edge(prev, 1));
    }
    return Graph(next, std::move(edges));
}

Graph make_cubic_halin(int k) {
    if (k < 3) throw std::invalid_argument("cubic Halin needs k >= 3");
    // Caterpillar characteristic tree: internal path 0..k-3, leaves appended.
    int internal = k - 2;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < internal; ++i) edges.push_back({i, i + 1});
    std::vector<int> leaves;
    int next = internal;
    auto add_leaf = [&](int at) {
        edges.push_back(mk_edge(at, next));
        leaves.push_back(next++);
    };
    add_leaf(0);
    if (internal == 1) {
        add_leaf(0);
        add_leaf(0);
    } else {
        add_leaf(0);
        for (int i = 1; i + 1 < internal; ++i) add_leaf(i);
        add_leaf(internal - 1);
        add_leaf(internal - 1);
    }
    // Leaf cycle in caterpillar walk order. The two leaves of endpoint
    // internal vertices sandwich the spine so the result is planar (Halin).
    std::vector<int> order;
    order.push_back(leaves[0]);
    for (size_t i = 1; i + 1 < leaves.size(); ++i) order.push_back(leaves[i]);
    order.push_back(leaves.back());
    for (size_t i = 0; i < order.size(); ++i)
        edges.push_back(mk_edge(order[i], order[(i + 1) % order.size()]));
    return Graph(next, std::move(edges));
}

Graph make_random_with_cover(int n, int k, uint32_t seed) {
    if (k < 1 || n < k) throw std::invalid_argument("need 1 <= k <= n");
    std::mt19937 rng(seed);
    std::set<Edge> edges;
    // Cover vertices 0..k-1; every edge touches one of them.
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (rand_below(rng, 2)) edges.insert({u, v});
    for (int v = k; v < n; ++v) {
        // Mostly degree-2 attachments (the groups the kernel truncates),
        // with occasional higher-degree vertices that must survive it.
        int r = rand_below(rng, 20);
        int deg = r < 6 ? 1 : r < 16 ? 2 : r < 19 ? 3 : 4;
        deg = std::min(deg, k);
        while (static_cast<int>(deg) > 0) {
            Edge e = mk_edge(rand_below(rng, k), v);
            if (edges.insert(e).second) --deg;
        }
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph make_random_tree(int n, uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(mk_edge(rand_below(rng, v), v));
    return Graph(n, std::move(edges));
}

Graph make_random_with_cyclomatic(int n, int k, uint32_t seed) {
    std::mt19937 rng(seed);
    int base = std::max(3, std::min(n, k + 3));
    std::set<Edge> edges;
    for (int v = 1; v < base; ++v) edges.insert(mk_edge(rand_below(rng, v), v));
    int extra = k;
    int guard = 0;
    while (extra > 0 && ++guard < 10000) {
        int u = rand_below(rng, base), v = rand_below(rng, base);
        if (u == v) continue;
        if (edges.insert(mk_edge(u, v)).second) --extra;
    }
    // Subdivide random edges until n vertices.
    std::vector<Edge> elist(edges.begin(), edges.end());
    int next = base;
    while (next < n) {
        size_t i = static_cast<size_t>(rand_below(rng, static_cast<int>(elist.size())));
        Edge e = elist[i];
        elist[i] = mk_edge(e.first, next);
        elist.push_back(mk_edge(next, e.second));
        ++next;
    }
    return Graph(next, std::move(elist));
}

namespace {

// Random cograph by recursive union/join splits.
std::vector<Edge> random_cograph_edges(std::vector<int> verts, bool join_level,
                                       std::mt19937& rng) {
    std::vector<Edge> edges;
    if (verts.size() <= 1) return edges;
    // Split into 2..4 nonempty parts.
    int parts = 2 + rand_below(rng, std::min<int>(3, static_cast<int>(verts.size()) - 1));
    std::vector<std::vector<int>> sides(parts);
    for (int i = 0; i < parts; ++i) sides[i].push_back(verts[i]);
    for (size_t i = parts; i < verts.size(); ++i)
        sides[rand_below(rng, parts)].push_back(verts[i]);
    if (join_level)
        for (int i = 0; i < parts; ++i)
            for (int j = i + 1; j < parts; ++j)
                for (int u : sides[i])
                    for (int v : sides[j]) edges.push_back(mk_edge(u, v));
    for (auto& side : sides) {
        auto sub = random_cograph_edges(std::move(side), !join_level, rng);
        edges.insert(edges.end(), sub.begin(), sub.end());
    }
    return edges;
}

}  // namespace

Graph make_cograph_from_random_cotree(int n, uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    bool join = rand_below(rng, 2) != 0;
    auto edges = random_cograph_edges(std::move(verts), join, rng);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

Graph make_random_gnm(int n, int m, uint32_t seed) {
    long max_m = static_cast<long>(n) * (n - 1) / 2;
    if (m > max_m) throw std::invalid_argument("too many edges requested");
    std::mt19937 rng(seed);
    std::set<Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = rand_below(rng, n), v = rand_below(rng, n);
        if (u != v) edges.insert(mk_edge(u, v));
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace oneplanar
