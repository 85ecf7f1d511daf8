#include "oneplanar/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace oneplanar {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        e = mk_edge(e.first, e.second);
        if (e.first == e.second)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
        if (e.first < 0 || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge");
    edges_ = std::move(edges);
    adj_.resize(n);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    Edge e = mk_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& vertices) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("duplicate vertex in induced_subgraph");
    std::vector<int> old_to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) old_to_new[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
            edges.push_back(mk_edge(old_to_new[u], old_to_new[v]));
    return {Graph(static_cast<int>(verts.size()), std::move(edges)), verts};
}

std::vector<int> record_old_to_new(const ReductionRecord& rec) {
    std::vector<int> map(rec.old_n, 0);
    for (int v : rec.removed_vertices) map[v] = -1;
    int next = 0;
    for (int v = 0; v < rec.old_n; ++v)
        if (map[v] == 0)
            map[v] = next++;
        else
            map[v] = -1;
    return map;
}

Graph replay_record(const ReductionRecord& rec, const Graph& reduced) {
    std::vector<int> old_to_new = record_old_to_new(rec);
    std::vector<int> new_to_old(reduced.vertex_count(), -1);
    for (int v = 0; v < rec.old_n; ++v)
        if (old_to_new[v] >= 0) new_to_old[old_to_new[v]] = v;
    std::set<Edge> edges;
    for (const auto& [u, v] : reduced.edges())
        edges.insert(mk_edge(new_to_old[u], new_to_old[v]));
    for (const auto& e : rec.added_edges) {
        auto it = edges.find(mk_edge(e.first, e.second));
        if (it == edges.end())
            throw std::invalid_argument("replay: added edge missing from reduced graph");
        edges.erase(it);
    }
    for (const auto& e : rec.removed_edges) edges.insert(mk_edge(e.first, e.second));
    return Graph(rec.old_n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph replay_plan(const LiftPlan& plan, const Graph& kernel) {
    Graph g = kernel;
    for (auto it = plan.records.rbegin(); it != plan.records.rend(); ++it)
        g = replay_record(*it, g);
    return g;
}

namespace {

// Removes `doomed` (sorted) from g, producing the reduced graph.
Graph remove_vertices(const Graph& g, const std::vector<int>& doomed,
                      std::vector<int>& old_to_new) {
    old_to_new.assign(g.vertex_count(), 0);
    for (int v : doomed) old_to_new[v] = -1;
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        old_to_new[v] = (old_to_new[v] == 0) ? next++ : -1;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
            edges.push_back(mk_edge(old_to_new[u], old_to_new[v]));
    return Graph(next, std::move(edges));
}

}  // namespace

Graph apply_reduction(const Graph& g, ReductionAction action,
                      const std::vector<int>& removed, const std::vector<Edge>& added,
                      LiftPlan& plan, const std::vector<std::vector<int>*>& tracked) {
    ReductionRecord rec;
    rec.action = std::move(action);
    rec.old_n = g.vertex_count();
    rec.removed_vertices = removed;
    rec.added_edges = added;
    std::vector<bool> gone(g.vertex_count(), false);
    for (int v : removed) gone[v] = true;
    for (const Edge& e : g.edges())
        if (gone[e.first] || gone[e.second]) rec.removed_edges.push_back(e);
    std::vector<int> to_new = record_old_to_new(rec);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!gone[e.first] && !gone[e.second])
            edges.push_back(mk_edge(to_new[e.first], to_new[e.second]));
    for (const Edge& e : added) {
        if (gone[e.first] || gone[e.second])
            throw std::invalid_argument("apply_reduction: added edge loses an endpoint");
        edges.push_back(mk_edge(to_new[e.first], to_new[e.second]));
    }
    for (auto* ids : tracked)
        for (int& v : *ids) v = to_new[v];
    plan.records.push_back(std::move(rec));
    return Graph(g.vertex_count() - static_cast<int>(removed.size()), std::move(edges));
}

std::pair<Graph, LiftPlan> two_core(const Graph& g) {
    // Queue-driven removal order on the original ids, then one record per
    // removed vertex in that order.
    std::vector<int> deg(g.vertex_count());
    std::vector<bool> gone(g.vertex_count(), false);
    std::deque<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    std::vector<int> order;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (gone[v]) continue;
        gone[v] = true;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (gone[w]) continue;
            if (--deg[w] == 1) queue.push_back(w);
        }
    }

    LiftPlan plan;
    Graph cur = g;
    std::vector<int> cur_id(g.vertex_count());
    std::iota(cur_id.begin(), cur_id.end(), 0);
    for (int orig : order) {
        int v = cur_id[orig];
        ReductionRecord rec;
        int nb = cur.degree(v) == 1 ? cur.neighbors(v)[0] : -1;
        rec.action = LeafRemoval{v, nb};
        rec.old_n = cur.vertex_count();
        rec.removed_vertices = {v};
        for (int w : cur.neighbors(v)) rec.removed_edges.push_back(mk_edge(v, w));
        std::vector<int> old_to_new;
        cur = remove_vertices(cur, {v}, old_to_new);
        for (int i = 0; i < g.vertex_count(); ++i)
            if (cur_id[i] >= 0) cur_id[i] = old_to_new[cur_id[i]];
        plan.records.push_back(std::move(rec));
    }
    return {cur, plan};
}

std::vector<Block> blocks(const Graph& g) {
    // Iterative Hopcroft-Tarjan with an edge stack.
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    std::vector<std::vector<Edge>> comps;
    int timer = 0;

    struct Frame {
        int v, parent;
        size_t idx;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.idx < nbrs.size()) {
                int w = nbrs[f.idx++];
                if (w == f.parent) {
                    f.parent = -2;  // skip the tree edge to the parent once
                    continue;
                }
                if (disc[w] == -1) {
                    estack.push_back(mk_edge(f.v, w));
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(mk_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = stack.size() >= 2 ? stack[stack.size() - 2].v : -1;
                stack.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        // parent is a cut vertex (or the root): pop one block.
                        std::vector<Edge> comp;
                        Edge top = mk_edge(parent, v);
                        while (!estack.empty()) {
                            Edge e = estack.back();
                            estack.pop_back();
                            comp.push_back(e);
                            if (e == top) break;
                        }
                        comps.push_back(std::move(comp));
                    }
                }
            }
        }
    }

    std::vector<Block> result;
    for (auto& comp : comps) {
        std::set<int> verts;
        for (const auto& [u, v] : comp) {
            verts.insert(u);
            verts.insert(v);
        }
        std::vector<int> to_host(verts.begin(), verts.end());
        std::vector<int> host_to_block(n, -1);
        for (size_t i = 0; i < to_host.size(); ++i) host_to_block[to_host[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (const auto& [u, v] : comp) edges.push_back(mk_edge(host_to_block[u], host_to_block[v]));
        result.push_back({Graph(static_cast<int>(to_host.size()), std::move(edges)),
                          std::move(to_host)});
    }
    // Deterministic order: by smallest host vertex, then size.
    std::sort(result.begin(), result.end(), [](const Block& a, const Block& b) {
        return a.to_host < b.to_host;
    });
    return result;
}

int connected_component_count(const Graph& g) {
    return static_cast<int>(connected_components(g).size());
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> verts{s};
        comp[s] = static_cast<int>(out.size());
        std::vector<int> bfs{s};
        while (!bfs.empty()) {
            int v = bfs.back();
            bfs.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    verts.push_back(w);
                    bfs.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.vertex_count() + connected_component_count(g);
}

PathDecomposition maximal_degree_two_paths(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1)
            throw std::invalid_argument("maximal_degree_two_paths: vertex of degree <= 1");

    PathDecomposition out;
    std::set<Edge> used;
    for (int h = 0; h < g.vertex_count(); ++h) {
        if (g.degree(h) <= 2) continue;
        for (int first : g.neighbors(h)) {
            if (used.count(mk_edge(h, first))) continue;
            DegreeTwoPath path;
            std::vector<int> interior;
            int prev = h, cur = first;
            used.insert(mk_edge(prev, cur));
            while (g.degree(cur) == 2) {
                interior.push_back(cur);
                int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                      : g.neighbors(cur)[0];
                used.insert(mk_edge(cur, next));
                prev = cur;
                cur = next;
            }
            path.endpoints = {h, cur};
            path.interior = std::move(interior);
            out.paths.push_back(std::move(path));
        }
    }
    // Remaining edges sit in components where every vertex has degree 2.
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s] || g.degree(s) != 2) continue;
        bool on_used_path = false;
        for (int w : g.neighbors(s))
            if (used.count(mk_edge(s, w))) on_used_path = true;
        if (on_used_path) {
            seen[s] = true;
            continue;
        }
        std::vector<int> cycle;
        int prev = -1, cur = s;
        do {
            seen[cur] = true;
            cycle.push_back(cur);
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                   : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        } while (cur != s);
        out.pure_cycles.push_back(std::move(cycle));
    }
    return out;
}

bool complete_bipartite_one_planar(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
    if (a > b) std::swap(a, b);
    if (a <= 2) return true;
    if (a == 3) return b <= 6;
    if (a == 4) return b <= 4;
    return false;
}

}  // namespace oneplanar
