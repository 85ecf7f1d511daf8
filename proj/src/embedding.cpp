#include "oneplanar/embedding.hpp"

#include <algorithm>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace oneplanar {

Multigraph Multigraph::from_graph(const Graph& g) {
    Multigraph mg;
    mg.n = g.vertex_count();
    mg.edges = g.edges();
    return mg;
}

int dart_tail(const Multigraph& mg, int d) {
    const Edge& e = mg.edges[d / 2];
    return (d & 1) ? e.second : e.first;
}

int dart_head(const Multigraph& mg, int d) {
    const Edge& e = mg.edges[d / 2];
    return (d & 1) ? e.first : e.second;
}

std::vector<std::vector<int>> RotationSystem::trace_faces(const Multigraph& mg) const {
    int darts = 2 * static_cast<int>(mg.edges.size());
    // succ[d] = next outgoing dart after d in the rotation at tail(d).
    std::vector<int> succ(darts, -1);
    for (const auto& ring : rot_) {
        for (size_t i = 0; i < ring.size(); ++i)
            succ[ring[i]] = ring[(i + 1) % ring.size()];
    }
    std::vector<bool> seen(darts, false);
    std::vector<std::vector<int>> faces;
    for (int d0 = 0; d0 < darts; ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = true;
            face.push_back(d);
            d = succ[dart_twin(d)];
            if (d < 0) throw std::logic_error("rotation system missing a dart");
        } while (d != d0);
        faces.push_back(std::move(face));
    }
    return faces;
}

bool RotationSystem::euler_ok(const Multigraph& mg) const {
    if (static_cast<int>(rot_.size()) != mg.n) return false;
    std::vector<int> count(2 * mg.edges.size(), 0);
    for (int v = 0; v < mg.n; ++v)
        for (int d : rot_[v]) {
            if (d < 0 || d >= 2 * static_cast<int>(mg.edges.size())) return false;
            if (dart_tail(mg, d) != v) return false;
            ++count[d];
        }
    for (int c : count)
        if (c != 1) return false;

    // Component decomposition of the multigraph.
    std::vector<int> comp(mg.n, -1);
    int ncomp = 0;
    for (int s = 0; s < mg.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : rot_[v]) {
                int w = dart_head(mg, d);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<long> verts(ncomp, 0), edges(ncomp, 0), faces(ncomp, 0);
    for (int v = 0; v < mg.n; ++v) ++verts[comp[v]];
    for (const auto& e : mg.edges) ++edges[comp[e.first]];
    auto traced = trace_faces(mg);
    for (const auto& f : traced) ++faces[comp[dart_tail(mg, f[0])]];
    for (int c = 0; c < ncomp; ++c) {
        if (edges[c] == 0) continue;  // isolated vertex: no faces traced
        if (verts[c] - edges[c] + faces[c] != 2) return false;
    }
    return true;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct SimpleReduction {
    BoostGraph bg;
    std::vector<int> rep;                       // simple idx -> mg edge id
    std::vector<std::vector<int>> copies;       // simple idx -> extra parallel ids
};

SimpleReduction simple_reduce(const Multigraph& mg) {
    SimpleReduction sr;
    sr.bg = BoostGraph(mg.n);
    std::map<Edge, int> index;
    for (int id = 0; id < static_cast<int>(mg.edges.size()); ++id) {
        const Edge& e = mg.edges[id];
        auto it = index.find(e);
        if (it == index.end()) {
            index.emplace(e, static_cast<int>(sr.rep.size()));
            boost::add_edge(e.first, e.second,
                            static_cast<int>(sr.rep.size()), sr.bg);
            sr.rep.push_back(id);
            sr.copies.emplace_back();
        } else {
            sr.copies[it->second].push_back(id);
        }
    }
    return sr;
}

int dart_of(const Multigraph& mg, int edge_id, int tail) {
    return mg.edges[edge_id].first == tail ? 2 * edge_id : 2 * edge_id + 1;
}

}  // namespace

namespace {

// Scratch buffers for the planarity routines; per-thread so the solver's hot
// loop performs no allocation once the buffers have grown to working size.
struct PlanarScratch {
    std::vector<std::vector<std::pair<int, int>>> adj;   // (nbr, edge id)
    std::vector<char> emb_v;
    std::vector<char> emb_e;
    std::vector<int> parent, parent_edge;
    std::vector<int> comp;
    std::vector<char> on_face;
    std::vector<int> pre, pre_edge;
    std::vector<std::vector<int>> faces;                 // active prefix: nf
    std::vector<std::vector<int>> contacts;              // active prefix
    std::vector<char> touch_mark;
    // Biconnectivity split.
    std::vector<std::vector<std::pair<int, int>>> sadj;
    std::vector<int> num, low;
    std::vector<int> estack;

    void ensure(int n) {
        if (static_cast<int>(adj.size()) < n) {
            adj.resize(n);
            sadj.resize(n);
            emb_v.resize(n);
            parent.resize(n);
            parent_edge.resize(n);
            comp.resize(n);
            on_face.resize(n);
            pre.resize(n);
            pre_edge.resize(n);
            touch_mark.resize(n);
            num.resize(n);
            low.resize(n);
        }
    }
};

PlanarScratch& scratch() {
    thread_local PlanarScratch s;
    return s;
}

// Incremental face-embedding planarity test for one biconnected simple
// graph: start from a cycle, then repeatedly place a fragment path into a
// face containing all of the fragment's contact vertices, preferring the
// fragment with the fewest admissible faces (forced placements first).  No
// admissible face for some fragment proves nonplanarity.
bool planar_biconnected(int n, const std::vector<Edge>& edges) {
    const int m = static_cast<int>(edges.size());
    if (m <= 8) return true;  // too few edges for a K5/K33 subdivision

    PlanarScratch& s = scratch();
    s.ensure(n);
    auto& adj = s.adj;
    std::vector<int> touched;  // vertices whose adj entry needs clearing
    touched.reserve(2 * m);
    for (int i = 0; i < m; ++i) {
        if (adj[edges[i].first].empty()) touched.push_back(edges[i].first);
        if (adj[edges[i].second].empty()) touched.push_back(edges[i].second);
        adj[edges[i].first].push_back({edges[i].second, i});
        adj[edges[i].second].push_back({edges[i].first, i});
    }
    struct AdjReset {
        PlanarScratch& s;
        std::vector<int>& touched;
        ~AdjReset() {
            for (int v : touched) s.adj[v].clear();
        }
    } adj_reset{s, touched};

    for (int v : touched) s.emb_v[v] = 0;
    if (static_cast<int>(s.emb_e.size()) < m) s.emb_e.resize(m);
    std::fill(s.emb_e.begin(), s.emb_e.begin() + m, 0);
    auto& emb_v = s.emb_v;
    auto& emb_e = s.emb_e;

    // Initial cycle: true depth-first traversal, so every non-tree edge runs
    // to an ancestor and the first one found closes a cycle.
    auto& parent = s.parent;
    auto& parent_edge = s.parent_edge;
    for (int v : touched) parent[v] = -2, parent_edge[v] = -1;
    std::vector<int> cyc;
    {
        struct Frame {
            int v;
            size_t next;
        };
        int root = edges[0].first;
        parent[root] = -1;
        std::vector<Frame> call{{root, 0}};
        while (!call.empty() && cyc.empty()) {
            Frame& fr = call.back();
            if (fr.next >= adj[fr.v].size()) {
                call.pop_back();
                continue;
            }
            auto [w, eid] = adj[fr.v][fr.next++];
            if (eid == parent_edge[fr.v]) continue;
            if (parent[w] == -2) {
                parent[w] = fr.v;
                parent_edge[w] = eid;
                call.push_back({w, 0});
            } else {
                for (int x = fr.v; x != -1; x = parent[x]) {
                    cyc.push_back(x);
                    if (x == w) break;
                }
                emb_e[eid] = 1;
            }
        }
        if (cyc.empty()) return true;  // acyclic
        for (size_t i = 0; i < cyc.size(); ++i) {
            emb_v[cyc[i]] = 1;
            if (i + 1 < cyc.size()) emb_e[parent_edge[cyc[i]]] = 1;
        }
    }
    int remaining = m;
    for (int i = 0; i < m; ++i) remaining -= emb_e[i];

    auto& faces = s.faces;
    size_t nf = 0;
    auto new_face = [&]() -> std::vector<int>& {
        if (faces.size() <= nf) faces.emplace_back();
        faces[nf].clear();
        return faces[nf++];
    };
    new_face() = cyc;
    new_face() = cyc;

    auto& comp = s.comp;
    auto& on_face = s.on_face;
    for (int v : touched) comp[v] = -1, on_face[v] = 0, s.touch_mark[v] = 0;

    while (remaining > 0) {
        // Fragments: components of non-embedded vertices with their contact
        // edges, plus single non-embedded edges between embedded vertices.
        for (int v : touched) comp[v] = -1;
        auto& contacts = s.contacts;
        size_t ncon = 0;
        auto new_contacts = [&]() -> std::vector<int>& {
            if (contacts.size() <= ncon) contacts.emplace_back();
            contacts[ncon].clear();
            return contacts[ncon++];
        };
        std::vector<int> frag_edge, frag_root;
        for (int v : touched) {
            if (emb_v[v] || comp[v] != -1 || adj[v].empty()) continue;
            int id = static_cast<int>(ncon);
            std::vector<int>& touch = new_contacts();
            std::vector<int> stack{v};
            comp[v] = id;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, eid] : adj[u]) {
                    (void)eid;
                    if (emb_v[w]) {
                        if (!s.touch_mark[w]) {
                            s.touch_mark[w] = 1;
                            touch.push_back(w);
                        }
                    } else if (comp[w] == -1) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
                }
            }
            for (int w : touch) s.touch_mark[w] = 0;
            std::sort(touch.begin(), touch.end());
            frag_edge.push_back(-1);
            frag_root.push_back(v);
        }
        for (int i = 0; i < m; ++i)
            if (!emb_e[i] && emb_v[edges[i].first] && emb_v[edges[i].second]) {
                std::vector<int>& c = new_contacts();
                c = {std::min(edges[i].first, edges[i].second),
                     std::max(edges[i].first, edges[i].second)};
                frag_edge.push_back(i);
                frag_root.push_back(-1);
            }

        // Admissible faces per fragment; a count of zero settles it.
        int pick = -1, pick_count = 0, pick_face = -1;
        for (size_t f = 0; f < ncon; ++f) {
            int count = 0, where = -1;
            for (size_t fi = 0; fi < nf; ++fi) {
                for (int v : faces[fi]) on_face[v] = 1;
                bool all = true;
                for (int c : contacts[f])
                    if (!on_face[c]) {
                        all = false;
                        break;
                    }
                for (int v : faces[fi]) on_face[v] = 0;
                if (all) {
                    ++count;
                    where = static_cast<int>(fi);
                }
            }
            if (count == 0) return false;
            if (pick < 0 || count < pick_count) {
                pick = static_cast<int>(f);
                pick_count = count;
                pick_face = where;
            }
        }

        // A path through the fragment between two contacts.
        std::vector<int> path;
        if (frag_edge[pick] >= 0) {
            path = {edges[frag_edge[pick]].first, edges[frag_edge[pick]].second};
            emb_e[frag_edge[pick]] = 1;
            --remaining;
        } else {
            int a = contacts[pick][0];
            auto& pre = s.pre;
            auto& pre_edge = s.pre_edge;
            for (int v : touched) pre[v] = -1, pre_edge[v] = -1;
            std::vector<int> queue;
            for (auto [w, eid] : adj[a])
                if (!emb_v[w] && comp[w] == comp[frag_root[pick]] && pre[w] == -1) {
                    pre[w] = a;
                    pre_edge[w] = eid;
                    queue.push_back(w);
                }
            int hit = -1;
            for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int u = queue[qi];
                for (auto [w, eid] : adj[u]) {
                    if (emb_v[w]) {
                        if (w != a) {
                            pre[w] = u;
                            pre_edge[w] = eid;
                            hit = w;
                            break;
                        }
                    } else if (pre[w] == -1) {
                        pre[w] = u;
                        pre_edge[w] = eid;
                        queue.push_back(w);
                    }
                }
            }
            for (int x = hit; x != -1; x = pre[x]) {
                path.push_back(x);
                if (pre_edge[x] >= 0) {
                    emb_e[pre_edge[x]] = 1;
                    --remaining;
                }
                if (x == a) break;
            }
            for (size_t i = 1; i + 1 < path.size(); ++i) emb_v[path[i]] = 1;
        }

        // Split the chosen face along the path.
        const std::vector<int> face = faces[pick_face];
        int pa = -1, pb = -1;
        for (size_t i = 0; i < face.size(); ++i) {
            if (face[i] == path.front()) pa = static_cast<int>(i);
            if (face[i] == path.back()) pb = static_cast<int>(i);
        }
        std::vector<int>& f2 = new_face();
        std::vector<int> f1;
        for (int i = pa;; i = (i + 1) % static_cast<int>(face.size())) {
            f1.push_back(face[i]);
            if (i == pb) break;
        }
        for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
        for (int i = pb;; i = (i + 1) % static_cast<int>(face.size())) {
            f2.push_back(face[i]);
            if (i == pa) break;
        }
        for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
        faces[pick_face] = std::move(f1);
    }
    return true;
}

// Planarity of a simple graph via biconnected decomposition; each component
// goes through the incremental embedder.
bool planar_simple(int n, const std::vector<Edge>& edges) {
    PlanarScratch& s = scratch();
    s.ensure(n);
    auto& adj = s.sadj;
    std::vector<int> touched;
    touched.reserve(2 * edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (adj[edges[i].first].empty()) touched.push_back(edges[i].first);
        if (adj[edges[i].second].empty()) touched.push_back(edges[i].second);
        adj[edges[i].first].push_back({edges[i].second, i});
        adj[edges[i].second].push_back({edges[i].first, i});
    }
    struct AdjReset {
        std::vector<std::vector<std::pair<int, int>>>& adj;
        std::vector<int>& touched;
        ~AdjReset() {
            for (int v : touched) adj[v].clear();
        }
    } adj_reset{adj, touched};

    auto& num = s.num;
    auto& low = s.low;
    for (int v : touched) num[v] = -1, low[v] = 0;
    auto& estack = s.estack;
    estack.clear();
    int timer = 0;
    // Iterative lowlink with an edge stack popped at articulation points.
    struct Frame {
        int v, parent_edge;
        size_t next;
    };
    for (int sv : touched) {
        if (num[sv] != -1 || adj[sv].empty()) continue;
        std::vector<Frame> call{{sv, -1, 0}};
        num[sv] = low[sv] = timer++;
        while (!call.empty()) {
            Frame& fr = call.back();
            if (fr.next < adj[fr.v].size()) {
                auto [w, eid] = adj[fr.v][fr.next++];
                if (eid == fr.parent_edge) continue;
                if (num[w] == -1) {
                    estack.push_back(eid);
                    num[w] = low[w] = timer++;
                    call.push_back({w, eid, 0});
                } else if (num[w] < num[fr.v]) {
                    estack.push_back(eid);
                    low[fr.v] = std::min(low[fr.v], num[w]);
                }
            } else {
                int v = fr.v, pe = fr.parent_edge;
                call.pop_back();
                if (call.empty()) break;
                int u = call.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<Edge> comp_edges;
                    while (true) {
                        int eid = estack.back();
                        estack.pop_back();
                        comp_edges.push_back(edges[eid]);
                        if (eid == pe) break;
                    }
                    if (!planar_biconnected(n, comp_edges)) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool is_planar(const Multigraph& mg) {
    // Parallel edges never affect planarity; test the simple reduction only.
    // Count-based reject first: the underlying simple graph of a planar
    // multigraph has at most 3n-6 edges.
    std::vector<Edge> es;
    es.reserve(mg.edges.size());
    for (const Edge& e : mg.edges) es.push_back(mk_edge(e.first, e.second));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (mg.n >= 3 && static_cast<int>(es.size()) > 3 * mg.n - 6) return false;
    return planar_simple(mg.n, es);
}

std::optional<RotationSystem> planarity_test(const Multigraph& mg) {
    SimpleReduction sr = simple_reduce(mg);
    std::vector<std::vector<BoostEdge>> embedding(mg.n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = sr.bg,
        boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
            embedding.begin(), boost::get(boost::vertex_index, sr.bg)));
    if (!planar) return std::nullopt;

    auto eidx = boost::get(boost::edge_index, sr.bg);
    std::vector<std::vector<int>> rot(mg.n);
    for (int v = 0; v < mg.n; ++v)
        for (const BoostEdge& be : embedding[v])
            rot[v].push_back(dart_of(mg, sr.rep[eidx[be]], v));

    // Reinsert parallel copies next to their representative: after it at the
    // low endpoint, before it at the high endpoint, so each copy closes a
    // bigon face with its twin.
    for (size_t si = 0; si < sr.rep.size(); ++si) {
        int prev = sr.rep[si];
        for (int copy : sr.copies[si]) {
            const Edge& e = mg.edges[copy];
            for (int side = 0; side < 2; ++side) {
                int v = side == 0 ? e.first : e.second;
                auto& ring = rot[v];
                auto it = std::find(ring.begin(), ring.end(), dart_of(mg, prev, v));
                if (side == 0)
                    ring.insert(std::next(it), dart_of(mg, copy, v));
                else
                    ring.insert(it, dart_of(mg, copy, v));
            }
            prev = copy;
        }
    }
    RotationSystem rs(std::move(rot));
    if (!rs.euler_ok(mg)) throw std::logic_error("embedding failed Euler check");
    return rs;
}

std::vector<int> planarity_obstruction(const Multigraph& mg) {
    SimpleReduction sr = simple_reduce(mg);
    std::vector<BoostEdge> kur;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = sr.bg,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    if (planar) return {};
    auto eidx = boost::get(boost::edge_index, sr.bg);
    std::vector<int> out;
    for (const BoostEdge& be : kur) out.push_back(sr.rep[eidx[be]]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --- Witnesses --------------------------------------------------------------

void CrossingWitness::normalize() {
    for (auto& [e, f] : pairs) {
        e = mk_edge(e.first, e.second);
        f = mk_edge(f.first, f.second);
        if (f < e) std::swap(e, f);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::optional<std::string> witness_structural_error(const Graph& g,
                                                    const CrossingWitness& w) {
    std::set<Edge> used;
    for (const auto& [e, f] : w.pairs) {
        std::ostringstream os;
        if (!g.has_edge(e.first, e.second) || !g.has_edge(f.first, f.second)) {
            os << "witness references unknown edge";
            return os.str();
        }
        if (e == f) return "edge paired with itself";
        if (e.first == f.first || e.first == f.second || e.second == f.first ||
            e.second == f.second)
            return "adjacent edges paired";
        if (!used.insert(e).second || !used.insert(f).second)
            return "edge in two crossing pairs";
    }
    return std::nullopt;
}

ConstraintSet ConstraintSet::compiled() const {
    ConstraintSet out = *this;
    for (const auto& path : mandatory_uncrossed_paths)
        for (const auto& e : path) out.uncrossable.insert(mk_edge(e.first, e.second));
    out.mandatory_uncrossed_paths.clear();
    return out;
}

bool ConstraintSet::edge_crossable(const Edge& e) const {
    if (uncrossable.count(e)) return false;
    if (colors) {
        auto it = colors->find(e);
        if (it != colors->end() && it->second == kUncrossableColor) return false;
    }
    return true;
}

bool ConstraintSet::pair_allowed(const Edge& e, const Edge& f) const {
    if (!edge_crossable(e) || !edge_crossable(f)) return false;
    auto p = e < f ? std::make_pair(e, f) : std::make_pair(f, e);
    if (forbidden_pairs.count(p)) return false;
    if (colors) {
        auto ie = colors->find(e), iff = colors->find(f);
        int ce = ie == colors->end() ? -1 : ie->second;
        int cf = iff == colors->end() ? -1 : iff->second;
        if (ce != cf) return false;
    }
    return true;
}

void ConstraintSet::validate_for(const Graph& g) const {
    auto check = [&](const Edge& e, const char* what) {
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument(std::string(what) + " references unknown edge " +
                                        std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
    };
    for (const auto& e : uncrossable) check(e, "uncrossable");
    for (const auto& [e, f] : forbidden_pairs) {
        check(e, "forbidden pair");
        check(f, "forbidden pair");
    }
    if (colors) {
        for (const auto& [e, c] : *colors) check(e, "color");
        for (const auto& e : g.edges())
            if (!colors->count(e))
                throw std::invalid_argument("color map not total");
    }
    for (const auto& path : mandatory_uncrossed_paths)
        for (const auto& e : path) check(e, "mandatory path");
}

Planarization planarize_with_kites(const Graph& g, const CrossingWitness& w,
                                   bool validate) {
    if (validate)
        if (auto err = witness_structural_error(g, w))
            throw std::invalid_argument("invalid witness: " + *err);

    Planarization p;
    thread_local std::vector<char> crossed_v;
    crossed_v.assign(g.vertex_count(), 0);
    for (const auto& [e, f] : w.pairs)
        crossed_v[e.first] = crossed_v[e.second] = crossed_v[f.first] =
            crossed_v[f.second] = 1;
    std::set<Edge> crossed;
    for (const auto& [e, f] : w.pairs) {
        crossed.insert(e);
        crossed.insert(f);
    }
    p.graph.n = g.vertex_count() + static_cast<int>(w.pairs.size());
    p.graph.edges.reserve(g.edge_count() + 6 * w.pairs.size());
    p.origin.reserve(g.edge_count() + 6 * w.pairs.size());
    for (const auto& e : g.edges()) {
        if (crossed_v[e.first] && crossed_v[e.second] && crossed.count(e)) continue;
        p.graph.edges.push_back(e);
        p.origin.push_back({EdgeOrigin::original, e, -1});
    }
    for (int i = 0; i < static_cast<int>(w.pairs.size()); ++i) {
        const auto& [e, f] = w.pairs[i];
        int c = g.vertex_count() + i;
        for (int end : {e.first, e.second}) {
            p.graph.edges.push_back(mk_edge(end, c));
            p.origin.push_back({EdgeOrigin::spoke, e, i});
        }
        for (int end : {f.first, f.second}) {
            p.graph.edges.push_back(mk_edge(end, c));
            p.origin.push_back({EdgeOrigin::spoke, f, i});
        }
        // Kite cycle alternating between the two crossed edges' endpoints.
        const Edge corners[4] = {mk_edge(e.first, f.first), mk_edge(f.first, e.second),
                                 mk_edge(e.second, f.second), mk_edge(f.second, e.first)};
        for (const Edge& k : corners) {
            p.graph.edges.push_back(k);
            p.origin.push_back({EdgeOrigin::kite, k, i});
        }
    }
    return p;
}

bool verify_witness(const Graph& g, const CrossingWitness& w, const ConstraintSet& cs) {
    if (witness_structural_error(g, w)) return false;
    try {
        cs.validate_for(g);
    } catch (const std::invalid_argument&) {
        return false;
    }
    ConstraintSet c = cs.compiled();
    for (const auto& [e, f] : w.pairs)
        if (!c.pair_allowed(e, f)) return false;
    return is_planar(planarize_with_kites(g, w).graph);
}

// --- Embedding surgery ------------------------------------------------------

EmbeddedMultigraph insert_two_path(const EmbeddedMultigraph& em, int a, int b,
                                   int face_index) {
    if (a == b) throw std::invalid_argument("insert_two_path endpoints coincide");
    auto faces = em.rotation.trace_faces(em.graph);
    if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
        throw std::invalid_argument("no such face");
    const auto& face = faces[face_index];
    int dart_a = -1, dart_b = -1;
    for (int d : face) {
        if (dart_a < 0 && dart_tail(em.graph, d) == a) dart_a = d;
        if (dart_b < 0 && dart_tail(em.graph, d) == b) dart_b = d;
    }
    if (dart_a < 0 || dart_b < 0)
        throw std::invalid_argument("vertex not on the named face");

    EmbeddedMultigraph out = em;
    int v = out.graph.n++;
    int ea = static_cast<int>(out.graph.edges.size());
    out.graph.edges.push_back(mk_edge(a, v));  // v is the largest id: (a, v)
    int eb = static_cast<int>(out.graph.edges.size());
    out.graph.edges.push_back(mk_edge(b, v));

    auto& rot = out.rotation.rotations();
    auto insert_before = [](std::vector<int>& ring, int before, int dart) {
        auto it = std::find(ring.begin(), ring.end(), before);
        ring.insert(it, dart);
    };
    // New darts wedge into the face corner just before the face darts at a
    // and b; rotation at v is (v->a, v->b), splitting the face in two.
    insert_before(rot[a], dart_a, 2 * ea);
    insert_before(rot[b], dart_b, 2 * eb);
    rot.push_back({2 * ea + 1, 2 * eb + 1});
    if (!out.rotation.euler_ok(out.graph))
        throw std::logic_error("insert_two_path broke the embedding");
    return out;
}

EmbeddedMultigraph insert_leaf(const EmbeddedMultigraph& em, int a) {
    EmbeddedMultigraph out = em;
    int v = out.graph.n++;
    int ea = static_cast<int>(out.graph.edges.size());
    out.graph.edges.push_back(mk_edge(a, v));
    auto& rot = out.rotation.rotations();
    rot[a].insert(rot[a].begin(), 2 * ea);
    rot.push_back({2 * ea + 1});
    if (!out.rotation.euler_ok(out.graph))
        throw std::logic_error("insert_leaf broke the embedding");
    return out;
}

// --- Gluing -----------------------------------------------------------------

MergeResult merge_at_shared_edge(const std::vector<MergePiece>& pieces,
                                 bool keep_shared_edge) {
    if (pieces.empty()) throw std::invalid_argument("no pieces to merge");
    for (const auto& piece : pieces) {
        if (!piece.graph.has_edge(piece.shared.first, piece.shared.second))
            throw std::invalid_argument("piece lacks the shared edge");
        Edge s = mk_edge(piece.shared.first, piece.shared.second);
        for (const auto& [e, f] : piece.witness.pairs)
            if (e == s || f == s)
                throw std::invalid_argument("piece witness crosses the shared edge");
    }

    MergeResult out;
    int next = 2;
    std::set<Edge> edges;
    CrossingWitness wit;
    for (const auto& piece : pieces) {
        // piece.shared is ordered: .first glues to 0, .second to 1 in every piece.
        std::vector<int> map(piece.graph.vertex_count(), -1);
        map[piece.shared.first] = 0;
        map[piece.shared.second] = 1;
        for (int v = 0; v < piece.graph.vertex_count(); ++v)
            if (map[v] < 0) map[v] = next++;
        for (const auto& [u, v] : piece.graph.edges()) edges.insert(mk_edge(map[u], map[v]));
        for (const auto& [e, f] : piece.witness.pairs)
            wit.pairs.push_back({mk_edge(map[e.first], map[e.second]),
                                 mk_edge(map[f.first], map[f.second])});
        out.piece_to_merged.push_back(std::move(map));
    }
    if (!keep_shared_edge) edges.erase(Edge{0, 1});
    out.merged = Graph(next, std::vector<Edge>(edges.begin(), edges.end()));
    wit.normalize();
    out.witness = std::move(wit);
    if (!verify_witness(out.merged, out.witness, {}))
        throw std::logic_error("merged witness failed verification");
    return out;
}

}  // namespace oneplanar
