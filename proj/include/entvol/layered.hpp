#pragma once

// Layered ideal triangulation of the once-punctured-torus bundle with
// monodromy given by an L/R word: one tetrahedron per letter, spanning the
// diagonal exchange between consecutive Farey triangulations of the fiber.
//
// Each tetrahedron is modeled on the square with corners 0, u, u+v, v
// (u, v = columns of the running frame matrix).  Local vertex labels:
//   P0 = 0, P1 = u, P2 = u+v, P3 = v
// Edge slots (opposite pairs):
//   E0: P0-P1 (slope u)      E1: P3-P2 (slope u)      -> side pair 1
//   E2: P0-P3 (slope v)      E3: P1-P2 (slope v)      -> side pair 2
//   E4: P1-P3 (bottom diag)  E5: P0-P2 (top diag)     -> diagonal pair
// Faces:
//   0 = bottom {P0,P1,P3}   1 = bottom {P1,P2,P3}
//   2 = top    {P0,P1,P2}   3 = top    {P0,P2,P3}
// The two triangles of a fiber triangulation with frame (u, v) are tagged
// up = {P, P+u, P+u+v} and down = {P, P+v, P+u+v}.

#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "entvol/torus_rep.hpp"
#include "entvol/word.hpp"

namespace entvol {

using Slope = std::pair<BigInt, BigInt>;

inline Slope normalize_slope(BigInt p, BigInt q) {
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    return {std::move(p), std::move(q)};
}

struct FareyStep {
    int index = 0;    // 1..N
    char letter = 'L';
    WordMatrix frame; // F_i after applying the letter
    Slope kept1, kept2;   // columns of F_i
    Slope removed;        // bottom diagonal d-
    Slope created;        // top diagonal d+ (sum of the columns of F_i)
};

inline std::vector<FareyStep> farey_path(const CyclicWord& w) {
    std::vector<FareyStep> steps;
    WordMatrix f = matrix_identity();
    for (int i = 0; i < w.length(); ++i) {
        const char letter = w.letters()[static_cast<std::size_t>(i)];
        FareyStep st;
        st.index = i + 1;
        st.letter = letter;
        // columns of the current frame: c1 = (a, c), c2 = (b, d)
        st.removed = letter == 'L' ? normalize_slope(f.b, f.d) : normalize_slope(f.a, f.c);
        f = f * (letter == 'L' ? matrix_L() : matrix_R());
        st.frame = f;
        st.kept1 = normalize_slope(f.a, f.c);
        st.kept2 = normalize_slope(f.b, f.d);
        st.created = normalize_slope(f.a + f.b, f.c + f.d);
        if (st.created == st.removed)
            throw internal_gluing_error("immediate backtrack in Farey path");
        steps.push_back(std::move(st));
    }
    return steps;
}

struct FaceGluing {
    int tet = -1;          // target tetrahedron
    int face = -1;         // target face
    std::array<int, 3> edge_map{};  // source face's local edge slots -> target slots
    std::array<int, 3> src_edges{}; // source face's local edge slots
};

struct EdgeClass {
    int degree = 0;
    std::vector<std::pair<int, int>> slots;  // (tet, edge slot 0..5)
};

struct LayeredTriangulation {
    int n = 0;  // tetrahedra (= letters = edge classes)
    std::string word;                      // canonical form used for labels
    std::vector<FareyStep> path;
    WordMatrix monodromy;
    // gluings[t][f]: where face f of tetrahedron t is glued
    std::vector<std::array<FaceGluing, 4>> gluings;
    // edge_class_of[t][e]: class id of edge slot e of tetrahedron t
    std::vector<std::array<int, 6>> edge_class_of;
    std::vector<EdgeClass> edges;

    // Angle slot of an edge slot: 0 = side pair 1, 1 = side pair 2, 2 = diagonal.
    static int pair_of_slot(int e) { return e / 2; }

    std::string dump() const;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Local combinatorics of the model tetrahedron.
inline const std::array<std::array<int, 3>, 4>& face_edges() {
    static const std::array<std::array<int, 3>, 4> fe = {{
        {0, 2, 4},  // bottom {P0,P1,P3}
        {1, 3, 4},  // bottom {P1,P2,P3}
        {0, 3, 5},  // top    {P0,P1,P2}
        {1, 2, 5},  // top    {P0,P2,P3}
    }};
    return fe;
}

inline const std::array<std::array<int, 2>, 6>& edge_ends() {
    static const std::array<std::array<int, 2>, 6> ee = {{
        {0, 1}, {3, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 2},
    }};
    return ee;
}

// Vertex of a face not on a given edge of that face.
inline int opposite_vertex(int face, int edge) {
    static const std::array<std::array<int, 3>, 4> fv = {{
        {0, 1, 3}, {1, 2, 3}, {0, 1, 2}, {0, 2, 3},
    }};
    const auto& ends = edge_ends()[static_cast<std::size_t>(edge)];
    for (int v : fv[static_cast<std::size_t>(face)])
        if (v != ends[0] && v != ends[1]) return v;
    throw internal_gluing_error("edge not on face");
}

// Boundary orientation of each face induced by the (P0,P1,P2,P3) orientation.
inline const std::array<std::array<int, 3>, 4>& face_orientation() {
    static const std::array<std::array<int, 3>, 4> fo = {{
        {0, 1, 3},  // +(013)
        {1, 2, 3},  // +(123)
        {0, 2, 1},  // -(012)
        {0, 3, 2},  // -(023)
    }};
    return fo;
}

inline bool same_cyclic(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int r = 0; r < 3; ++r)
        if (a[0] == b[static_cast<std::size_t>(r)] && a[1] == b[static_cast<std::size_t>((r + 1) % 3)] &&
            a[2] == b[static_cast<std::size_t>((r + 2) % 3)])
            return true;
    return false;
}

}  // namespace detail

inline LayeredTriangulation build_triangulation(const CyclicWord& input) {
    // Layer labels follow the canonical rotation so that equal conjugacy
    // classes produce identical complexes.
    const CyclicWord w = input.canonicalize();
    const int n = w.length();

    LayeredTriangulation tri;
    tri.n = n;
    tri.word = w.canonical();
    tri.path = farey_path(w);
    tri.monodromy = tri.path.back().frame;
    tri.gluings.assign(static_cast<std::size_t>(n), {});
    tri.edge_class_of.assign(static_cast<std::size_t>(n), {});

    // Slope of each edge slot, in the global coordinates of the unrolled path.
    auto slot_slope = [&](int t, int e) -> Slope {
        const FareyStep& st = tri.path[static_cast<std::size_t>(t)];
        switch (e) {
            case 0: case 1: return st.kept1;
            case 2: case 3: return st.kept2;
            case 4: return st.removed;
            default: return st.created;
        }
    };

    // Tag (0 = up, 1 = down) of each face relative to its fiber triangulation.
    auto face_tag = [&](int t, int f) -> int {
        if (f >= 2) return f - 2;  // top: face 2 = up, face 3 = down
        const char letter = tri.path[static_cast<std::size_t>(t)].letter;
        if (letter == 'L') return f;      // bottom: face 0 = up, face 1 = down
        return 1 - f;                     // R swaps the bottom tags
    };

    const WordMatrix& a = tri.monodromy;
    const WordMatrix a_inv = {a.d, -a.b, -a.c, a.a};  // det = 1
    auto wrap_slope = [&](const Slope& s) -> Slope {
        return normalize_slope(a_inv.a * s.first + a_inv.b * s.second,
                               a_inv.c * s.first + a_inv.d * s.second);
    };

    detail::UnionFind edge_uf(6 * n);
    detail::UnionFind vert_uf(4 * n);

    for (int t = 0; t < n; ++t) {
        const int t2 = (t + 1) % n;
        const bool wrap = (t2 == 0);
        for (int topf = 2; topf <= 3; ++topf) {
            const int tag = face_tag(t, topf);
            // bottom face of t2 with the same tag
            int botf = -1;
            for (int f = 0; f <= 1; ++f)
                if (face_tag(t2, f) == tag) botf = f;
            if (botf < 0) throw internal_gluing_error("tag matching failed");

            FaceGluing fwd;
            fwd.tet = t2;
            fwd.face = botf;
            FaceGluing bwd;
            bwd.tet = t;
            bwd.face = topf;

            const auto& src_edges = detail::face_edges()[static_cast<std::size_t>(topf)];
            const auto& dst_edges = detail::face_edges()[static_cast<std::size_t>(botf)];
            fwd.src_edges = src_edges;
            bwd.src_edges = dst_edges;

            for (int k = 0; k < 3; ++k) {
                const int se = src_edges[static_cast<std::size_t>(k)];
                Slope s = slot_slope(t, se);
                if (wrap) s = wrap_slope(s);
                int match = -1;
                for (int kk = 0; kk < 3; ++kk) {
                    const int de = dst_edges[static_cast<std::size_t>(kk)];
                    if (slot_slope(t2, de) == s) {
                        if (match >= 0) throw internal_gluing_error("ambiguous edge match");
                        match = de;
                    }
                }
                if (match < 0) throw internal_gluing_error("no slope match across layers");
                fwd.edge_map[static_cast<std::size_t>(k)] = match;
                edge_uf.unite(6 * t + se, 6 * t2 + match);
                // Matched edges determine the vertex bijection via opposite vertices.
                const int sv = detail::opposite_vertex(topf, se);
                const int dv = detail::opposite_vertex(botf, match);
                vert_uf.unite(4 * t + sv, 4 * t2 + dv);
            }
            // Reverse edge map for the partner record.
            for (int k = 0; k < 3; ++k) {
                const int de = dst_edges[static_cast<std::size_t>(k)];
                int se = -1;
                for (int kk = 0; kk < 3; ++kk)
                    if (fwd.edge_map[static_cast<std::size_t>(kk)] == de)
                        se = src_edges[static_cast<std::size_t>(kk)];
                if (se < 0) throw internal_gluing_error("edge map not bijective");
                bwd.edge_map[static_cast<std::size_t>(k)] = se;
            }

            auto& top_rec = tri.gluings[static_cast<std::size_t>(t)][static_cast<std::size_t>(topf)];
            auto& bot_rec = tri.gluings[static_cast<std::size_t>(t2)][static_cast<std::size_t>(botf)];
            if (top_rec.tet >= 0 || bot_rec.tet >= 0)
                throw internal_gluing_error("face glued twice");
            top_rec = fwd;
            bot_rec = bwd;

            // Orientability: the vertex bijection must reverse the induced
            // boundary orientation of the shared triangle.
            std::map<int, int> sigma;
            for (int k = 0; k < 3; ++k) {
                const int se = src_edges[static_cast<std::size_t>(k)];
                const int de = fwd.edge_map[static_cast<std::size_t>(k)];
                sigma[detail::opposite_vertex(topf, se)] = detail::opposite_vertex(botf, de);
            }
            std::array<int, 3> mapped{};
            const auto& src_or = detail::face_orientation()[static_cast<std::size_t>(topf)];
            for (int k = 0; k < 3; ++k) mapped[static_cast<std::size_t>(k)] = sigma.at(src_or[static_cast<std::size_t>(k)]);
            auto dst_or = detail::face_orientation()[static_cast<std::size_t>(botf)];
            std::swap(dst_or[1], dst_or[2]);  // reversed target orientation
            if (!detail::same_cyclic(mapped, dst_or))
                throw internal_gluing_error("orientation-incompatible gluing");
        }
    }

    // Every face glued exactly once.
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.gluings[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)].tet < 0)
                throw internal_gluing_error("unglued face");

    // Edge classes.
    std::map<int, int> root_to_id;
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            const int root = edge_uf.find(6 * t + e);
            auto [it, inserted] = root_to_id.try_emplace(root, static_cast<int>(tri.edges.size()));
            if (inserted) tri.edges.emplace_back();
            const int id = it->second;
            tri.edge_class_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = id;
            tri.edges[static_cast<std::size_t>(id)].degree += 1;
            tri.edges[static_cast<std::size_t>(id)].slots.emplace_back(t, e);
        }
    if (static_cast<int>(tri.edges.size()) != n)
        throw internal_gluing_error("edge class count differs from tetrahedron count");

    // Exactly one cusp: all ideal vertices identified.
    std::map<int, int> vroots;
    for (int i = 0; i < 4 * n; ++i) vroots.try_emplace(vert_uf.find(i), 0);
    if (vroots.size() != 1) throw internal_gluing_error("expected exactly one cusp");

    // Euler characteristic of the cusp cross-section: 4N triangles, 3 * 2N
    // corner edges, 2 * (#edge classes) corner vertices.
    const int chi = 2 * static_cast<int>(tri.edges.size()) - 3 * (2 * n) + 4 * n;
    if (chi != 0) throw internal_gluing_error("cusp cross-section is not a torus");

    return tri;
}

inline std::string LayeredTriangulation::dump() const {
    std::ostringstream out;
    out << "word " << word << " tetrahedra " << n << " edges " << edges.size() << "\n";
    static const char* face_names[4] = {"b0", "b1", "t0", "t1"};
    for (int t = 0; t < n; ++t) {
        out << "tet " << t << " letter " << path[static_cast<std::size_t>(t)].letter << " faces";
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            out << " " << face_names[f] << "->" << g.tet << "." << face_names[g.face];
        }
        out << " edge-classes";
        for (int e = 0; e < 6; ++e)
            out << " " << edge_class_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)];
        out << "\n";
    }
    for (std::size_t id = 0; id < edges.size(); ++id) {
        out << "edge " << id << " degree " << edges[id].degree << " slots";
        for (auto [t, e] : edges[id].slots) out << " (" << t << "," << e << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace entvol
