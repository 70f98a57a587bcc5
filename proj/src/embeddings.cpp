#include "rightcay/embeddings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rightcay/products.hpp"

namespace rightcay::embeddings {

using topo::EmbeddingCertificate;
using topo::RotationSystem;

namespace {

// Build a certificate from an explicit oriented face list (vertex walks).
// The rotation is recovered from the face permutation via R(e) =
// phi(twin(e)) and the result is revalidated by face tracing, so a face
// list that is not a coherent oriented map is rejected.
EmbeddingCertificate certificate_from_faces(const SimpleGraph& g,
                                            const std::vector<std::vector<int>>& face_walks) {
    auto edges = g.edges();
    const int m = g.edge_count();
    auto dart = [&edges](int u, int v) {
        auto it = std::lower_bound(edges.begin(), edges.end(),
                                   std::pair<int, int>(std::min(u, v), std::max(u, v)));
        if (it == edges.end() || *it != std::pair<int, int>(std::min(u, v), std::max(u, v)))
            throw std::invalid_argument("face walk uses a non-edge");
        return 2 * static_cast<int>(it - edges.begin()) + (u < v ? 0 : 1);
    };

    std::vector<int> next_in_face(static_cast<size_t>(2 * m), -1);
    for (const auto& walk : face_walks) {
        std::vector<int> darts;
        for (size_t i = 0; i < walk.size(); ++i)
            darts.push_back(dart(walk[i], walk[(i + 1) % walk.size()]));
        for (size_t i = 0; i < darts.size(); ++i) {
            int d = darts[i];
            if (next_in_face[static_cast<size_t>(d)] != -1)
                throw std::invalid_argument("dart appears in two faces");
            next_in_face[static_cast<size_t>(d)] = darts[(i + 1) % darts.size()];
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (next_in_face[static_cast<size_t>(d)] == -1)
            throw std::invalid_argument("dart missing from the face list");

    RotationSystem rot;
    rot.order.resize(static_cast<size_t>(g.vertex_count()));
    std::vector<char> placed(static_cast<size_t>(2 * m), 0);
    auto origin = [&edges](int d) {
        const auto& e = edges[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.second : e.first;
    };
    auto head = [&edges](int d) {
        const auto& e = edges[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.first : e.second;
    };
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (placed[static_cast<size_t>(d0)]) continue;
        int v = origin(d0);
        if (!rot.order[static_cast<size_t>(v)].empty())
            throw std::invalid_argument("face list does not induce a single rotation per vertex");
        int d = d0;
        do {
            placed[static_cast<size_t>(d)] = 1;
            rot.order[static_cast<size_t>(v)].push_back(head(d));
            d = next_in_face[static_cast<size_t>(d ^ 1)];
        } while (d != d0);
    }

    EmbeddingCertificate cert = face_trace(g, rot);
    if (cert.faces.size() != face_walks.size())
        throw std::logic_error("face tracing disagrees with the declared face list");
    return cert;
}

}  // namespace

topo::EmbeddingCertificate torus_square_grid(int n) {
    if (n < 4) throw std::invalid_argument("torus_square_grid: n must be >= 4");
    auto v = [n](int g, int i) { return 2 * ((g % n + n) % n) + i; };
    SimpleGraph graph(2 * n);
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) graph.add_edge(v(g, i), v(g + 1, j));

    // rotation of the quadrangular torus grid: slot-1 vertices mirror the
    // slot-0 cyclic order, which makes every face a quadrilateral
    RotationSystem rot;
    rot.order.resize(static_cast<size_t>(2 * n));
    for (int g = 0; g < n; ++g) {
        rot.order[static_cast<size_t>(v(g, 0))] = {v(g + 1, 0), v(g + 1, 1), v(g - 1, 0), v(g - 1, 1)};
        rot.order[static_cast<size_t>(v(g, 1))] = {v(g + 1, 0), v(g - 1, 1), v(g - 1, 0), v(g + 1, 1)};
    }
    EmbeddingCertificate cert = face_trace(graph, rot);
    if (cert.genus != 1 || cert.faces.size() != static_cast<size_t>(2 * n))
        throw std::logic_error("square grid did not trace to genus 1");
    return cert;
}

topo::EmbeddingCertificate torus_triangular_grid_Z3R3() {
    // K_{3,3,3} with parts {3i, 3i+1, 3i+2}; vertex (i, j) sits at grid
    // position (x, y) = (j, i - j mod 3) of the triangular torus grid
    auto at = [](int x, int y) {
        x = (x % 3 + 3) % 3;
        y = (y % 3 + 3) % 3;
        return 3 * ((x + y) % 3) + x;
    };
    SimpleGraph graph(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            graph.add_edge(at(x, y), at(x + 1, y));
            graph.add_edge(at(x, y), at(x, y + 1));
            graph.add_edge(at(x, y), at(x + 1, y + 1));
        }
    std::vector<std::vector<int>> faces;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            faces.push_back({at(x, y), at(x + 1, y), at(x + 1, y + 1)});
            faces.push_back({at(x, y), at(x + 1, y + 1), at(x, y + 1)});
        }
    EmbeddingCertificate cert = certificate_from_faces(graph, faces);
    if (cert.genus != 1) throw std::logic_error("triangular grid did not trace to genus 1");
    return cert;
}

topo::EmbeddingCertificate torus_Krr(int r) {
    if (r == 3) {
        SimpleGraph k33 = graphs::complete_bipartite(3, 3);
        RotationSystem rot;
        rot.order = {{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
        EmbeddingCertificate cert = face_trace(k33, rot);
        if (cert.genus != 1) throw std::logic_error("K33 rotation did not trace to genus 1");
        return cert;
    }
    if (r == 4) {
        // transport the square grid for Cay(Z4 x R2, {1} x R2) onto the
        // standard bipartite labels {0..3} | {4..7}
        EmbeddingCertificate grid = torus_square_grid(4);
        std::vector<int> perm{0, 1, 4, 5, 2, 3, 6, 7};
        EmbeddingCertificate cert = topo::relabel_certificate(grid, perm);
        if (!(cert.graph == graphs::complete_bipartite(4, 4)))
            throw std::logic_error("relabeled grid is not K44");
        if (cert.genus != 1) throw std::logic_error("K44 certificate lost genus 1");
        return cert;
    }
    throw std::invalid_argument("torus_Krr: only r = 3 and r = 4 are toroidal");
}

topo::EmbeddingCertificate triple_torus_example() {
    SimpleGraph g = products::blowup(
        products::box_product(graphs::cycle(3), graphs::complete(2)), 2);
    EmbeddingCertificate cert = topo::heuristic_upper(g, 4'000'000, 1);
    if (cert.genus > 3)
        throw std::runtime_error("seeded search failed to reach genus 3 within its effort");
    return cert;
}

std::string certificate_to_text(const topo::EmbeddingCertificate& cert) {
    std::ostringstream os;
    os << "rightcay-embedding v1\n";
    os << "vertices " << cert.graph.vertex_count() << "\n";
    for (int v = 0; v < cert.graph.vertex_count(); ++v) {
        os << "rot " << v << ":";
        for (int w : cert.rotation.order[static_cast<size_t>(v)]) os << " " << w;
        os << "\n";
    }
    os << "genus " << cert.genus << "\n";
    return os.str();
}

topo::EmbeddingCertificate certificate_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "rightcay-embedding v1")
        throw std::invalid_argument("bad certificate header");
    int n = -1, claimed_genus = -1;
    std::vector<std::vector<int>> order;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "vertices") {
            if (!(ls >> n) || n < 0) throw std::invalid_argument("bad vertices line");
            order.assign(static_cast<size_t>(n), {});
        } else if (key == "rot") {
            std::string vs;
            ls >> vs;
            if (vs.empty() || vs.back() != ':') throw std::invalid_argument("bad rot line");
            int v = std::stoi(vs.substr(0, vs.size() - 1));
            if (n < 0 || v < 0 || v >= n) throw std::invalid_argument("rot vertex out of range");
            int w;
            while (ls >> w) order[static_cast<size_t>(v)].push_back(w);
        } else if (key == "genus") {
            if (!(ls >> claimed_genus)) throw std::invalid_argument("bad genus line");
        } else {
            throw std::invalid_argument("unknown certificate line: " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("certificate missing vertex count");

    SimpleGraph g(n);
    for (int v = 0; v < n; ++v)
        for (int w : order[static_cast<size_t>(v)]) {
            if (w < 0 || w >= n || w == v) throw std::invalid_argument("bad neighbor in rotation");
            if (v < w) g.add_edge(v, w);
        }
    RotationSystem rot{std::move(order)};
    EmbeddingCertificate cert = face_trace(g, rot);  // validates symmetry of the lists
    if (claimed_genus >= 0 && cert.genus != claimed_genus)
        throw std::invalid_argument("stored genus does not match the traced genus");
    return cert;
}

}  // namespace rightcay::embeddings
