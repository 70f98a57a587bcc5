#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rightcay/cayley.hpp"
#include "rightcay/embeddings.hpp"
#include "rightcay/products.hpp"

using namespace rightcay;

#ifndef RIGHTCAY_DATA_DIR
#define RIGHTCAY_DATA_DIR "data"
#endif

TEST_CASE("shipped triple-torus certificate revalidates on load") {
    std::ifstream in(std::string(RIGHTCAY_DATA_DIR) + "/triple_torus_genus3.cert");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();

    // loading re-derives faces and genus; a tampered file would be refused
    topo::EmbeddingCertificate cert = embeddings::certificate_from_text(buf.str());
    CHECK(cert.genus == 3);
    CHECK(cert.faces.size() == 20);
    CHECK(topo::revalidate(cert));

    SimpleGraph expected =
        products::blowup(products::box_product(graphs::cycle(3), graphs::complete(2)), 2);
    CHECK(cayley::graph_isomorphic(cert.graph, expected).has_value());

    // the fixture matches the deterministic seeded regeneration
    topo::EmbeddingCertificate fresh = embeddings::triple_torus_example();
    CHECK(embeddings::certificate_to_text(fresh) == buf.str());
}

TEST_CASE("shipped torus certificates revalidate against their constructors") {
    struct Fixture {
        const char* file;
        topo::EmbeddingCertificate fresh;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"torus_square_grid_n4.cert", embeddings::torus_square_grid(4)});
    fixtures.push_back({"torus_triangular_grid_z3r3.cert", embeddings::torus_triangular_grid_Z3R3()});
    fixtures.push_back({"torus_k33.cert", embeddings::torus_Krr(3)});
    fixtures.push_back({"torus_k44.cert", embeddings::torus_Krr(4)});
    for (const auto& f : fixtures) {
        std::ifstream in(std::string(RIGHTCAY_DATA_DIR) + "/" + f.file);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        topo::EmbeddingCertificate loaded = embeddings::certificate_from_text(buf.str());
        CHECK(loaded.genus == 1);
        CHECK(topo::revalidate(loaded));
        CHECK(loaded.graph == f.fresh.graph);
        CHECK(embeddings::certificate_to_text(f.fresh) == buf.str());
    }
}
