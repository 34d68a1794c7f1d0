#include <doctest.h>

#include "dualpolar/qseries.hpp"
#include "dualpolar/scheme.hpp"
#include "fixtures.hpp"

using namespace dualpolar;
using namespace dualpolar::scheme;

TEST_CASE("build_graph: C_2(2) is 6-regular on 15 vertices")
{
    const auto& g = *fixtures::c22().graph;
    CHECK(g.vertex_count() == 15);
    for (int x = 0; x < 15; ++x) {
        CHECK(g.distance(x, x) == 0);
        CHECK(g.neighbours(x).size() == 6);
        for (int y = 0; y < 15; ++y)
            CHECK(g.distance(x, y) == g.distance(y, x));
    }
    CHECK(bfs_distances(g) == g.distances());
}

TEST_CASE("build_graph: C_3(2) attains diameter 3")
{
    const auto& g = *fixtures::c32().graph;
    int maxd = 0;
    for (auto v : g.distances())
        maxd = std::max<int>(maxd, v);
    CHECK(maxd == 3);
    CHECK(bfs_distances(g) == g.distances());
    CHECK(reference::distance_table(g.lattice()) == g.distances());
}

TEST_CASE("adjacency matrices")
{
    const auto& g = *fixtures::c32().graph;
    const int n = g.vertex_count();
    CHECK(adjacency_matrix(g, 0) == IntMatrix::identity(n));
    IntMatrix sum(n, n);
    for (int i = 0; i <= g.diameter(); ++i) {
        auto a = adjacency_matrix(g, i);
        CHECK(a.is_symmetric());
        for (auto v : a.data())
            CHECK((v == 0 || v == 1));
        sum = sum + a;
    }
    CHECK(sum == IntMatrix(n, n, 1));
    CHECK(fixtures::error_of([&] { adjacency_matrix(g, 4); }) == Errc::IndexOutOfRange);
    CHECK(fixtures::error_of([&] { adjacency_matrix(g, -1); }) == Errc::IndexOutOfRange);
}

TEST_CASE("intersection numbers")
{
    auto pn = intersection_numbers(*fixtures::c22().graph);
    CHECK(pn.p(0, 0, 0) == 1);
    CHECK(pn.k(1) == 6);
    CHECK(pn.p(1, 1, 1) == 1);
    CHECK(pn.p(1, 1, 2) == 3);
    auto p3 = intersection_numbers(*fixtures::c32().graph);
    CHECK(p3.k(1) == 14);
    const auto base = qseries::QBase::of(fixtures::c32().lat->space());
    for (int i = 0; i <= 3; ++i) {
        CHECK(p3.k(i) == qseries::valency(i, 3, base));
        for (int h = 0; h <= 3; ++h) {
            long row = 0;
            for (int j = 0; j <= 3; ++j) {
                CHECK(p3.p(i, j, h) == p3.p(j, i, h));
                row += p3.p(i, j, h);
            }
            CHECK(row == p3.k(i));
        }
    }
}

TEST_CASE("exports")
{
    const auto& g = *fixtures::c22().graph;
    auto dot = to_dot(g);
    CHECK(dot.rfind("graph \"C_2(2)\" {", 0) == 0);
    long edges = 0;
    for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2))
        ++edges;
    CHECK(edges == 45);
    auto csv = intersection_csv(intersection_numbers(g));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 27);
    CHECK(csv.find("1,1,2,3\n") != std::string::npos);
}
