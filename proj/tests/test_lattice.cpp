#include <doctest.h>

#include "dualpolar/lattice.hpp"
#include "dualpolar/qseries.hpp"
#include "fixtures.hpp"

using namespace dualpolar;
using namespace dualpolar::lattice;
using forms::Family;

TEST_CASE("enumerate: level sizes")
{
    const auto& c = *fixtures::c22().lat;
    CHECK(c.size(0) == 1);
    CHECK(c.size(1) == 15);
    CHECK(c.size(2) == 15);
    CHECK(c.size(3) == 1);
    CHECK(c.vertex_count() == 15);
    CHECK(fixtures::c32().lat->vertex_count() == 135);
    for (int l = 0; l <= c.d(); ++l)
        for (const auto& s : c.level(l)) {
            CHECK(s.dim() == l);
            CHECK(forms::is_isotropic(c.space(), s));
        }
    CHECK(c.element(c.top()).is_top());
}

TEST_CASE("subspaces are canonical")
{
    const auto& lat = *fixtures::c32().lat;
    const auto& F = lat.field();
    for (int l = 1; l <= lat.d(); ++l)
        for (const auto& s : lat.level(l)) {
            auto piv = s.pivots();
            for (std::size_t i = 1; i < piv.size(); ++i)
                CHECK(piv[i - 1] < piv[i]);
            auto again = Subspace::span(F, s.ambient_dim(), s.rows());
            CHECK(again == s);
            CHECK(lat.locate(s).has_value());
        }
}

TEST_CASE("meet and join examples")
{
    const auto& lat = *fixtures::c22().lat;
    const auto& sp = lat.space();
    const Subspace zero = lat.element(lat.bottom());
    for (const auto& u : lat.level(2)) {
        CHECK(meet(lat, u, u) == u);
        CHECK(meet(lat, u, zero) == zero);
        CHECK(join(lat, u, zero) == u);
    }
    // two Lagrangians through a common point meet in that point
    int found = 0;
    for (int i = 0; i < lat.size(2); ++i)
        for (int j = i + 1; j < lat.size(2); ++j) {
            auto m = meet(lat, lat.level(2)[i], lat.level(2)[j]);
            if (m.dim() == 1) {
                ++found;
                CHECK(rank(lat, m) == 1);
                CHECK(lat.locate(m).has_value());
            }
        }
    CHECK(found == 15 * 6 / 2);
    // atoms: non-orthogonal pairs join to the top, orthogonal distinct ones to rank 2
    int top = 0, two = 0;
    for (int i = 0; i < lat.size(1); ++i)
        for (int j = i + 1; j < lat.size(1); ++j) {
            const auto& t = lat.level(1)[i];
            const auto& s = lat.level(1)[j];
            auto jn = join(lat, t, s);
            if (forms::evaluate(sp, t.row(0), s.row(0)) != 0) {
                CHECK(jn.is_top());
                ++top;
            } else {
                CHECK(rank(lat, jn) == 2);
                ++two;
            }
        }
    CHECK(top + two == 105);
    CHECK(two == 45);
}

TEST_CASE("covers")
{
    const auto& lat = *fixtures::c22().lat;
    const auto zero = lat.element(lat.bottom());
    const auto top = lat.element(lat.top());
    for (const auto& a : lat.level(1))
        CHECK(covers(lat, a, zero));
    for (const auto& x : lat.level(2)) {
        CHECK(covers(lat, top, x));
        CHECK_FALSE(covers(lat, x, x));
        CHECK_FALSE(covers(lat, x, zero));
    }
}

TEST_CASE("a_counts")
{
    auto a = a_counts(*fixtures::c22().lat);
    REQUIRE(a.size() == 4);
    CHECK(a[0] == 15);
    CHECK(a[1] == 3);
    CHECK(a[2] == 1);
    CHECK(a[3] == 0);
    auto c3 = a_counts(*fixtures::c32().lat);
    CHECK(c3 == std::vector<BigInt>{135, 15, 3, 1, 0});
    // brute force: coatoms above a fixed atom of C_2(2)
    const auto& lat = *fixtures::c22().lat;
    int above = 0;
    for (const auto& x : lat.level(2))
        above += leq(lat, lat.level(1)[0], x);
    CHECK(above == 3);
}

TEST_CASE("bcn_count special cases")
{
    const auto& lat = *fixtures::c32().lat;
    const int d = lat.d();
    const auto base = qseries::QBase::of(lat.space());
    const auto a = a_counts(lat);
    for (int j = 0; j <= d; ++j) {
        const auto& w = lat.level(j)[0];
        auto c = bcn_count(lat, w, 0, d - j, j);
        CHECK(c.enumerated == a[j]);
        if (j < d) {
            auto up = bcn_count(lat, w, 0, 1, j);
            BigInt expected = qseries::gauss_binom(d - j, 1, base) * (1 + base.power_e(d - j - 1).get_num());
            CHECK(up.enumerated == expected);
            CHECK(static_cast<long>(lat.up(NodeRef{j, 0}).size()) == expected);
        }
    }
    const auto& c22 = *fixtures::c22().lat;
    CHECK(bcn_count(c22, c22.level(1)[0], 0, 1, 1).enumerated == 3);
    CHECK(fixtures::error_of([&] { bcn_count(c22, c22.level(1)[0], 2, 1, 1); }) == Errc::BadParameters);
}

TEST_CASE("lattice laws on small instances")
{
    auto r = lattice_laws_check(*fixtures::c22().lat, 5000, 10000, 1);
    CHECK(r["exhaustive"] == true);
    auto d = lattice_laws_check(*fixtures::d32().lat, 5000, 10000, 1);
    CHECK(d["exhaustive"] == true);
    // the sampled path
    auto s = lattice_laws_check(*fixtures::c32().lat, 10, 2000, 5);
    CHECK(s["exhaustive"] == false);
}

TEST_CASE("JSON round trip")
{
    const auto& lat = *fixtures::d32().lat;
    auto doc = to_json(lat);
    auto back = from_json(nlohmann::json::parse(doc.dump()));
    for (int l = 0; l <= lat.d() + 1; ++l)
        CHECK(back.level(l) == lat.level(l));
    CHECK(to_json(back) == doc);

    auto bad = doc;
    bad["levels"][1].erase(0);
    CHECK(fixtures::error_of([&] { from_json(bad); }) == Errc::BadInput);
    bad = doc;
    bad["levels"][1][0][0][0] = 7;
    CHECK(fixtures::error_of([&] { from_json(bad); }) == Errc::BadInput);
    bad = doc;
    bad["family"] = "E";
    CHECK(fixtures::error_of([&] { from_json(bad); }) == Errc::BadInput);
}
