#include <doctest.h>

#include "dualpolar/norton.hpp"
#include "fixtures.hpp"

using namespace dualpolar;
using namespace dualpolar::norton;

namespace {

// first pair of distinct atoms whose join has rank 2, or is the top
std::pair<int, int> atom_pair(const lattice::PolarLattice& lat, bool top)
{
    for (int t = 0; t < lat.size(1); ++t)
        for (int s = t + 1; s < lat.size(1); ++s)
            if (lattice::join(lat, lat.level(1)[t], lat.level(1)[s]).is_top() == top)
                return {t, s};
    return {-1, -1};
}

} // namespace

TEST_CASE("star: closed cases")
{
    auto& b = fixtures::c22();
    const auto& lat = *b.lat;
    const auto& dec = *b.dec;
    const Rational c = Rational(lattice::a_counts(lat)[1]) / lat.vertex_count();
    const auto zero = constant_vector(15, 0);
    const auto t0 = frames::tau_check(lat, dec, 0);
    CHECK(star(dec, t0, zero) == zero);
    CHECK(star(dec, t0, t0) == t0 - (2 * c) * t0);
    auto [t, s] = atom_pair(lat, true);
    REQUIRE(t >= 0);
    const auto tt = frames::tau_check(lat, dec, t);
    const auto ts = frames::tau_check(lat, dec, s);
    CHECK(star(dec, tt, ts) == (-c) * (tt + ts));
    CHECK(star(dec, tt, ts) == star(dec, ts, tt));
    CHECK(fixtures::error_of([&] { star(dec, constant_vector(15, 1), t0); }) == Errc::NotInV1);
}

TEST_CASE("psi_partition")
{
    auto& c = fixtures::c32();
    auto [t, s] = atom_pair(*c.lat, false);
    auto part = psi_partition(*c.lat, t, s);
    CHECK(part.psi2.size() == 3);
    CHECK(std::find(part.psi2.begin(), part.psi2.end(), t) != part.psi2.end());
    CHECK(part.psi2.size() + part.psi3.size() + part.psi_top.size() == 63u);

    auto& b = fixtures::c22();
    auto [u, v] = atom_pair(*b.lat, false);
    auto p2 = psi_partition(*b.lat, u, v);
    CHECK(p2.psi3.empty());
    CHECK(fixtures::error_of([&] { psi_partition(*b.lat, u, u); }) == Errc::BadOperands);
    auto [x, y] = atom_pair(*b.lat, true);
    CHECK(fixtures::error_of([&] { psi_partition(*b.lat, x, y); }) == Errc::BadOperands);
}

TEST_CASE("norton_rhs")
{
    CHECK(rhs_denominator(*fixtures::c32().lat) == 24);
    CHECK(rhs_denominator(*fixtures::d32().lat) == 12);
    auto& c = fixtures::c32();
    auto [t, s] = atom_pair(*c.lat, false);
    const auto rhs = norton_rhs(*c.lat, t, s);
    CHECK(rhs == norton_rhs(*c.lat, s, t));
    CHECK(star(*c.dec, frames::tau_check(*c.lat, *c.dec, t), frames::tau_check(*c.lat, *c.dec, s)) == rhs);
    auto& b = fixtures::c22();
    auto [u, v] = atom_pair(*b.lat, false);
    CHECK(fixtures::error_of([&] { norton_rhs(*b.lat, u, v); }) == Errc::DiameterTooSmall);
}

TEST_CASE("verify_norton")
{
    auto r3 = verify_norton(*fixtures::c32().lat, *fixtures::c32().dec);
    CHECK(r3["exhaustive"] == true);
    CHECK(r3["rank2_join"].get<long>() > 0);
    CHECK_FALSE(r3.contains("rank2_join_skipped"));

    auto r2 = verify_norton(*fixtures::c22().lat, *fixtures::c22().dec);
    REQUIRE(r2.contains("rank2_join_skipped"));
    CHECK(r2["rank2_join_skipped"]["reason"].get<std::string>().size() > 0);
    CHECK(r2["projection_identity"].get<long>() > 0);

    auto rd = verify_norton(*fixtures::d32().lat, *fixtures::d32().dec);
    CHECK(rd["rank2_join"].get<long>() > 0);
}

TEST_CASE("triple inner products on C_2(2) take values a_2 or 0")
{
    const auto& lat = *fixtures::c22().lat;
    const auto a = lattice::a_counts(lat);
    for (int t = 0; t < lat.size(1); ++t)
        for (int s = t + 1; s < lat.size(1); ++s) {
            auto ts = lattice::join(lat, lat.level(1)[t], lat.level(1)[s]);
            if (ts.is_top())
                continue;
            for (int r = 0; r < lat.size(1); ++r) {
                auto ip = dot(frames::iota(lat, lattice::NodeRef{1, r}), frames::iota(lat, ts));
                CHECK((ip == Rational(a[2]) || ip == 0));
            }
        }
}
