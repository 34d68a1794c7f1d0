#include <doctest.h>

#include <memory>

#include "dualpolar/lattice.hpp"
#include "dualpolar/scheme.hpp"
#include "dualpolar/spectral.hpp"
#include "goldens.hpp"
#include "oracle.hpp"

using namespace dualpolar;

TEST_CASE("oracle field: GF(4) modulus is the only irreducible monic quadratic")
{
    // the four monic quadratics over GF(2), c0 + c1 x + x^2
    int irreducible = 0;
    std::vector<int> which;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            bool root = false;
            for (int x = 0; x < 2; ++x)
                root = root || (c0 + c1 * x + x * x) % 2 == 0;
            if (!root) {
                ++irreducible;
                which = {c0, c1, 1};
            }
        }
    CHECK(irreducible == 1);
    CHECK(which == std::vector<int>{1, 1, 1});
    CHECK(oracle::Field(2, 2).modulus == which);
    CHECK(gf::field_create(2, 2)->modulus() == which);
}

TEST_CASE("oracle field: axioms for every q <= 9")
{
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        oracle::Field F(p, k);
        CAPTURE(F.q);
        for (int a = 0; a < F.q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            if (a)
                CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < F.q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                if (a && b)
                    CHECK(F.mul(a, b) != 0);
                for (int c = 0; c < F.q; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
        // the library field is the same size and also a field; multiplicative
        // orders agree as multisets
        auto lib = gf::field_create(p, k);
        std::multiset<int> oa, ob;
        for (int a = 1; a < F.q; ++a) {
            int o = 1;
            for (int x = a; x != 1; x = F.mul(x, a))
                ++o;
            oa.insert(o);
            o = 1;
            for (gf::Elem x = a; x != 1; x = lib->mul(x, a))
                ++o;
            ob.insert(o);
        }
        CHECK(oa == ob);
    }
}

TEST_CASE("oracle: [4;2]_2 = 35 by counting 2-subspaces of GF(2)^4")
{
    CHECK(oracle::count_subspaces(oracle::Field(2, 1), 4, 2) == 35);
    CHECK(oracle::count_subspaces(oracle::Field(2, 1), 4, 1) == 15);
    CHECK(oracle::count_subspaces(oracle::Field(3, 1), 3, 1) == 13);
}

TEST_CASE("oracle: the 2D binary form has no nonzero root over GF(2)")
{
    auto s = oracle::make("2D", 2, 2);
    int roots = 0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if ((x || y) && (s.Q[4][4] * x * x + s.Q[4][5] * x * y + s.Q[5][5] * y * y) % 2 == 0)
                ++roots;
    CHECK(roots == 0);
}

TEST_CASE("oracle: isotropic subspace counts match the goldens and the lattice")
{
    for (const auto& g : goldens::instances()) {
        const auto name = forms::instance_name(g.family, g.d, g.r);
        CAPTURE(name);
        auto sp = oracle::make(g.tag, g.d, g.r);
        auto e = oracle::enumerate(sp, g.d + 1);
        // nothing isotropic beyond dimension d
        REQUIRE(e.levels.size() == static_cast<std::size_t>(g.d + 2));
        CHECK(e.levels[g.d + 1].empty());
        const auto lat = lattice::enumerate(forms::make_space(g.family, g.d, g.r));
        for (int l = 0; l <= g.d; ++l) {
            CAPTURE(l);
            CHECK(static_cast<long>(e.levels[l].size()) == g.level_sizes[l]);
            // ordered bases / |GL_l| gives the same count
            CHECK(e.ordered_bases[l] == g.level_sizes[l] * oracle::gl_order(l, sp.F.q));
            CHECK(lat.size(l) == g.level_sizes[l]);
        }
    }
}

TEST_CASE("oracle graph: distance distribution, spectrum traces and lambda_1")
{
    for (const auto& g : goldens::instances()) {
        const auto name = forms::instance_name(g.family, g.d, g.r);
        CAPTURE(name);
        auto sp = oracle::make(g.tag, g.d, g.r);
        auto e = oracle::enumerate(sp, g.d);
        const auto& X = e.levels[g.d];
        const long q = sp.F.q;
        auto og = oracle::graph(X, q, g.d);

        auto lat = std::make_shared<const lattice::PolarLattice>(lattice::enumerate(forms::make_space(g.family, g.d, g.r)));
        auto lg = scheme::build_graph(lat);
        const auto pn = scheme::intersection_numbers(lg);

        // distance distribution from vertex 0 and diameter
        std::vector<long> dist_count(g.d + 1, 0);
        for (int y = 0; y < og.n; ++y) {
            REQUIRE(og.dist[0][y] >= 0);
            REQUIRE(og.dist[0][y] <= g.d);
            ++dist_count[og.dist[0][y]];
        }
        for (int i = 0; i <= g.d; ++i)
            CHECK(dist_count[i] == pn.k(i));

        // trace(A^k) = sum_j m_j mu_j^k for k = 0..d pins the multiplicities
        const auto mu = spectral::mu_values(lat->space());
        auto A = oracle::adjacency(og);
        oracle::Mat P(og.n, std::vector<long long>(og.n, 0));
        for (int x = 0; x < og.n; ++x)
            P[x][x] = 1;
        for (int k = 0; k <= g.d; ++k) {
            Rational expected = 0;
            for (int j = 0; j <= g.d; ++j) {
                Rational t = g.multiplicities[j];
                for (int s = 0; s < k; ++s)
                    t *= mu[j];
                expected += t;
            }
            CHECK(Rational(static_cast<long>(oracle::trace(P))) == expected);
            P = oracle::multiply(P, A);
        }

        // lambda_1 from the U^1 action on tau-check for one point tau:
        // (U^1)_xy = number of points in x ^ y
        const int tau = X[0][1];
        std::vector<long> v(og.n);
        long a1 = 0;
        for (int x = 0; x < og.n; ++x)
            a1 += std::binary_search(X[x].begin(), X[x].end(), tau);
        for (int x = 0; x < og.n; ++x)
            v[x] = (std::binary_search(X[x].begin(), X[x].end(), tau) ? og.n : 0) - a1; // |X| * tau-check
        // v lies in the mu_1 eigenspace
        for (int x = 0; x < og.n; ++x) {
            long av = 0;
            for (int y : og.adj[x])
                av += v[y];
            CHECK(Rational(av) == mu[1] * Rational(v[x]));
        }
        std::optional<Rational> lambda;
        for (int x = 0; x < og.n; ++x) {
            long uv = 0;
            for (int y = 0; y < og.n; ++y)
                uv += (og.meet_size[x][y] - 1) / (q - 1) * v[y];
            if (v[x] == 0) {
                CHECK(uv == 0);
                continue;
            }
            Rational ratio(uv, v[x]);
            ratio.canonicalize();
            if (!lambda)
                lambda = ratio;
            CHECK(ratio == *lambda);
        }
        REQUIRE(lambda);
        CHECK(*lambda == g.lambda1);
    }
}
