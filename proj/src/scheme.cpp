#include "dualpolar/scheme.hpp"

#include <deque>
#include <sstream>

#include "dualpolar/kernels.hpp"
#include "dualpolar/qseries.hpp"

namespace dualpolar::scheme {

DualPolarGraph::DualPolarGraph(std::shared_ptr<const lattice::PolarLattice> lat, DistanceTable dist)
    : lat_(std::move(lat)), n_(lat_->vertex_count()), dist_(std::move(dist))
{
    if (dist_.size() != static_cast<std::size_t>(n_) * n_)
        throw Error(Errc::DimensionMismatch, "distance table has the wrong size");
}

std::vector<int> DualPolarGraph::neighbours(int x) const
{
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (distance(x, y) == 1)
            out.push_back(y);
    return out;
}

namespace {

void fill_row(const lattice::PolarLattice& lat, DistanceTable& dist, int x)
{
    const auto& X = lat.level(lat.d());
    const int n = static_cast<int>(X.size());
    for (int y = x; y < n; ++y) {
        const int dd = lat.d() - intersection(lat.field(), X[x], X[y]).dim();
        dist[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint8_t>(dd);
        dist[static_cast<std::size_t>(y) * n + x] = static_cast<std::uint8_t>(dd);
    }
}

} // namespace

DistanceTable distance_table(const lattice::PolarLattice& lat)
{
    const int n = lat.vertex_count();
    DistanceTable dist(static_cast<std::size_t>(n) * n, 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (int x = 0; x < n; ++x)
        fill_row(lat, dist, x);
    return dist;
}

DualPolarGraph build_graph(std::shared_ptr<const lattice::PolarLattice> lat)
{
    auto dist = distance_table(*lat);
    return DualPolarGraph(std::move(lat), std::move(dist));
}

DistanceTable bfs_distances(const DualPolarGraph& g)
{
    const int n = g.vertex_count();
    const auto& lat = g.lattice();
    const auto& X = lat.level(lat.d());
    // adjacency from dimensions of intersections, independent of the table
    std::vector<std::vector<int>> adj(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && intersection(lat.field(), X[x], X[y]).dim() == lat.d() - 1)
                adj[x].push_back(y);
    DistanceTable dist(static_cast<std::size_t>(n) * n, 255);
    for (int s = 0; s < n; ++s) {
        std::uint8_t* row = &dist[static_cast<std::size_t>(s) * n];
        std::deque<int> queue{s};
        row[s] = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (row[w] == 255) {
                    row[w] = static_cast<std::uint8_t>(row[v] + 1);
                    queue.push_back(w);
                }
        }
    }
    return dist;
}

IntMatrix adjacency_matrix(const DualPolarGraph& g, int i)
{
    if (i < 0 || i > g.diameter())
        throw Error(Errc::IndexOutOfRange, "distance " + std::to_string(i) + " outside 0.." +
                                               std::to_string(g.diameter()));
    const int n = g.vertex_count();
    IntMatrix a(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            a(x, y) = g.distance(x, y) == i ? 1 : 0;
    return a;
}

IntersectionNumbers intersection_numbers(const DualPolarGraph& g)
{
    const int n = g.vertex_count();
    const int d = g.diameter();
    const int D = d + 1;
    const std::size_t cells = static_cast<std::size_t>(D) * D;

    for (auto v : g.distances())
        if (v > d)
            throw Error(Errc::NotDistanceRegular, "distance exceeds the diameter");

    // witness table per h, from the first pair found at that distance
    std::vector<std::vector<std::int64_t>> witness(D);
    std::vector<std::pair<int, int>> witness_pair(D, {-1, -1});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int h = g.distance(x, y);
            if (witness_pair[h].first >= 0)
                continue;
            witness_pair[h] = {x, y};
            witness[h].assign(cells, 0);
            for (int z = 0; z < n; ++z)
                ++witness[h][static_cast<std::size_t>(g.distance(x, z)) * D + g.distance(y, z)];
        }
    for (int h = 0; h < D; ++h)
        if (witness_pair[h].first < 0)
            throw Error(Errc::NotDistanceRegular, "no pair at distance " + std::to_string(h));

    std::string violation;
#pragma omp parallel
    {
        std::vector<std::int64_t> counts(cells);
#pragma omp for schedule(dynamic, 2)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                std::fill(counts.begin(), counts.end(), 0);
                for (int z = 0; z < n; ++z)
                    ++counts[static_cast<std::size_t>(g.distance(x, z)) * D + g.distance(y, z)];
                if (counts != witness[g.distance(x, y)]) {
#pragma omp critical
                    if (violation.empty())
                        violation = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
    }
    if (!violation.empty())
        throw Error(Errc::NotDistanceRegular, "intersection counts differ at " + violation);

    IntersectionNumbers pn;
    pn.d = d;
    pn.table.assign(cells * D, 0);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int h = 0; h < D; ++h)
                pn.table[(static_cast<std::size_t>(i) * D + j) * D + h] = witness[h][static_cast<std::size_t>(i) * D + j];

    std::vector<IntMatrix> A;
    for (int i = 0; i < D; ++i)
        A.push_back(adjacency_matrix(g, i));
    for (int i = 0; i < D; ++i)
        for (int j = i; j < D; ++j) {
            IntMatrix rhs(n, n);
            for (int h = 0; h < D; ++h)
                rhs = rhs + scaled(A[h], pn.p(i, j, h));
            if (!(kernels::multiply(A[i], A[j]) == rhs))
                throw Error(Errc::NotDistanceRegular, "A_" + std::to_string(i) + " A_" + std::to_string(j) +
                                                          " is not the expected combination");
        }

    const auto base = qseries::QBase::of(g.lattice().space());
    for (int i = 0; i < D; ++i)
        if (qseries::valency(i, d, base) != static_cast<long>(pn.k(i)))
            throw Error(Errc::NotDistanceRegular, "k_" + std::to_string(i) + " = " + std::to_string(pn.k(i)) +
                                                      " disagrees with the valency formula");
    return pn;
}

std::string to_dot(const DualPolarGraph& g)
{
    std::ostringstream os;
    std::string name = g.lattice().space().name();
    os << "graph \"" << name << "\" {\n";
    for (int x = 0; x < g.vertex_count(); ++x)
        os << "  " << x << ";\n";
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = x + 1; y < g.vertex_count(); ++y)
            if (g.distance(x, y) == 1)
                os << "  " << x << " -- " << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string intersection_csv(const IntersectionNumbers& pn)
{
    std::ostringstream os;
    for (int i = 0; i <= pn.d; ++i)
        for (int j = 0; j <= pn.d; ++j)
            for (int h = 0; h <= pn.d; ++h)
                os << i << ',' << j << ',' << h << ',' << pn.p(i, j, h) << '\n';
    return os.str();
}

} // namespace dualpolar::scheme

namespace dualpolar::reference {

scheme::DistanceTable distance_table(const lattice::PolarLattice& lat)
{
    const int n = lat.vertex_count();
    scheme::DistanceTable dist(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        scheme::fill_row(lat, dist, x);
    return dist;
}

} // namespace dualpolar::reference
