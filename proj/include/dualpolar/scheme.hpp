#pragma once

// The dual polar graph on X = Omega_d and its distance-regular structure.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dualpolar/lattice.hpp"
#include "dualpolar/matrix.hpp"

namespace dualpolar::scheme {

using DistanceTable = std::vector<std::uint8_t>; // row-major |X| x |X|

class DualPolarGraph {
public:
    DualPolarGraph(std::shared_ptr<const lattice::PolarLattice> lat, DistanceTable dist);

    const lattice::PolarLattice& lattice() const noexcept { return *lat_; }
    const std::shared_ptr<const lattice::PolarLattice>& lattice_ptr() const noexcept { return lat_; }
    int vertex_count() const noexcept { return n_; }
    int diameter() const noexcept { return lat_->d(); }
    int distance(int x, int y) const { return dist_[static_cast<std::size_t>(x) * n_ + y]; }
    const DistanceTable& distances() const noexcept { return dist_; }
    std::vector<int> neighbours(int x) const;

private:
    std::shared_ptr<const lattice::PolarLattice> lat_;
    int n_ = 0;
    DistanceTable dist_;
};

/// d(x, y) = d - dim(x ^ y) for all pairs, rows filled in parallel.
DistanceTable distance_table(const lattice::PolarLattice& lat);
DualPolarGraph build_graph(std::shared_ptr<const lattice::PolarLattice> lat);
/// Path distances by breadth-first search on the dim(x ^ y) = d - 1 graph;
/// unreachable pairs are 255.
DistanceTable bfs_distances(const DualPolarGraph& g);

/// (A_i)_xy = 1 iff d(x, y) = i. Errors: IndexOutOfRange.
IntMatrix adjacency_matrix(const DualPolarGraph& g, int i);

struct IntersectionNumbers {
    int d = 0;
    std::vector<std::int64_t> table; // (d+1)^3, index (i, j, h)

    std::int64_t p(int i, int j, int h) const
    {
        return table.at((static_cast<std::size_t>(i) * (d + 1) + j) * (d + 1) + h);
    }
    std::int64_t k(int i) const { return p(i, i, 0); }
};

/// Counts |{z : d(x,z) = i, d(y,z) = j}| for every pair (x, y), requires them
/// to depend only on h = d(x, y), and checks A_i A_j = sum_h p_ij^h A_h and the
/// valency formula. Errors: NotDistanceRegular.
IntersectionNumbers intersection_numbers(const DualPolarGraph& g);

/// Graphviz source of the distance-1 graph.
std::string to_dot(const DualPolarGraph& g);
/// Lines "i,j,h,p_ij^h" in lexicographic order, no header.
std::string intersection_csv(const IntersectionNumbers& pn);

} // namespace dualpolar::scheme

namespace dualpolar::reference {

/// Serial distance fill.
scheme::DistanceTable distance_table(const lattice::PolarLattice& lat);

} // namespace dualpolar::reference
