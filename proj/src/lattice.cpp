#include "dualpolar/lattice.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "dualpolar/qseries.hpp"

namespace dualpolar::lattice {

int popcount(const Bitset& b)
{
    int c = 0;
    for (auto w : b)
        c += std::popcount(w);
    return c;
}

std::vector<int> bit_indices(const Bitset& b)
{
    std::vector<int> out;
    for (std::size_t w = 0; w < b.size(); ++w)
        for (auto word = b[w]; word; word &= word - 1)
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
    return out;
}

int PolarLattice::total_size() const
{
    int t = 0;
    for (const auto& l : levels_)
        t += static_cast<int>(l.size());
    return t;
}

std::optional<NodeRef> PolarLattice::locate(const Subspace& s) const
{
    auto it = index_.find(s.key());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

namespace {

std::vector<Subspace> isotropic_points(const forms::FormedSpace& space)
{
    const int n = space.n();
    const int q = space.q();
    std::vector<Subspace> pts;
    Vector v(n);
    for (int lead = n - 1; lead >= 0; --lead) {
        // all vectors whose first nonzero coordinate is a 1 at `lead`
        const int free = n - 1 - lead;
        std::vector<int> digits(free, 0);
        while (true) {
            std::fill(v.begin(), v.end(), 0);
            v[lead] = 1;
            for (int i = 0; i < free; ++i)
                v[lead + 1 + i] = static_cast<Elem>(digits[i]);
            if (space.is_isotropic_vector(v))
                pts.push_back(Subspace::from_canonical(n, v));
            int i = free - 1;
            while (i >= 0 && ++digits[i] == q)
                digits[i--] = 0;
            if (i < 0)
                break;
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

struct Extension {
    std::vector<Subspace> level;
    std::vector<std::vector<int>> parents;
};

// Every (l+1)-dim isotropic W is U + p for each of its l-dim subspaces U and
// each point p of W outside U, so the parent lists are complete down-covers.
Extension extend(const forms::FormedSpace& space, const std::vector<Subspace>& below,
                 const std::vector<Subspace>& points)
{
    const auto& F = space.field();
    const int n = space.n();
    std::vector<std::pair<Subspace, int>> found;
#pragma omp parallel
    {
        std::vector<std::pair<Subspace, int>> local;
#pragma omp for schedule(dynamic, 4) nowait
        for (int u = 0; u < static_cast<int>(below.size()); ++u) {
            const Subspace& U = below[u];
            for (const auto& pt : points) {
                const auto p = pt.row(0);
                bool orth = true;
                for (int i = 0; i < U.dim() && orth; ++i)
                    orth = space.pairing(p, U.row(i)) == 0;
                if (!orth || contains(F, U, p))
                    continue;
                std::vector<Elem> flat(U.data());
                flat.insert(flat.end(), p.begin(), p.end());
                local.emplace_back(Subspace::span(F, n, std::move(flat), U.dim() + 1), u);
            }
        }
#pragma omp critical
        found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    std::sort(found.begin(), found.end());
    Extension ext;
    for (auto& [w, u] : found) {
        if (ext.level.empty() || !(ext.level.back() == w)) {
            ext.level.push_back(w);
            ext.parents.emplace_back();
        }
        auto& ps = ext.parents.back();
        if (ps.empty() || ps.back() != u)
            ps.push_back(u);
    }
    return ext;
}

// Levels 0, 1, ... until extension yields nothing, or past max_level.
std::pair<std::vector<std::vector<Subspace>>, std::vector<std::vector<std::vector<int>>>>
grow(const forms::FormedSpace& space, int max_level)
{
    const int n = space.n();
    std::vector<std::vector<Subspace>> levels{{Subspace::zero(n)}};
    std::vector<std::vector<std::vector<int>>> down{{{}}};
    auto points = isotropic_points(space);
    if (points.empty())
        return {levels, down};
    levels.push_back(points);
    down.emplace_back(points.size(), std::vector<int>{0});
    while (static_cast<int>(levels.size()) <= max_level) {
        auto ext = extend(space, levels.back(), points);
        if (ext.level.empty())
            break;
        levels.push_back(std::move(ext.level));
        down.push_back(std::move(ext.parents));
    }
    return {levels, down};
}

} // namespace

PolarLattice link(forms::FormedSpace space, std::vector<std::vector<Subspace>> levels,
                  std::vector<std::vector<std::vector<int>>> down)
{
    PolarLattice lat;
    const int d = space.d();
    const int n = space.n();
    lat.space_ = std::move(space);
    lat.levels_ = std::move(levels);
    lat.down_ = std::move(down);

    const int X = static_cast<int>(lat.levels_[d].size());
    lat.levels_.push_back({Subspace::top(n)});
    std::vector<int> all(X);
    for (int i = 0; i < X; ++i)
        all[i] = i;
    lat.down_.push_back({all});

    lat.up_.resize(d + 2);
    for (int l = 0; l <= d + 1; ++l)
        lat.up_[l].resize(lat.levels_[l].size());
    for (int l = 1; l <= d + 1; ++l)
        for (int i = 0; i < static_cast<int>(lat.down_[l].size()); ++i)
            for (int c : lat.down_[l][i])
                lat.up_[l - 1][c].push_back(i);

    const std::size_t words = (static_cast<std::size_t>(X) + 63) / 64;
    lat.above_.resize(d + 2);
    lat.above_[d + 1].assign(1, Bitset(words, 0));
    lat.above_[d].assign(X, Bitset(words, 0));
    for (int x = 0; x < X; ++x)
        lat.above_[d][x][x >> 6] |= std::uint64_t{1} << (x & 63);
    for (int l = d - 1; l >= 0; --l) {
        auto& cur = lat.above_[l];
        cur.assign(lat.levels_[l].size(), Bitset(words, 0));
#pragma omp parallel for schedule(static)
        for (int i = 0; i < static_cast<int>(cur.size()); ++i)
            for (int u : lat.up_[l][i])
                for (std::size_t w = 0; w < words; ++w)
                    cur[i][w] |= lat.above_[l + 1][u][w];
    }

    for (int l = 0; l <= d + 1; ++l)
        for (int i = 0; i < static_cast<int>(lat.levels_[l].size()); ++i)
            lat.index_.emplace(lat.levels_[l][i].key(), NodeRef{l, i});
    return lat;
}

int witt_index_check(const forms::FormedSpace& space)
{
    auto levels = grow(space, space.n()).first;
    const int witt = static_cast<int>(levels.size()) - 1;
    if (witt != space.d())
        throw Error(Errc::WittIndexMismatch, space.name() + ": maximal isotropic dimension " + std::to_string(witt) +
                                                 ", expected " + std::to_string(space.d()));
    return witt;
}

PolarLattice enumerate(const forms::FormedSpace& space)
{
    const int d = space.d();
    auto [levels, down] = grow(space, d + 1);
    if (static_cast<int>(levels.size()) != d + 1)
        throw Error(Errc::WittIndexMismatch, space.name() + ": isotropic levels stop at " +
                                                 std::to_string(levels.size() - 1) + ", expected " + std::to_string(d));
    const auto base = qseries::QBase::of(space);
    for (int l = 0; l <= d; ++l) {
        const BigInt expect = qseries::bcn_closed(d, base, 0, 0, l, 0);
        if (expect != static_cast<long>(levels[l].size()))
            throw Error(Errc::CountMismatch, space.name() + ": level " + std::to_string(l) + " has " +
                                                 std::to_string(levels[l].size()) + " elements, expected " +
                                                 expect.get_str());
    }
    return link(space, std::move(levels), std::move(down));
}

Subspace meet(const PolarLattice& lat, const Subspace& u, const Subspace& w)
{
    if (u.is_top())
        return w;
    if (w.is_top())
        return u;
    return intersection(lat.field(), u, w);
}

Subspace join(const PolarLattice& lat, const Subspace& u, const Subspace& w)
{
    if (u.is_top() || w.is_top())
        return Subspace::top(lat.space().n());
    Subspace s = sum(lat.field(), u, w);
    if (!forms::is_isotropic(lat.space(), s))
        return Subspace::top(lat.space().n());
    return s;
}

int rank(const PolarLattice& lat, const Subspace& s) { return s.is_top() ? lat.d() + 1 : s.dim(); }

bool leq(const PolarLattice& lat, const Subspace& u, const Subspace& w)
{
    if (w.is_top())
        return true;
    if (u.is_top())
        return false;
    return is_subspace_of(lat.field(), u, w);
}

bool covers(const PolarLattice& lat, const Subspace& u, const Subspace& w)
{
    return rank(lat, u) == rank(lat, w) + 1 && leq(lat, w, u);
}

std::vector<BigInt> a_counts(const PolarLattice& lat)
{
    const int d = lat.d();
    const auto base = qseries::QBase::of(lat.space());
    std::vector<BigInt> a(d + 2, 0);
    for (int j = 0; j <= d; ++j) {
        const int first = popcount(lat.above({j, 0}));
        for (int i = 1; i < lat.size(j); ++i)
            if (popcount(lat.above({j, i})) != first)
                throw Error(Errc::CountMismatch, "coatoms above level " + std::to_string(j) + " are not constant");
        a[j] = first;
        if (a[j] != qseries::a_closed(j, d, base))
            throw Error(Errc::CountMismatch, "a_" + std::to_string(j) + " = " + a[j].get_str() +
                                                 " disagrees with the product formula");
    }
    for (int j = 0; j < d; ++j)
        if (Rational(a[j]) != (1 + base.power_e(d - j - 1)) * Rational(a[j + 1]))
            throw Error(Errc::CountMismatch, "a_" + std::to_string(j) + " breaks the recursion");
    return a;
}

namespace {

void require_base(const PolarLattice& lat, const Subspace& w)
{
    if (w.is_top() || !forms::is_isotropic(lat.space(), w))
        throw Error(Errc::BadParameters, "W must be an isotropic subspace");
}

// counts[s][m][lm]: U in Omega_s with dim(U^W) = m, dim(U^W-perp) = lm
std::vector<std::vector<std::vector<long>>> intersection_profile(const PolarLattice& lat, const Subspace& w,
                                                                  int only_level = -1)
{
    const int d = lat.d();
    const Subspace wp = forms::perp(lat.space(), w);
    std::vector<std::vector<std::vector<long>>> counts(d + 1, std::vector<std::vector<long>>(d + 1, std::vector<long>(d + 1, 0)));
    for (int s = 0; s <= d; ++s) {
        if (only_level >= 0 && s != only_level)
            continue;
        const auto& lvl = lat.level(s);
        std::vector<std::pair<int, int>> dims(lvl.size());
#pragma omp parallel for schedule(static)
        for (int i = 0; i < static_cast<int>(lvl.size()); ++i)
            dims[i] = {intersection(lat.field(), lvl[i], w).dim(), intersection(lat.field(), lvl[i], wp).dim()};
        for (auto [m, lm] : dims)
            ++counts[s][m][lm];
    }
    return counts;
}

} // namespace

BcnCount bcn_count(const PolarLattice& lat, const Subspace& w, int k, int l, int m)
{
    require_base(lat, w);
    const int d = lat.d();
    if (k < 0 || l < 0 || m < 0 || k + l + m > d)
        throw Error(Errc::BadParameters, "need k, l, m >= 0 with k + l + m <= d");
    const auto counts = intersection_profile(lat, w, k + l + m);
    BcnCount r;
    r.enumerated = counts[k + l + m][m][l + m];
    r.closed = qseries::bcn_closed(d, qseries::QBase::of(lat.space()), w.dim(), k, l, m);
    if (r.enumerated != r.closed)
        throw Error(Errc::CountMismatch, "(k,l,m) = (" + std::to_string(k) + "," + std::to_string(l) + "," +
                                             std::to_string(m) + "): counted " + r.enumerated.get_str() +
                                             ", closed form " + r.closed.get_str());
    return r;
}

std::vector<BcnEntry> bcn_profile(const PolarLattice& lat, const Subspace& w)
{
    require_base(lat, w);
    const int d = lat.d();
    const auto base = qseries::QBase::of(lat.space());
    const auto counts = intersection_profile(lat, w);
    std::vector<BcnEntry> out;
    for (int k = 0; k <= d; ++k)
        for (int l = 0; k + l <= d; ++l)
            for (int m = 0; k + l + m <= d; ++m)
                out.push_back({k, l, m, counts[k + l + m][m][l + m], qseries::bcn_closed(d, base, w.dim(), k, l, m)});
    return out;
}

nlohmann::json lattice_laws_check(const PolarLattice& lat, int limit, int samples, std::uint64_t seed)
{
    const auto& F = lat.field();
    const int n = lat.space().n();
    const int d = lat.d();
    std::vector<NodeRef> nodes;
    for (int l = 0; l <= d + 1; ++l)
        for (int i = 0; i < lat.size(l); ++i)
            nodes.push_back({l, i});
    const int N = static_cast<int>(nodes.size());

    auto where = [&](NodeRef r) { return std::to_string(r.level) + ":" + std::to_string(r.index); };

    for (int l = 0; l <= d; ++l)
        for (int i = 0; i < lat.size(l); ++i) {
            const Subspace& w = lat.element({l, i});
            if (!(Subspace::span(F, n, w.data(), w.dim()) == w))
                throw Error(Errc::IdentityViolation, "basis of " + where({l, i}) + " is not canonical");
            // join of the atoms spanned by the basis rows
            Subspace acc = Subspace::zero(n);
            for (int k = 0; k < w.dim(); ++k) {
                const Subspace a = Subspace::span(F, n, std::vector<Elem>(w.row(k).begin(), w.row(k).end()), 1);
                if (!lat.locate(a) || lat.locate(a)->level != 1)
                    throw Error(Errc::IdentityViolation, "row of " + where({l, i}) + " is not an atom");
                acc = join(lat, acc, a);
            }
            if (!(acc == w))
                throw Error(Errc::IdentityViolation, where({l, i}) + " is not the join of its atoms");
        }

    std::vector<std::pair<int, int>> pairs;
    const bool exhaustive = N <= limit;
    if (exhaustive) {
        for (int i = 0; i < N; ++i)
            for (int k = i; k < N; ++k)
                pairs.emplace_back(i, k);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int s = 0; s < samples; ++s)
            pairs.emplace_back(pick(rng), pick(rng));
    }

    long modular = 0, atom_pairs = 0, cover_forward = 0, cover_back = 0;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : modular, atom_pairs, cover_forward, cover_back)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const NodeRef ru = nodes[pairs[p].first];
        const NodeRef rw = nodes[pairs[p].second];
        const NodeRef rx = nodes[(pairs[p].first + pairs[p].second + 1) % N];
        const Subspace& u = lat.element(ru);
        const Subspace& w = lat.element(rw);
        const Subspace& x = lat.element(rx);
        const Subspace m = meet(lat, u, w);
        const Subspace j = join(lat, u, w);
        std::string bad;
        if (!lat.locate(m) || !lat.locate(j))
            bad = "meet or join leaves the lattice";
        else if (!(meet(lat, w, u) == m) || !(join(lat, w, u) == j) || !(meet(lat, u, u) == u) ||
                 !(join(lat, u, u) == u))
            bad = "meet/join not commutative or idempotent";
        else if (!(meet(lat, m, x) == meet(lat, u, meet(lat, w, x))) || !(join(lat, j, x) == join(lat, u, join(lat, w, x))))
            bad = "meet/join not associative with " + where(rx);
        else if (leq(lat, u, w) != (m == u) || leq(lat, u, w) != (j == w))
            bad = "order disagrees with meet/join";
        if (bad.empty() && !j.is_top()) {
            if (rank(lat, u) + rank(lat, w) != rank(lat, j) + rank(lat, m))
                bad = "rank identity";
            else
                ++modular;
        }
        if (bad.empty() && ru.level == 1 && rw.level == 1 && !(u == w) && !j.is_top()) {
            if (rank(lat, j) != 2)
                bad = "join of distinct atoms has rank " + std::to_string(rank(lat, j));
            else
                ++atom_pairs;
        }
        if (bad.empty() && ru.level < d && rw.level < d) {
            if (covers(lat, j, u) && covers(lat, j, w)) {
                if (!covers(lat, u, m) || !covers(lat, w, m))
                    bad = "cover property (join covers both)";
                else
                    ++cover_forward;
            }
            if (bad.empty() && covers(lat, u, m) && covers(lat, w, m) && !j.is_top()) {
                if (!covers(lat, j, u) || !covers(lat, j, w))
                    bad = "cover property (both cover the meet)";
                else
                    ++cover_back;
            }
        }
        if (!bad.empty()) {
#pragma omp critical
            if (failure.empty())
                failure = bad + " at (" + where(ru) + ", " + where(rw) + ")";
        }
    }
    if (!failure.empty())
        throw Error(Errc::IdentityViolation, failure);
    return {{"elements", N},           {"pairs", pairs.size()},     {"exhaustive", exhaustive},
            {"rank_identity", modular}, {"atom_joins", atom_pairs}, {"covers_from_join", cover_forward},
            {"covers_from_meet", cover_back}};
}

nlohmann::json subspace_to_json(const Subspace& s)
{
    if (s.is_top())
        return "top";
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < s.dim(); ++i)
        rows.push_back(std::vector<int>(s.row(i).begin(), s.row(i).end()));
    return rows;
}

nlohmann::json to_json(const PolarLattice& lat)
{
    const auto& sp = lat.space();
    nlohmann::json doc;
    doc["family"] = std::string(forms::family_tag(sp.family()));
    doc["d"] = sp.d();
    doc["r"] = sp.r();
    doc["q"] = sp.q();
    doc["n"] = sp.n();
    doc["field"] = {{"p", sp.field().p()}, {"k", sp.field().k()}, {"modulus", sp.field().modulus()}};
    nlohmann::json levels = nlohmann::json::array();
    for (int l = 0; l <= lat.d(); ++l) {
        nlohmann::json lvl = nlohmann::json::array();
        for (const auto& s : lat.level(l))
            lvl.push_back(subspace_to_json(s));
        levels.push_back(std::move(lvl));
    }
    doc["levels"] = std::move(levels);
    return doc;
}

PolarLattice from_json(const nlohmann::json& doc)
{
    try {
        const auto family = forms::parse_family(doc.at("family").get<std::string>());
        if (!family)
            throw Error(Errc::BadInput, "unknown family");
        auto space = forms::make_space(*family, doc.at("d").get<int>(), doc.at("r").get<int>());
        const auto& F = space.field();
        const auto& fj = doc.at("field");
        if (fj.at("p").get<int>() != F.p() || fj.at("k").get<int>() != F.k() ||
            fj.at("modulus").get<std::vector<int>>() != F.modulus())
            throw Error(Errc::BadInput, "field description does not match the standard field");
        const int d = space.d();
        const int n = space.n();
        const auto& lv = doc.at("levels");
        if (static_cast<int>(lv.size()) != d + 1)
            throw Error(Errc::BadInput, "expected " + std::to_string(d + 1) + " levels");

        std::vector<std::vector<Subspace>> levels(d + 1);
        for (int l = 0; l <= d; ++l) {
            for (const auto& rows : lv[l]) {
                std::vector<Elem> flat;
                for (const auto& row : rows) {
                    auto r = row.get<std::vector<int>>();
                    if (static_cast<int>(r.size()) != n)
                        throw Error(Errc::BadInput, "row length differs from n");
                    for (int x : r) {
                        if (x < 0 || x >= F.q())
                            throw Error(Errc::BadInput, "entry outside the field");
                        flat.push_back(static_cast<Elem>(x));
                    }
                }
                Subspace s = Subspace::from_canonical(n, flat);
                if (s.dim() != l || !(Subspace::span(F, n, flat, l) == s))
                    throw Error(Errc::BadInput, "basis is not canonical or has the wrong dimension");
                if (!forms::is_isotropic(space, s))
                    throw Error(Errc::BadInput, "subspace is not isotropic");
                levels[l].push_back(std::move(s));
            }
            if (!std::is_sorted(levels[l].begin(), levels[l].end()) ||
                std::adjacent_find(levels[l].begin(), levels[l].end()) != levels[l].end())
                throw Error(Errc::BadInput, "level " + std::to_string(l) + " is not sorted and duplicate-free");
        }
        // The stored levels must be exactly the isotropic subspaces; regrow
        // the cover structure and compare.
        auto [grown, down] = grow(space, d + 1);
        if (grown != levels)
            throw Error(Errc::BadInput, "levels are not the complete set of isotropic subspaces");
        return link(std::move(space), std::move(levels), std::move(down));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadInput, e.what());
    }
}

} // namespace dualpolar::lattice
