#pragma once

// Brute-force reference for the tests. Shares no code with the library: its
// own field tables (modulus found by a root search), textbook forms
// (Hermitian as sum x_i conj(y_i), quadratic forms as sums of hyperbolic
// pairs), and subspaces held as explicit sets of vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

struct Field {
    int p = 2;
    int k = 1;
    int q = 2;
    std::vector<int> modulus; // low to high, monic
    std::vector<std::vector<int>> add_t, mul_t;

    Field(int p_, int k_) : p(p_), k(k_)
    {
        if (k > 3)
            throw std::invalid_argument("oracle fields stop at degree 3");
        q = 1;
        for (int i = 0; i < k; ++i)
            q *= p;
        // for degree <= 3, irreducible iff no root in GF(p)
        modulus.assign(k + 1, 0);
        modulus[k] = 1;
        if (k > 1) {
            bool found = false;
            for (int code = 0; code < q && !found; ++code) {
                std::vector<int> c(k + 1, 0);
                int t = code;
                for (int i = 0; i < k; ++i, t /= p)
                    c[i] = t % p;
                c[k] = 1;
                bool root = false;
                for (int x = 0; x < p && !root; ++x) {
                    long v = 0;
                    for (int i = k; i >= 0; --i)
                        v = (v * x + c[i]) % p;
                    root = v == 0;
                }
                if (!root) {
                    modulus = c;
                    found = true;
                }
            }
        }
        add_t.assign(q, std::vector<int>(q));
        mul_t.assign(q, std::vector<int>(q));
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                auto da = digits(a), db = digits(b);
                std::vector<int> s(k);
                for (int i = 0; i < k; ++i)
                    s[i] = (da[i] + db[i]) % p;
                add_t[a][b] = code(s);
                std::vector<int> prod(2 * k, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (int deg = 2 * k - 1; deg >= k; --deg) {
                    const int c = prod[deg];
                    if (!c)
                        continue;
                    for (int i = 0; i <= k; ++i)
                        prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
                }
                prod.resize(k);
                mul_t[a][b] = code(prod);
            }
    }

    std::vector<int> digits(int a) const
    {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i, a /= p)
            d[i] = a % p;
        return d;
    }
    int code(const std::vector<int>& d) const
    {
        int c = 0;
        for (int i = k - 1; i >= 0; --i)
            c = c * p + d[i];
        return c;
    }
    int add(int a, int b) const { return add_t[a][b]; }
    int mul(int a, int b) const { return mul_t[a][b]; }
    int neg(int a) const
    {
        for (int b = 0; b < q; ++b)
            if (add(a, b) == 0)
                return b;
        return -1;
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const
    {
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1)
                return b;
        throw std::domain_error("no inverse");
    }
    int pow(int a, long e) const
    {
        int r = 1;
        for (long i = 0; i < e; ++i)
            r = mul(r, a);
        return r;
    }
    int one() const { return 1; }
    int from_int(long v) const { return static_cast<int>(((v % p) + p) % p); }
};

enum class Kind { Symplectic, Orthogonal, Hermitian };

/// Vectors of GF(q)^n are integer codes, digit i = coordinate i.
struct Space {
    Field F;
    int n;
    Kind kind;
    int r = 0;                       // conjugation x -> x^r (Hermitian)
    std::vector<std::vector<int>> Q; // upper triangular quadratic coefficients

    Space(Field f, int n_, Kind k) : F(std::move(f)), n(n_), kind(k), Q(n_, std::vector<int>(n_, 0)) {}

    int size() const
    {
        int s = 1;
        for (int i = 0; i < n; ++i)
            s *= F.q;
        return s;
    }
    std::vector<int> vec(int c) const
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i, c /= F.q)
            v[i] = c % F.q;
        return v;
    }
    int code(const std::vector<int>& v) const
    {
        int c = 0;
        for (int i = n - 1; i >= 0; --i)
            c = c * F.q + v[i];
        return c;
    }
    int axpy(int a, int x, int y) const // a*x + y
    {
        auto vx = vec(x), vy = vec(y);
        for (int i = 0; i < n; ++i)
            vy[i] = F.add(F.mul(a, vx[i]), vy[i]);
        return code(vy);
    }
    int quad(int x) const
    {
        auto v = vec(x);
        int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (Q[i][j])
                    s = F.add(s, F.mul(Q[i][j], F.mul(v[i], v[j])));
        return s;
    }
    int form(int x, int y) const
    {
        auto u = vec(x), v = vec(y);
        int s = 0;
        if (kind == Kind::Symplectic) {
            for (int i = 0; i + 1 < n; i += 2) {
                s = F.add(s, F.mul(u[i], v[i + 1]));
                s = F.sub(s, F.mul(u[i + 1], v[i]));
            }
        } else if (kind == Kind::Hermitian) {
            for (int i = 0; i < n; ++i)
                s = F.add(s, F.mul(u[i], F.pow(v[i], r)));
        } else {
            s = F.sub(F.sub(quad(combine(x, y)), quad(x)), quad(y));
        }
        return s;
    }
    int combine(int x, int y) const { return axpy(1, x, y); }
};

/// Standard textbook spaces. family: "C", "B", "D", "2D", "2A-odd", "2A-even".
inline Space make(const std::string& family, int d, int r)
{
    int p = r, m = 1;
    for (int f = 2; f <= r; ++f)
        if (r % f == 0) {
            p = f;
            break;
        }
    for (int t = p; t < r; t *= p)
        ++m;
    if (family == "C") {
        return Space(Field(p, m), 2 * d, Kind::Symplectic);
    }
    if (family == "2A-odd" || family == "2A-even") {
        Space s(Field(p, 2 * m), family == "2A-odd" ? 2 * d + 1 : 2 * d, Kind::Hermitian);
        s.r = r;
        return s;
    }
    const int extra = family == "B" ? 1 : family == "2D" ? 2 : 0;
    Space s(Field(p, m), 2 * d + extra, Kind::Orthogonal);
    for (int i = 0; i < d; ++i)
        s.Q[2 * i][2 * i + 1] = 1;
    if (family == "B")
        s.Q[2 * d][2 * d] = 1;
    if (family == "2D") {
        // x^2 + a xy + b y^2 with no nonzero root
        for (int a = 0; a < s.F.q; ++a)
            for (int b = 0; b < s.F.q; ++b) {
                bool aniso = true;
                for (int x = 0; x < s.F.q && aniso; ++x)
                    for (int y = 0; y < s.F.q && aniso; ++y)
                        if ((x || y) && s.F.add(s.F.add(s.F.mul(x, x), s.F.mul(a, s.F.mul(x, y))), s.F.mul(b, s.F.mul(y, y))) == 0)
                            aniso = false;
                if (aniso) {
                    s.Q[2 * d][2 * d] = 1;
                    s.Q[2 * d][2 * d + 1] = a;
                    s.Q[2 * d + 1][2 * d + 1] = b;
                    return s;
                }
            }
        throw std::logic_error("no anisotropic binary form");
    }
    return s;
}

using VecSet = std::vector<int>; // sorted codes of every vector in a subspace

inline VecSet extend(const Space& s, const VecSet& span, int v)
{
    std::set<int> out(span.begin(), span.end());
    for (int a = 1; a < s.F.q; ++a)
        for (int w : span)
            out.insert(s.axpy(a, v, w));
    return {out.begin(), out.end()};
}

/// Is span + <v> totally isotropic (quadratic: every vector singular;
/// otherwise the form vanishes on v against all of span and on v itself)?
inline bool still_isotropic(const Space& s, const VecSet& span, int v)
{
    if (s.kind == Kind::Orthogonal) {
        for (int a = 1; a < s.F.q; ++a)
            for (int w : span)
                if (s.quad(s.axpy(a, v, w)) != 0)
                    return false;
        return true;
    }
    if (s.form(v, v) != 0)
        return false;
    for (int w : span)
        if (s.form(v, w) != 0)
            return false;
    return true;
}

/// All totally isotropic subspaces, level by level, as vector sets.
/// Also counts ordered isotropic bases per level for a second tally.
struct Enumeration {
    std::vector<std::vector<VecSet>> levels;
    std::vector<long> ordered_bases;
};

inline Enumeration enumerate(const Space& s, int max_dim)
{
    Enumeration e;
    std::vector<std::set<VecSet>> found(max_dim + 1);
    e.ordered_bases.assign(max_dim + 1, 0);
    found[0].insert(VecSet{0});
    e.ordered_bases[0] = 1;
    std::vector<int> cand;
    for (int v = 1; v < s.size(); ++v)
        if (still_isotropic(s, VecSet{0}, v))
            cand.push_back(v);
    std::function<void(const VecSet&, int)> dfs = [&](const VecSet& span, int dim) {
        if (dim == max_dim)
            return;
        for (int v : cand) {
            if (std::binary_search(span.begin(), span.end(), v))
                continue;
            if (!still_isotropic(s, span, v))
                continue;
            VecSet next = extend(s, span, v);
            ++e.ordered_bases[dim + 1];
            found[dim + 1].insert(next);
            dfs(next, dim + 1);
        }
    };
    dfs(VecSet{0}, 0);
    for (auto& lvl : found)
        e.levels.emplace_back(lvl.begin(), lvl.end());
    return e;
}

/// |GL_k(q)|
inline long gl_order(int k, long q)
{
    long qk = 1, out = 1;
    for (int i = 0; i < k; ++i)
        qk *= q;
    long qi = 1;
    for (int i = 0; i < k; ++i, qi *= q)
        out *= qk - qi;
    return out;
}

/// k-dimensional subspaces of GF(q)^n with no form, counted via vector sets.
inline long count_subspaces(const Field& F, int n, int k)
{
    Space s(F, n, Kind::Symplectic);
    std::set<VecSet> seen;
    std::function<void(const VecSet&, int)> dfs = [&](const VecSet& span, int dim) {
        if (dim == k) {
            seen.insert(span);
            return;
        }
        for (int v = 1; v < s.size(); ++v)
            if (!std::binary_search(span.begin(), span.end(), v))
                dfs(extend(s, span, v), dim + 1);
    };
    dfs(VecSet{0}, 0);
    return static_cast<long>(seen.size());
}

inline long common(const VecSet& a, const VecSet& b)
{
    long c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

/// The dual polar graph on the maximal subspaces, adjacency |x ^ y| = q^{d-1}.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> dist;
    std::vector<std::vector<long>> meet_size; // |x ^ y| as sets of vectors
};

inline Graph graph(const std::vector<VecSet>& maximal, long q, int d)
{
    Graph g;
    g.n = static_cast<int>(maximal.size());
    long target = 1;
    for (int i = 0; i < d - 1; ++i)
        target *= q;
    g.adj.assign(g.n, {});
    g.meet_size.assign(g.n, std::vector<long>(g.n));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            g.meet_size[x][y] = common(maximal[x], maximal[y]);
            if (x != y && g.meet_size[x][y] == target)
                g.adj[x].push_back(y);
        }
    g.dist.assign(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        std::queue<int> bfs;
        bfs.push(s);
        g.dist[s][s] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : g.adj[u])
                if (g.dist[s][v] < 0) {
                    g.dist[s][v] = g.dist[s][u] + 1;
                    bfs.push(v);
                }
        }
    }
    return g;
}

using Mat = std::vector<std::vector<long long>>;

inline Mat adjacency(const Graph& g)
{
    Mat a(g.n, std::vector<long long>(g.n, 0));
    for (int x = 0; x < g.n; ++x)
        for (int y : g.adj[x])
            a[x][y] = 1;
    return a;
}

inline Mat multiply(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size();
    Mat c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline long long trace(const Mat& a)
{
    long long t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        t += a[i][i];
    return t;
}

} // namespace oracle
