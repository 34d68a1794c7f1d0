#include "dualpolar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "dualpolar/frames.hpp"
#include "dualpolar/norton.hpp"

namespace dualpolar::verify {

std::vector<InstanceSpec> default_matrix()
{
    using F = forms::Family;
    return {{F::C, 2, 2},        {F::C, 3, 2},          {F::B, 2, 3},         {F::D, 3, 2},
            {F::TwistedD, 2, 2}, {F::UnitaryEven, 2, 2}, {F::UnitaryOdd, 2, 2}};
}

BigInt predicted_vertex_count(const InstanceSpec& spec)
{
    if (spec.d < 2)
        throw Error(Errc::BadParameters, "d must be at least 2");
    return qseries::a_closed(0, spec.d, qseries::QBase::of(spec.family, spec.r));
}

std::string_view status_name(Status s) noexcept
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return "?";
}

const std::vector<std::string>& check_ids()
{
    static const std::vector<std::string> ids{"enumeration",        "lattice_laws",     "counting",
                                              "distance_regularity", "spectrum",         "eigenvalue_series",
                                              "filtration_laplacian", "tight_frames",    "frame_expansion",
                                              "norton",             "qseries"};
    return ids;
}

bool VerificationReport::ok() const
{
    for (const auto& c : checks)
        if (c.status == Status::Fail)
            return false;
    return true;
}

const CheckRecord& VerificationReport::check(std::string_view id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return c;
    throw Error(Errc::BadParameters, "no check named " + std::string(id));
}

nlohmann::json VerificationReport::to_json(bool timings) const
{
    nlohmann::json out;
    out["instance"] = spec.name();
    out["parameters"] = parameters;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j;
        j["id"] = c.id;
        j["title"] = c.title;
        j["status"] = std::string(status_name(c.status));
        if (!c.reason.empty())
            j["reason"] = c.reason;
        j["data"] = c.data;
        if (timings)
            j["seconds"] = c.seconds;
        arr.push_back(std::move(j));
    }
    out["checks"] = std::move(arr);
    out["ok"] = ok();
    return out;
}

namespace {

nlohmann::json rationals(const std::vector<Rational>& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

std::string half_string(int twice)
{
    return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

struct State {
    std::shared_ptr<const lattice::PolarLattice> lat;
    std::optional<scheme::DualPolarGraph> graph;
    std::optional<IntMatrix> L;
    std::optional<spectral::SpectralDecomposition> dec;
    std::optional<qseries::EigenvalueTable> table;
    std::optional<Rational> lambda1;
};

class Runner {
public:
    explicit Runner(VerificationReport& report) : report_(report) {}

    void run(const std::string& id, const std::string& title, const std::function<nlohmann::json()>& body)
    {
        CheckRecord rec;
        rec.id = id;
        rec.title = title;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rec.data = body();
            rec.status = Status::Pass;
        } catch (const std::exception& e) {
            rec.status = Status::Fail;
            rec.reason = e.what();
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(std::move(rec));
    }

private:
    VerificationReport& report_;
};

template <class T>
const T& need(const std::optional<T>& v, const char* what)
{
    if (!v)
        throw Error(Errc::BadParameters, std::string("unavailable because the ") + what + " check failed");
    return *v;
}

nlohmann::json check_enumeration(const State& st)
{
    const auto& lat = *st.lat;
    const int d = lat.d();
    const auto base = qseries::QBase::of(lat.space());
    nlohmann::json levels = nlohmann::json::array();
    for (int l = 0; l <= d; ++l) {
        const BigInt closed = qseries::bcn_closed(d, base, 0, 0, l, 0);
        if (closed != lat.size(l))
            throw Error(Errc::CountMismatch, "level " + std::to_string(l) + ": " + std::to_string(lat.size(l)) +
                                                 " subspaces, closed form " + closed.get_str());
        levels.push_back(lat.size(l));
    }
    const BigInt a0 = qseries::a_closed(0, d, base);
    if (a0 != lat.vertex_count())
        throw Error(Errc::CountMismatch, "|X| differs from a_0");
    if (lat.size(d + 1) != 1 || !lat.element(lat.top()).is_top() || !lat.element(lat.bottom()).is_zero())
        throw Error(Errc::CountMismatch, "sentinel levels are malformed");
    const int witt = lattice::witt_index_check(lat.space());
    return {{"level_sizes", levels}, {"vertices", lat.vertex_count()}, {"witt_index", witt}};
}

nlohmann::json check_counting(const State& st, const Options& opt)
{
    const auto& lat = *st.lat;
    const int d = lat.d();
    const auto a = lattice::a_counts(lat);

    std::vector<lattice::NodeRef> pool;
    for (int l = 0; l <= d; ++l)
        for (int i = 0; i < lat.size(l); ++i)
            pool.push_back({l, i});
    std::vector<lattice::NodeRef> chosen;
    if (static_cast<int>(pool.size()) <= opt.base_spaces) {
        chosen = pool;
    } else {
        // one W from every level, the rest drawn with a fixed seed
        for (int l = 0; l <= d; ++l)
            chosen.push_back({l, 0});
        std::mt19937_64 rng(opt.seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (const auto& r : pool) {
            if (static_cast<int>(chosen.size()) >= opt.base_spaces)
                break;
            if (std::find(chosen.begin(), chosen.end(), r) == chosen.end())
                chosen.push_back(r);
        }
    }
    long compared = 0;
    for (const auto& r : chosen)
        for (const auto& e : lattice::bcn_profile(lat, lat.element(r))) {
            if (e.enumerated != e.closed)
                throw Error(Errc::CountMismatch, "W at " + std::to_string(r.level) + ":" + std::to_string(r.index) +
                                                     ", (k,l,m) = (" + std::to_string(e.k) + "," + std::to_string(e.l) +
                                                     "," + std::to_string(e.m) + "): counted " +
                                                     e.enumerated.get_str() + ", closed " + e.closed.get_str());
            ++compared;
        }
    nlohmann::json aj = nlohmann::json::array();
    for (const auto& x : a)
        aj.push_back(x.get_str());
    const auto iota = frames::iota_laws_check(lat, opt.lattice_pair_limit, opt.lattice_samples, opt.seed);
    return {{"a", aj}, {"base_spaces", chosen.size()}, {"triples_compared", compared}, {"iota_laws", iota}};
}

nlohmann::json check_distance_regularity(State& st)
{
    auto g = scheme::build_graph(st.lat);
    const auto bfs = scheme::bfs_distances(g);
    if (bfs != g.distances())
        throw Error(Errc::NotDistanceRegular, "path distances differ from d - dim(x ^ y)");
    int maxd = 0;
    for (auto v : g.distances())
        maxd = std::max<int>(maxd, v);
    if (maxd != g.diameter())
        throw Error(Errc::NotDistanceRegular, "largest distance is " + std::to_string(maxd));
    const auto pn = scheme::intersection_numbers(g);
    nlohmann::json k = nlohmann::json::array();
    for (int i = 0; i <= pn.d; ++i)
        k.push_back(pn.k(i));
    nlohmann::json b = nlohmann::json::array(), c = nlohmann::json::array();
    for (int i = 0; i <= pn.d; ++i) {
        b.push_back(i < pn.d ? pn.p(1, i + 1, i) : 0);
        c.push_back(i > 0 ? pn.p(1, i - 1, i) : 0);
    }
    st.L = spectral::laplacian(g);
    st.graph.emplace(std::move(g));
    return {{"valencies", k}, {"b", b}, {"c", c}, {"pairs", static_cast<long>(st.graph->vertex_count()) * st.graph->vertex_count()}};
}

nlohmann::json check_spectrum(State& st)
{
    const auto& L = need(st.L, "distance_regularity");
    const auto mu = spectral::mu_values(st.lat->space());
    for (std::size_t j = 1; j < mu.size(); ++j)
        if (!(mu[j - 1] > mu[j]))
            throw Error(Errc::EigenvalueCollision, "eigenvalues are not strictly decreasing");
    st.dec.emplace(spectral::idempotents(L, mu));
    return {{"mu", rationals(mu)}, {"multiplicities", st.dec->mult}};
}

nlohmann::json check_series(State& st)
{
    const auto& g = need(st.graph, "distance_regularity");
    const auto& dec = need(st.dec, "spectrum");
    st.table.emplace(qseries::eigen_table(st.lat->d(), qseries::QBase::of(st.lat->space())));
    auto res = spectral::eigen_table_check(g, dec, *st.table);
    nlohmann::json p = nlohmann::json::array();
    for (const auto& row : st.table->p)
        p.push_back(rationals(row));
    res["p"] = p;
    res["theta"] = rationals(st.table->theta);
    return res;
}

nlohmann::json check_filtration(const State& st)
{
    const auto& dec = need(st.dec, "spectrum");
    const auto& L = need(st.L, "distance_regularity");
    return {{"filtration", spectral::filtration_check(*st.lat, dec)},
            {"laplacian", spectral::laplacian_identities_check(*st.lat, L)}};
}

nlohmann::json check_frames(State& st)
{
    const auto& g = need(st.graph, "distance_regularity");
    const auto& dec = need(st.dec, "spectrum");
    const auto& table = need(st.table, "eigenvalue_series");
    nlohmann::json levels = nlohmann::json::array();
    for (int j = 0; j <= st.lat->d(); ++j) {
        const auto fc = frames::frame_constant(j, g, dec, table);
        auto rep = frames::verify_tight_frame(j, *st.lat, dec, fc.observed);
        rep["j"] = j;
        rep["lambda"] = to_string(fc.observed);
        if (fc.closed)
            rep["lambda_closed"] = to_string(*fc.closed);
        if (j == 1)
            st.lambda1 = fc.observed;
        levels.push_back(std::move(rep));
    }
    return {{"levels", levels}};
}

nlohmann::json check_expansion(const State& st, const Options& opt)
{
    const auto& dec = need(st.dec, "spectrum");
    const auto& lambda1 = need(st.lambda1, "tight_frames");
    for (int t = 0; t < st.lat->size(1); ++t)
        frames::tau_check(*st.lat, dec, t);
    auto res = frames::pi1_check(*st.lat, dec, lambda1, opt.random_vectors, opt.seed);
    res["atoms"] = st.lat->size(1);
    return res;
}

nlohmann::json check_norton(const State& st, const Options& opt)
{
    const auto& dec = need(st.dec, "spectrum");
    norton::NortonOptions no;
    no.seed = opt.seed;
    auto res = norton::verify_norton(*st.lat, dec, no);
    nlohmann::json sub = nlohmann::json::array();
    sub.push_back({{"name", "equal_atoms"}, {"status", "pass"}});
    sub.push_back({{"name", "top_join"}, {"status", "pass"}});
    if (st.lat->d() >= 3)
        sub.push_back({{"name", "rank2_join"}, {"status", "pass"}});
    else
        sub.push_back({{"name", "rank2_join"},
                       {"status", "skipped"},
                       {"reason", res["rank2_join_skipped"]["reason"]}});
    sub.push_back({{"name", "projection_identity"}, {"status", "pass"}});
    sub.push_back({{"name", "triple_inner_products"}, {"status", "pass"}});
    sub.push_back({{"name", "commutativity_bilinearity"}, {"status", "pass"}});
    res["subchecks"] = sub;
    return res;
}

nlohmann::json check_qseries(const State& st)
{
    const int d = st.lat->d();
    const auto base = qseries::QBase::of(st.lat->space());
    const BigInt q = base.q;
    const int nmax = std::max(8, d + 2);
    long pascal = 0;
    for (int n = 1; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
            const BigInt lhs = qseries::gauss_binom(n, k, q);
            BigInt qk, qnk;
            mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
            mpz_pow_ui(qnk.get_mpz_t(), q.get_mpz_t(), n - k);
            const BigInt r1 = qseries::gauss_binom(n - 1, k - 1, q) + qk * qseries::gauss_binom(n - 1, k, q);
            const BigInt r2 = qnk * qseries::gauss_binom(n - 1, k - 1, q) + qseries::gauss_binom(n - 1, k, q);
            if (lhs != r1 || lhs != r2)
                throw Error(Errc::CountMismatch, "q-Pascal fails at [" + std::to_string(n) + ";" + std::to_string(k) + "]");
            pascal += 2;
        }
    for (int n = 0; n <= 8; ++n)
        if (!qseries::newton_identity_check(n, qseries::QPower{1, base.two_e}, base))
            throw Error(Errc::CountMismatch, "Newton's identity fails at n = " + std::to_string(n));

    long series = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            const Rational u = qseries::u_series(i, j, d, base);
            Rational full = 0;
            for (int t = 0; t <= d; ++t)
                full += qseries::u_term(i, j, d, base, t);
            if (u != full)
                throw Error(Errc::CountMismatch, "truncated and full series differ at (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
            if ((i == 0 || j == 0) && u != 1)
                throw Error(Errc::CountMismatch, "u_0 or u_i(theta_0) is not 1");
            ++series;
        }
    const auto table = qseries::eigen_table(d, base);
    BigInt total = 0;
    for (int i = 0; i <= d; ++i) {
        if (table.eigenvalue(i, 0) != Rational(table.k[i]))
            throw Error(Errc::CountMismatch, "p_i(0) differs from k_i");
        total += table.k[i];
    }
    if (total != st.lat->vertex_count())
        throw Error(Errc::CountMismatch, "valencies do not sum to |X|");
    return {{"pascal_identities", pascal}, {"newton_n_max", 8}, {"series_terms", series}};
}

} // namespace

VerificationReport verify_lattice(std::shared_ptr<const lattice::PolarLattice> lat, const Options& opt)
{
    VerificationReport report;
    const auto& sp = lat->space();
    report.spec = {sp.family(), sp.d(), sp.r()};
    report.parameters = {{"family", std::string(forms::family_tag(sp.family()))},
                         {"d", sp.d()},
                         {"r", sp.r()},
                         {"q", sp.q()},
                         {"n", sp.n()},
                         {"e", half_string(sp.two_e())},
                         {"vertices", lat->vertex_count()}};
    State st;
    st.lat = std::move(lat);
    Runner run(report);
    run.run("enumeration", "level sizes match the closed form", [&] { return check_enumeration(st); });
    run.run("lattice_laws", "lattice laws", [&] {
        return lattice::lattice_laws_check(*st.lat, opt.lattice_pair_limit, opt.lattice_samples, opt.seed);
    });
    run.run("counting", "coatom counts and isotropic subspace counts", [&] { return check_counting(st, opt); });
    run.run("distance_regularity", "distance-regularity", [&] { return check_distance_regularity(st); });
    run.run("spectrum", "Lagrange idempotents", [&] { return check_spectrum(st); });
    run.run("eigenvalue_series", "eigenvalue table from the series", [&] { return check_series(st); });
    run.run("filtration_laplacian", "filtration and Laplacian identities", [&] { return check_filtration(st); });
    run.run("tight_frames", "tight frames", [&] { return check_frames(st); });
    run.run("frame_expansion", "frame expansion of pi_1", [&] { return check_expansion(st, opt); });
    run.run("norton", "Norton product", [&] { return check_norton(st, opt); });
    run.run("qseries", "q-series identities", [&] { return check_qseries(st); });
    return report;
}

VerificationReport verify_instance(const InstanceSpec& spec, const Options& opt)
{
    std::shared_ptr<const lattice::PolarLattice> lat;
    try {
        lat = std::make_shared<const lattice::PolarLattice>(
            lattice::enumerate(forms::make_space(spec.family, spec.d, spec.r)));
    } catch (const std::exception& e) {
        VerificationReport report;
        report.spec = spec;
        for (const auto& id : check_ids())
            report.checks.push_back({id, id, Status::Fail, std::string("enumeration failed: ") + e.what(), {}, 0});
        return report;
    }
    return verify_lattice(std::move(lat), opt);
}

} // namespace dualpolar::verify
