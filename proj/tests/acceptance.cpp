#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include <Eigen/Dense>

#include "sfw/index/induced.hpp"
#include "sfw/io/verify.hpp"
#include "sfw/perm/named_groups.hpp"

using namespace sfw;
using namespace sfw::verify_detail;

namespace {

constexpr double kNormTol = 1e-6;
constexpr double kCharTol = 1e-9;
constexpr double kSpectrumTol = 1e-9;
constexpr double kThetaSeconds = 30.0;
constexpr double kVerifySeconds = 60.0;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void check(const std::string& witness, const std::string& where) {
        if (!witness.empty()) fail(where + ": " + witness);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Largest eigenvalue of the full adjacency matrix, squared.
double eigen_norm_squared(const BipartiteMultiGraph& g) {
    const std::size_t n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (const auto& e : g.edges) {
        long i = static_cast<long>(e.even), j = static_cast<long>(g.even.size() + e.odd);
        a(i, j) = a(j, i) = static_cast<double>(e.multiplicity);
    }
    double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().cwiseAbs().maxCoeff();
    return top * top;
}

std::set<std::pair<std::string, std::string>> edge_labels(const BipartiteMultiGraph& g) {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& e : g.edges) s.insert({g.even[e.even].label, g.odd[e.odd].label});
    return s;
}

const CorpusLoad& corpus() {
    static const CorpusLoad c = load_corpus(SFW_TEST_CORPUS);
    return c;
}

Outcome theta_consistency_criterion() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : corpus().entries)
        for (std::size_t k : {1u, 2u}) o.check(theta_consistency(e, k, 50, default_config()), e.name);
    double dt = seconds_since(t0);
    if (dt >= kThetaSeconds) o.fail("took " + std::to_string(dt) + " s");
    if (o.ok) o.detail = std::to_string(corpus().entries.size()) + " pairs, k=1,2, " + std::to_string(dt) + " s";
    return o;
}

Outcome commutant_criterion() {
    Outcome o;
    std::size_t compared = 0, skipped = 0;
    for (const auto& e : corpus().entries)
        for (std::size_t k : {1u, 2u})
            for (const PermGroup* g0 : {&e.group, &e.subgroup})
                for (CommutantSide side : {CommutantSide::InG, CommutantSide::InH}) {
                    long long fast = relative_commutant_dim(e.group, *g0, e.subgroup, k, side);
                    long long slow = 0;
                    try {
                        slow = brute_force_commutant_dim(e.group, *g0, e.subgroup, k, side);
                    } catch (const ResourceLimitError&) {
                        if (k == 1) o.fail(e.name + ": oracle cap hit at k=1");
                        ++skipped;
                        continue;
                    }
                    ++compared;
                    if (fast != slow)
                        o.fail(e.name + " k=" + std::to_string(k) + ": " + std::to_string(fast) + " vs " +
                               std::to_string(slow));
                }
    if (o.ok) o.detail = std::to_string(compared) + " comparisons, " + std::to_string(skipped) + " over the oracle cap";
    return o;
}

Outcome graph_criterion() {
    Outcome o;
    for (const auto& e : corpus().entries) {
        const double index = static_cast<double>(e.group.order()) / static_cast<double>(e.subgroup.order());
        for (bool dual : {false, true}) {
            auto gr = dual ? dual_principal_graph(e.group, e.subgroup) : principal_graph(e.group, e.subgroup);
            if (std::abs(gr.norm_squared() - index) > kNormTol || std::abs(eigen_norm_squared(gr) - index) > kNormTol)
                o.fail(e.name + (dual ? " dual" : " principal") + ": norm^2 " + std::to_string(gr.norm_squared()));
        }
    }
    PermGroup s3 = named::symmetric(3), h = group_from_cycles(3, {"(0 1)"});
    auto pg = principal_graph(s3, h);
    std::set<std::pair<std::string, std::string>> want_p{
        {"K0.0", "H.0"}, {"K1.0", "H.0"}, {"K1.0", "H.1"}, {"K0.1", "H.1"}};
    if (pg.vertex_count() != 5 || edge_labels(pg) != want_p) o.fail("principal graph of (S3, <(0 1)>) is not A5");
    auto dg = dual_principal_graph(s3, h);
    std::set<std::pair<std::string, std::string>> want_d{{"G.0", "H.0"}, {"G.2", "H.0"}, {"G.2", "H.1"}, {"G.1", "H.1"}};
    if (dg.vertex_count() != 5 || edge_labels(dg) != want_d) o.fail("dual graph of (S3, <(0 1)>) is not A5");
    for (const auto& ed : pg.edges)
        if (ed.multiplicity != 1) o.fail("A5 edge with multiplicity " + std::to_string(ed.multiplicity));
    if (o.ok) o.detail = "tol 1e-6, A5 for both graphs of (S3, <(0 1)>)";
    return o;
}

Outcome pimsner_popa_criterion() {
    Outcome o;
    for (const auto& e : corpus().entries) o.check(pimsner_popa(e, 100), e.name);
    if (o.ok) o.detail = "100 elements per pair, exact";
    return o;
}

Outcome extension_criterion() {
    Outcome o;
    ExtensionResult ext = extension_from_full_out(named::alternating(4));
    std::map<std::size_t, std::size_t> hist;
    for (const auto& p : ext.realized.elements()) ++hist[p.order()];
    std::map<std::size_t, std::size_t> want{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    if (ext.realized.order() != 24) o.fail("|H| = " + std::to_string(ext.realized.order()));
    if (ext.index() != 2 || ext.gamma().order() != 2) o.fail("[H:G] = " + std::to_string(ext.index()));
    if (hist != want) o.fail("element-order histogram differs");
    if (!ext.outer) o.fail("outerness proxy is false");
    CocycleReport cr = verify_cocycle(ext.cocycle);
    if (!cr.ok) o.fail("cocycle: " + cr.message);
    CrossedProductReport cp = crossed_product_check(ext.realized, ext.inner, ext.inner, RepRule::LexMin);
    if (!cp.ok) o.fail("crossed product: " + cp.message);
    if (o.ok) o.detail = "|H|=24, [H:G]=2, histogram {1:1,2:9,3:8,4:6}";
    return o;
}

Outcome crossed_product_criterion() {
    Outcome o;
    PermGroup s3 = named::symmetric(3), a3 = named::alternating(3);
    CrossedProductReport r = crossed_product_check(s3, a3, a3, RepRule::LexMin);
    if (!r.ok || r.pairs_checked != 36) o.fail("(S3, A3, A3): " + r.message + " pairs " + std::to_string(r.pairs_checked));
    const CorpusEntry* wr = nullptr;
    for (const auto& e : corpus().entries)
        if (e.group.order() == 24 && e.subgroup.order() == 8 && e.group.degree() == 6) wr = &e;
    if (!wr) {
        o.fail("wreath entry missing from the corpus");
    } else {
        CrossedProductReport w = crossed_product_check(wr->group, wr->subgroup, wr->subgroup, RepRule::LexMin);
        if (!w.ok || w.pairs_checked != 24 * 24) o.fail("wreath: " + w.message);
    }
    if (o.ok) o.detail = "36 pairs for (S3, A3, A3), 576 for the wreath product over its base";
    return o;
}

Outcome arithmetic_criterion() {
    Outcome o;
    const std::pair<double, std::uint64_t> discrete[] = {{1.0, 3}, {2.0, 4}, {3.0, 6}};
    for (auto [x, n] : discrete) {
        auto v = jones_spectrum_query(x, kSpectrumTol);
        if (v.kind != SpectrumVerdict::Kind::Discrete || v.n != n) o.fail("spectrum " + std::to_string(x));
    }
    if (jones_spectrum_query(3.5, kSpectrumTol).kind != SpectrumVerdict::Kind::NotInSpectrum) o.fail("spectrum 3.5");

    struct VCase {
        VirtualEmbeddingSpec spec;
        std::uint64_t expect;
    };
    // t times the sum of s_i [H : gamma_i(K_i)]
    const VCase vcases[] = {{{1, {{1, 1, 1}}}, 1 * 1}, {{2, {{1, 2, 5}}}, 2 * 5}, {{3, {{1, 1, 2}, {1, 2, 3}}}, 3 * (2 + 3)}};
    for (const auto& c : vcases)
        if (virtual_index(c.spec) != c.expect) o.fail("virtual index for t=" + std::to_string(c.spec.t));
    try {
        virtual_index({3, {{1, 1, 2}}});
        o.fail("constraint violation accepted");
    } catch (const PreconditionError&) {
    }

    std::size_t chains = 0;
    for (const auto& e : corpus().entries) {
        for (const PermGroup& k : {normal_core(e.group, e.subgroup), PermGroup::generate(e.group.degree(), {})}) {
            const std::size_t gk = e.group.order() / k.order(), gh = e.group.order() / e.subgroup.order(),
                              hk = e.subgroup.order() / k.order();
            if (gk != gh * hk) o.fail(e.name + ": Lagrange equality fails");
            if (!index_chain_check(double(gk), double(gh), double(hk))) o.fail(e.name + ": chain check fails");
            ++chains;
        }
    }
    if (o.ok) o.detail = "spectrum tol 1e-9, 3 virtual examples, " + std::to_string(chains) + " chains";
    return o;
}

Outcome character_criterion() {
    Outcome o;
    Config cfg;
    cfg.tol.character = kCharTol;
    cfg.tol.multiplicity = 1e-6;
    for (const auto& e : corpus().entries) o.check(character_laws(e.group, e.subgroup, cfg), e.name);
    if (o.ok) o.detail = "orthogonality tol 1e-9, rounding tol 1e-6";
    return o;
}

Outcome induced_criterion() {
    Outcome o;
    PermGroup s3 = named::symmetric(3), a3 = named::alternating(3);
    GroupHom inc = hom_from_generator_images(a3, a3, std::vector<Permutation>(a3.generators().begin(), a3.generators().end()));
    try {
        InducedHomomorphism<long long> ind(s3, a3, inc, trivial_rep<long long>(a3));
        if (!ind.verify()) o.fail("verification on generators fails");
        auto one = GroupAlgebraMatrix<long long>::identity(a3, ind.size());
        if (!detail::matrix_close(ind(PermGroup::identity()), one, 0.0)) o.fail("Ind(e) is not the identity");
        if (ind.size() != 2) o.fail("block size " + std::to_string(ind.size()));
        for (const auto& gen : s3.generators()) {
            auto m = ind(gen);
            if (!detail::matrix_close(m * m.adjoint(), one, 0.0)) o.fail("Ind(" + gen.to_cycles() + ") is not unitary");
        }
    } catch (const Error& ex) {
        o.fail(ex.what());
    }
    if (o.ok) o.detail = "(S3, A3, inclusion, trivial rho), 2x2 over C[A3]";
    return o;
}

Outcome verify_all_criterion() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport r = run_suite("all", load_corpus(SFW_TEST_CORPUS));
    double dt = seconds_since(t0);
    if (!r.ok()) o.fail(std::to_string(r.failures.size()) + " failures, first " + r.failures.front().id);
    if (dt >= kVerifySeconds) o.fail("took " + std::to_string(dt) + " s");
    if (o.ok) o.detail = std::to_string(r.cases) + " cases, 0 failures, " + std::to_string(dt) + " s";
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"theta consistency", theta_consistency_criterion},
        {"commutant oracle equivalence", commutant_criterion},
        {"graph index law", graph_criterion},
        {"Pimsner-Popa reassembly", pimsner_popa_criterion},
        {"extension pipeline", extension_criterion},
        {"crossed product decomposition", crossed_product_criterion},
        {"index arithmetic", arithmetic_criterion},
        {"character laws", character_criterion},
        {"induced homomorphism", induced_criterion},
        {"verify all", verify_all_criterion},
    };
    int failed = 0, n = 0;
    if (!corpus().errors.empty()) std::printf("corpus error: %s\n", corpus().errors.front().second.c_str());
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::printf("%-4s %2d %-30s %s\n", o.ok ? "PASS" : "FAIL", ++n, name, o.detail.c_str());
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
