#include <gtest/gtest.h>

#include <complex>

#include "sfw/cocycle/extension.hpp"
#include "sfw/perm/named_groups.hpp"

using namespace sfw;

namespace {

Cocycle2<GroupValues> trivial_group_cocycle(const PermGroup& gamma, const PermGroup& values) {
    return {gamma, GroupValues{values}, std::vector<Permutation>(gamma.order(), Permutation::identity(values.order())),
            std::vector<Elem>(gamma.order() * gamma.order(), PermGroup::identity())};
}

Cocycle2<CircleValues> constant_scalar_cocycle(const PermGroup& gamma, std::complex<double> c) {
    return {gamma, CircleValues{}, std::vector<CircleValues::Aut>(gamma.order()),
            std::vector<std::complex<double>>(gamma.order() * gamma.order(), c)};
}

std::vector<PermGroup> centreless_corpus() {
    return {named::symmetric(3), named::symmetric(4), named::alternating(4), named::alternating(5)};
}

}  // namespace

TEST(Cocycle, TrivialCocycleVerifies) {
    auto c = trivial_group_cocycle(named::cyclic(3), named::symmetric(3));
    EXPECT_TRUE(verify_cocycle(c).ok);
    EXPECT_TRUE(c.is_normalized());
}

TEST(Cocycle, TrivialCocycleWithHonestAction) {
    // Z2 acting on A3 by conjugation with (0 1): α is a homomorphism, ω ≡ e.
    PermGroup a3 = named::alternating(3);
    PermGroup z2 = named::cyclic(2);
    auto c = trivial_group_cocycle(z2, a3);
    c.alpha[1] = automorphism_from_normalizer(a3, Permutation::from_cycles(3, "(0 1)"));
    EXPECT_TRUE(verify_cocycle(c).ok);
}

TEST(Cocycle, PerturbedGroupEntryFails) {
    PermGroup s3 = named::symmetric(3);
    auto c = trivial_group_cocycle(named::cyclic(3), s3);
    c(1, 2) = s3.index_of(Permutation::from_cycles(3, "(0 1)"));
    CocycleReport r = verify_cocycle(c);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.item, 2);
    EXPECT_EQ(r.witness, (std::vector<Elem>{1, 2}));
}

TEST(Cocycle, PerturbedScalarEntryReportsTriple) {
    auto c = constant_scalar_cocycle(named::cyclic(3), 1.0);
    c(1, 2) = -1.0;
    CocycleReport r = verify_cocycle(c);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.item, 3);
    ASSERT_EQ(r.witness.size(), 3u);
    // Oracle: first triple in lexicographic order touching ω(1,2) unevenly.
    const PermGroup& gm = c.gamma;
    std::vector<Elem> expect;
    for (Elem a = 0; a < 3 && expect.empty(); ++a)
        for (Elem b = 0; b < 3 && expect.empty(); ++b)
            for (Elem d = 0; d < 3 && expect.empty(); ++d) {
                auto lhs = c(b, d) * c(a, gm.mul(b, d));
                auto rhs = c(a, b) * c(gm.mul(a, b), d);
                if (std::abs(lhs - rhs) > 1e-9) expect = {a, b, d};
            }
    EXPECT_EQ(r.witness, expect);
}

TEST(Cocycle, MalformedTablesThrow) {
    auto c = trivial_group_cocycle(named::cyclic(3), named::symmetric(3));
    c.omega.pop_back();
    EXPECT_THROW(verify_cocycle(c), InputError);
    auto d = trivial_group_cocycle(named::cyclic(3), named::symmetric(3));
    d.omega[4] = 99;
    EXPECT_THROW(verify_cocycle(d), InputError);
    auto e = constant_scalar_cocycle(named::cyclic(2), 2.0);
    EXPECT_THROW(verify_cocycle(e), InputError);
    auto f = trivial_group_cocycle(named::cyclic(2), named::symmetric(3));
    f.alpha[1] = Permutation::from_cycles(6, "(1 2)");
    ASSERT_FALSE(is_automorphism(named::symmetric(3), f.alpha[1]));
    EXPECT_THROW(verify_cocycle(f), InputError);
}

TEST(Cocycle, AlphaAtIdentityMustBeIdentity) {
    PermGroup s3 = named::symmetric(3);
    auto c = trivial_group_cocycle(named::cyclic(2), s3);
    c.alpha[0] = inner_automorphism(s3, 1);
    CocycleReport r = verify_cocycle(c);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.item, 1);
}

TEST(Normalize, IdempotentOnNormalizedInput) {
    ExtensionResult ext = extension_from_full_out(named::alternating(4));
    ASSERT_TRUE(ext.cocycle.is_normalized());
    auto n = normalize_cocycle(ext.cocycle);
    EXPECT_EQ(n.omega, ext.cocycle.omega);
    EXPECT_EQ(n.alpha, ext.cocycle.alpha);
    auto t = trivial_group_cocycle(named::cyclic(4), named::symmetric(3));
    EXPECT_EQ(normalize_cocycle(t).omega, t.omega);
}

TEST(Normalize, ConstantScalarCocycle) {
    const std::complex<double> c = std::polar(1.0, 0.7);
    auto in = constant_scalar_cocycle(named::cyclic(4), c);
    ASSERT_TRUE(verify_cocycle(in).ok);
    ASSERT_FALSE(in.is_normalized());
    auto out = normalize_cocycle(in);
    for (const auto& v : out.omega) EXPECT_NEAR(std::abs(v - std::complex<double>(1.0)), 0.0, 1e-12);
    EXPECT_TRUE(out.is_normalized());
}

TEST(Normalize, ScalarCocycleFollowsFormula) {
    // Coboundary of λ on Z3 times a constant: ω(g,h) = c λ_g λ_h / λ_gh.
    PermGroup z3 = named::cyclic(3);
    std::vector<std::complex<double>> lambda{std::polar(1.0, 0.3), std::polar(1.0, 1.1), std::polar(1.0, -0.4)};
    const auto c = std::polar(1.0, 2.0);
    auto in = constant_scalar_cocycle(z3, 1.0);
    for (Elem g = 0; g < 3; ++g)
        for (Elem h = 0; h < 3; ++h) in(g, h) = c * lambda[g] * lambda[h] / lambda[z3.mul(g, h)];
    ASSERT_TRUE(verify_cocycle(in).ok);
    auto out = normalize_cocycle(in);
    for (Elem g = 0; g < 3; ++g)
        for (Elem h = 0; h < 3; ++h)
            EXPECT_NEAR(std::abs(out(g, h) - std::conj(in(0, 0)) * in(g, h)), 0.0, 1e-12);
    EXPECT_TRUE(out.is_normalized());
}

TEST(Normalize, RejectsNonCocycle) {
    PermGroup s3 = named::symmetric(3);
    auto c = trivial_group_cocycle(named::cyclic(3), s3);
    c(1, 2) = 1;
    EXPECT_THROW(normalize_cocycle(c), PreconditionError);
}

TEST(Normalize, LiftCorrectionRestoresNormalization) {
    PermGroup a4 = named::alternating(4);
    ExtensionResult ext = extension_from_full_out(a4);
    const Elem x = a4.index_of(Permutation::from_cycles(4, "(0 1 2)"));
    const Elem y = a4.index_of(Permutation::from_cycles(4, "(0 1)(2 3)"));
    std::vector<Permutation> lifts = ext.lifts;
    lifts[0] = inner_automorphism(a4, x);
    lifts[1] = inner_automorphism(a4, y) * lifts[1];
    auto raw = extension_cocycle(ext, lifts);
    EXPECT_FALSE(raw.is_normalized());
    EXPECT_EQ(verify_cocycle(raw).item, 1);
    EXPECT_TRUE(verify_cocycle(raw, false).ok);
    EXPECT_EQ(raw(0, 0), x);

    auto n = normalize_cocycle(raw);
    EXPECT_TRUE(n.is_normalized());
    EXPECT_TRUE(verify_cocycle(n).ok);
    EXPECT_EQ(n.alpha[0], Permutation::identity(a4.order()));
    // Recompute from the corrected lifts φ'_k = Ad(λ_k) φ_k.
    std::vector<Permutation> corrected = lifts;
    corrected[0] = Permutation::identity(a4.order());
    auto oracle = extension_cocycle(ext, corrected);
    EXPECT_EQ(n.alpha, oracle.alpha);
    EXPECT_EQ(n.omega, oracle.omega);
}

TEST(Extension, A4WithFullOut) {
    PermGroup a4 = named::alternating(4);
    ExtensionResult ext = extension_from_full_out(a4);
    EXPECT_EQ(ext.realized.order(), 24u);
    EXPECT_EQ(ext.index(), 2u);
    EXPECT_EQ(ext.gamma().order(), 2u);
    EXPECT_EQ(order_fingerprint(ext.realized), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
    EXPECT_EQ(order_fingerprint(ext.realized), order_fingerprint(named::symmetric(4)));
    EXPECT_TRUE(ext.outer);
    EXPECT_TRUE(verify_cocycle(ext.cocycle).ok);
    EXPECT_TRUE(ext.cocycle.is_normalized());
}

TEST(Extension, TrivialGammaGivesInner) {
    PermGroup s3 = named::symmetric(3);
    ExtensionResult ext = extension_from_out(s3, std::vector<Permutation>{});
    EXPECT_EQ(ext.index(), 1u);
    EXPECT_EQ(ext.realized.order(), 6u);
    EXPECT_EQ(ext.realized, ext.inner);
    EXPECT_TRUE(verify_cocycle(ext.cocycle).ok);
    auto rep = subfactor_report_from_out(ext);
    EXPECT_EQ(rep.index, 1u);
    EXPECT_TRUE(rep.outerness);
    EXPECT_TRUE(rep.crossed_relations);
}

TEST(Extension, CorpusInvariants) {
    for (const PermGroup& g : centreless_corpus()) {
        AutomorphismData ad = automorphism_group(g);
        ExtensionResult ext = extension_from_full_out(g);
        SCOPED_TRACE(g.order());
        EXPECT_EQ(ext.realized.order(), ad.aut.order());
        EXPECT_EQ(ext.realized.order(), g.order() * ext.gamma().order());
        EXPECT_EQ(ext.gamma().order(), ad.out_order());
        EXPECT_TRUE(verify_cocycle(ext.cocycle).ok);
        EXPECT_TRUE(normalize_cocycle(ext.cocycle).is_normalized());
        EXPECT_TRUE(ext.outer);

        // Short exact sequence: kernel of H -> Γ₀ is exactly Ad(G).
        PermGroup kernel = ext.quotient.map.kernel();
        EXPECT_EQ(kernel, ext.inner);
        EXPECT_TRUE(ext.embedding.is_homomorphism());
        EXPECT_TRUE(ext.embedding.is_injective());
        EXPECT_EQ(ext.embedding.image_group(), kernel);

        // Lifts: lexicographically least in their coset, identity first.
        EXPECT_EQ(ext.lifts[0], Permutation::identity(g.order()));
        for (Elem x = 0; x < ext.realized.order(); ++x)
            EXPECT_LE(ext.lifts[ext.quotient.map(x)], ext.realized.element(x));

        // h_k g h_k^-1 = φ_k(g).
        const PermGroup& h = ext.realized;
        for (Elem k = 0; k < ext.gamma().order(); ++k) {
            Elem hk = h.index_of(ext.lifts[k]);
            for (Elem a = 0; a < g.order(); ++a)
                EXPECT_EQ(h.conj(hk, ext.embedding(a)), ext.embedding(ext.lifts[k][a]));
        }
    }
}

TEST(Extension, A5RealizesS5) {
    ExtensionResult ext = extension_from_full_out(named::alternating(5));
    EXPECT_EQ(ext.index(), 2u);
    EXPECT_EQ(order_fingerprint(ext.realized), order_fingerprint(named::symmetric(5)));
}

TEST(Extension, Errors) {
    EXPECT_THROW(extension_from_full_out(named::z2_wr_z3()), PreconditionError);
    EXPECT_THROW(extension_from_full_out(named::cyclic(3)), PreconditionError);
    PermGroup s3 = named::symmetric(3);
    EXPECT_THROW(extension_from_out(s3, {Permutation::from_cycles(6, "(1 2)")}), PreconditionError);
    AutomorphismData ad = automorphism_group(named::alternating(4));
    EXPECT_THROW(extension_from_out(named::alternating(4), ad, {5}), InputError);
    EXPECT_THROW(extension_from_out(s3, ad, {0}), PreconditionError);
    Config small;
    small.aut_cap = 10;
    EXPECT_THROW(extension_from_full_out(named::alternating(4), small), ResourceLimitError);
}

TEST(Extension, ReportA4) {
    auto rep = subfactor_report_from_out(extension_from_full_out(named::alternating(4)));
    EXPECT_EQ(rep.index, 2u);
    EXPECT_TRUE(rep.outerness);
    EXPECT_TRUE(rep.crossed_relations);
}

TEST(Extension, SwapOnSymmetricSquare) {
    PermGroup g = named::symmetric_square(4);
    ASSERT_EQ(g.order(), 576u);
    Permutation swap = automorphism_from_normalizer(g, named::factor_swap(4));
    ExtensionResult ext = extension_from_out(g, {swap});
    auto rep = subfactor_report_from_out(ext);
    EXPECT_EQ(rep.index, 2u);
    EXPECT_TRUE(rep.outerness);
    EXPECT_TRUE(rep.crossed_relations);
    EXPECT_TRUE(verify_cocycle(ext.cocycle).ok);
    // Oracle: the swap is outer iff no element of G conjugates like it.
    for (Elem a = 0; a < g.order(); ++a) EXPECT_NE(inner_automorphism(g, a), swap);
}

TEST(Extension, NonOuterGeneratorIsHarmless) {
    // An inner generator adds nothing: Γ₀ stays trivial.
    PermGroup s4 = named::symmetric(4);
    ExtensionResult ext = extension_from_out(s4, {inner_automorphism(s4, 5)});
    EXPECT_EQ(ext.index(), 1u);
}

TEST(Extension, JsonShape) {
    ExtensionResult ext = extension_from_full_out(named::alternating(4));
    auto j = extension_json(ext);
    EXPECT_EQ(j["order"], 24);
    EXPECT_EQ(j["index"], 2);
    EXPECT_EQ(j["fingerprint"]["2"], 9);
    EXPECT_EQ(j["cocycle"]["quotient_order"], 2);
    EXPECT_EQ(j["cocycle"]["values"].size(), 4u);
    auto back = cocycle_from_json(j["cocycle"], ext.gamma(), ext.base, ext.cocycle.alpha);
    EXPECT_EQ(back.omega, ext.cocycle.omega);
    auto bad = j["cocycle"];
    bad["values"].erase(0);
    EXPECT_THROW(cocycle_from_json(bad, ext.gamma(), ext.base, ext.cocycle.alpha), InputError);
}

TEST(CrossedProduct, S3OverA3) {
    PermGroup s3 = named::symmetric(3), a3 = named::alternating(3);
    for (RepRule rule : {RepRule::LexMin, RepRule::LexMaxNonIdentity}) {
        CrossedProductReport r = crossed_product_check(s3, a3, a3, rule);
        EXPECT_TRUE(r.ok) << r.message;
        EXPECT_EQ(r.pairs_checked, 36u);
        EXPECT_TRUE(r.cocycle_ok);
        EXPECT_TRUE(r.restriction_ok);
    }
}

TEST(CrossedProduct, WreathOverBase) {
    PermGroup w = named::z2_wr_z3(), b = named::z2_wr_z3_base();
    for (RepRule rule : {RepRule::LexMin, RepRule::LexMaxNonIdentity}) {
        CrossedProductReport r = crossed_product_check(w, b, b, rule);
        EXPECT_TRUE(r.ok) << r.message;
        EXPECT_EQ(r.pairs_checked, w.order() * w.order());
    }
}

TEST(CrossedProduct, WholeGroupAsK) {
    PermGroup s3 = named::symmetric(3);
    CrossedProductReport r = crossed_product_check(s3, s3, s3);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.pairs_checked, 36u);
}

TEST(CrossedProduct, NormalCoreOfCorpus) {
    struct C {
        PermGroup g, h;
    };
    std::vector<C> cases{{named::symmetric(4), named::dihedral8()},
                         {named::symmetric(4), group_from_cycles(4, {"(0 1)", "(0 1 2)"})},
                         {named::alternating(4), named::klein4()},
                         {named::symmetric(3), group_from_cycles(3, {"(0 1)"})}};
    for (const auto& c : cases) {
        PermGroup k = normal_core(c.g, c.h);
        for (RepRule rule : {RepRule::LexMin, RepRule::LexMaxNonIdentity}) {
            CrossedProductReport r = crossed_product_check(c.g, k, c.h, rule);
            EXPECT_TRUE(r.ok) << r.message;
            EXPECT_EQ(r.pairs_checked, c.g.order() * c.g.order());
        }
    }
}

TEST(CrossedProduct, RealizedExtensionOverImage) {
    ExtensionResult ext = extension_from_full_out(named::alternating(4));
    for (const PermGroup& mid : {ext.inner, ext.realized}) {
        CrossedProductReport r = crossed_product_check(ext.realized, ext.inner, mid);
        EXPECT_TRUE(r.ok) << r.message;
        EXPECT_EQ(r.pairs_checked, 24u * 24u);
    }
}

TEST(CrossedProduct, Errors) {
    PermGroup s3 = named::symmetric(3);
    PermGroup t = group_from_cycles(3, {"(0 1)"});
    EXPECT_THROW(crossed_product_check(s3, t, t), PreconditionError);
    EXPECT_THROW(crossed_product_check(s3, named::alternating(3), t), PreconditionError);
}
