#include <gtest/gtest.h>

#include <numbers>

#include "sfw/character/table.hpp"
#include "sfw/perm/cosets.hpp"
#include "sfw/perm/named_groups.hpp"

using namespace sfw;

namespace {

Permutation cyc(std::size_t n, const char* s) { return Permutation::from_cycles(n, s); }

struct Pair {
    const char* name;
    PermGroup g, h;
};

std::vector<Pair> corpus_pairs() {
    return {{"S3/<(0 1)>", named::symmetric(3), group_from_cycles(3, {"(0 1)"})},
            {"S3/A3", named::symmetric(3), named::alternating(3)},
            {"S4/S3", named::symmetric(4), group_from_cycles(4, {"(0 1)", "(0 1 2)"})},
            {"S4/D4", named::symmetric(4), named::dihedral8()},
            {"A4/V4", named::alternating(4), named::klein4()},
            {"Z2wrZ3/base", named::z2_wr_z3(), named::z2_wr_z3_base()}};
}

// Degrees from the abelianization: [G:G'] linear characters, and when only
// one class remains its degree is fixed by Σ d² = |G|.
std::vector<long long> oracle_degrees(const PermGroup& g) {
    std::vector<Permutation> comms;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements()) comms.push_back(a.inverse() * b.inverse() * a * b);
    PermGroup derived = group_from_generators(g.degree(), comms);
    const std::size_t linear = g.order() / derived.order();
    const std::size_t r = conjugacy_classes(g).count();
    std::vector<long long> d(linear, 1);
    if (r == linear + 1) {
        long long rest = static_cast<long long>(g.order() - linear);
        long long s = std::llround(std::sqrt(static_cast<double>(rest)));
        EXPECT_EQ(s * s, rest);
        d.push_back(s);
    } else {
        EXPECT_EQ(r, linear) << "oracle only handles one nonlinear character";
    }
    return d;
}

void expect_orthonormal(const CharacterTable& t, double tol) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            EXPECT_NEAR(std::abs(inner_product(t[a], t[b]).value - Complex(a == b)), 0.0, tol);
    // Column orthogonality: Σ_χ χ(C) conj(χ(D)) = δ_CD |G| / |C|.
    const auto& cc = *t.classes;
    for (std::size_t c = 0; c < cc.count(); ++c)
        for (std::size_t d = 0; d < cc.count(); ++d) {
            Complex s = 0;
            for (const auto& chi : t.irreducibles) s += chi.values[c] * std::conj(chi.values[d]);
            double expect = c == d ? static_cast<double>(t.group().order()) / static_cast<double>(cc.sizes[c]) : 0.0;
            EXPECT_NEAR(std::abs(s - Complex(expect)), 0.0, tol);
        }
}

}  // namespace

TEST(ConjugacyClasses, SizesSumToOrder) {
    for (const PermGroup& g : {named::symmetric(3), named::symmetric(4), named::alternating(4), named::z2_wr_z3(),
                               named::dihedral8(), named::cyclic(5)}) {
        ConjClassData cc = conjugacy_classes(g);
        std::size_t s = 0;
        for (auto x : cc.sizes) s += x;
        EXPECT_EQ(s, g.order());
        EXPECT_EQ(cc.reps[0], PermGroup::identity());
        // Representatives pairwise non-conjugate (brute force).
        for (std::size_t a = 0; a < cc.count(); ++a)
            for (std::size_t b = a + 1; b < cc.count(); ++b)
                for (Elem x = 0; x < g.order(); ++x) EXPECT_NE(g.conj(x, cc.reps[a]), cc.reps[b]);
    }
    EXPECT_EQ(conjugacy_classes(named::symmetric(4)).count(), 5u);
}

TEST(CharacterTable, S3) {
    CharacterTable t = character_table(named::symmetric(3));
    EXPECT_EQ(t.degrees, (std::vector<long long>{1, 1, 2}));
    EXPECT_EQ(t.degrees, oracle_degrees(named::symmetric(3)));
    expect_orthonormal(t, 1e-9);
    for (auto v : t[0].values) EXPECT_NEAR(std::abs(v - 1.0), 0, 1e-12);
    // sign character is -1 on transpositions
    EXPECT_NEAR(t[1].at(cyc(3, "(0 1)")).real(), -1.0, 1e-12);
    EXPECT_NEAR(t[2].at(cyc(3, "(0 1 2)")).real(), -1.0, 1e-12);
}

TEST(CharacterTable, Z4RootsOfUnity) {
    CharacterTable t = character_table(named::cyclic(4));
    EXPECT_EQ(t.degrees, (std::vector<long long>{1, 1, 1, 1}));
    expect_orthonormal(t, 1e-9);
    for (const auto& chi : t.irreducibles)
        for (auto v : chi.values) {
            EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
            EXPECT_NEAR(std::abs(std::pow(v, 4) - 1.0), 0.0, 1e-10);
        }
}

TEST(CharacterTable, A4) {
    CharacterTable t = character_table(named::alternating(4));
    EXPECT_EQ(t.degrees, (std::vector<long long>{1, 1, 1, 3}));
    EXPECT_EQ(t.degrees, oracle_degrees(named::alternating(4)));
    expect_orthonormal(t, 1e-9);
}

TEST(CharacterTable, CorpusDegreesAndOrthogonality) {
    for (const PermGroup& g : {named::symmetric(4), named::dihedral8(), named::z2_wr_z3(), named::klein4(),
                               named::z2_wr_z3_base(), trivial_group(3), named::symmetric(5)}) {
        CharacterTable t = character_table(g);
        long long sq = 0;
        for (auto d : t.degrees) {
            EXPECT_GT(d, 0);
            EXPECT_EQ(static_cast<long long>(g.order()) % d, 0);
            sq += d * d;
        }
        EXPECT_EQ(sq, static_cast<long long>(g.order()));
        EXPECT_EQ(t.size(), conjugacy_classes(g).count());
        expect_orthonormal(t, 1e-9);
        EXPECT_EQ(t.find(trivial_character(g)), 0u);
    }
    EXPECT_EQ(character_table(named::symmetric(4)).degrees, (std::vector<long long>{1, 1, 2, 3, 3}));
}

TEST(CharacterTable, Deterministic) {
    auto a = character_table_json(character_table(named::symmetric(4))).dump();
    auto b = character_table_json(character_table(named::symmetric(4))).dump();
    EXPECT_EQ(a, b);
}

TEST(CharacterTable, ClassCap) {
    Config cfg;
    cfg.class_cap = 3;
    EXPECT_THROW(character_table(named::symmetric(4), cfg), ResourceLimitError);
}

TEST(Restrict, Examples) {
    PermGroup s3 = named::symmetric(3);
    CharacterTable t = character_table(s3);
    PermGroup h = group_from_cycles(3, {"(0 1)"});
    ClassFunction r = restrict(t[1], h);
    CharacterTable th = character_table(h);
    EXPECT_EQ(th.find(r), 1u);  // nontrivial character of Z/2

    ClassFunction r1 = restrict(t[2], trivial_group(3));
    ASSERT_EQ(r1.values.size(), 1u);
    EXPECT_NEAR(r1.values[0].real(), 2.0, 1e-12);

    CharacterTable ta = character_table(named::alternating(3));
    EXPECT_EQ(ta.decompose(restrict(t[2], named::alternating(3))), (std::vector<long long>{0, 1, 1}));
    EXPECT_THROW(restrict(t[0], group_from_cycles(4, {"(0 1)"})), PreconditionError);
}

TEST(Induce, Examples) {
    PermGroup s3 = named::symmetric(3);
    CharacterTable t = character_table(s3);
    PermGroup h = group_from_cycles(3, {"(0 1)"});
    ClassFunction ind = induce(trivial_character(h), s3);
    EXPECT_EQ(t.decompose(ind), (std::vector<long long>{1, 0, 1}));
    EXPECT_NEAR(ind.degree().real(), 3.0, 1e-12);

    ClassFunction same = induce(trivial_character(s3), s3);
    EXPECT_EQ(t.find(same), 0u);

    for (const PermGroup& g : {s3, named::alternating(4), named::dihedral8()}) {
        CharacterTable tg = character_table(g);
        ClassFunction reg = induce(trivial_character(trivial_group(g.degree())), g);
        EXPECT_NEAR(reg.degree().real(), static_cast<double>(g.order()), 1e-9);
        EXPECT_EQ(tg.decompose(reg), tg.degrees);
    }
    EXPECT_THROW(induce(trivial_character(s3), named::alternating(3)), PreconditionError);
}

TEST(InnerProduct, Examples) {
    for (const auto& [name, g, h] : corpus_pairs()) {
        SCOPED_TRACE(name);
        EXPECT_EQ(multiplicity(trivial_character(g), trivial_character(g)), 1);
        EXPECT_EQ(multiplicity(induce(trivial_character(h), g), trivial_character(g)), 1);
    }
    CharacterTable t = character_table(named::symmetric(3));
    InnerProduct ip = inner_product(t[2], t[2]);
    EXPECT_EQ(ip.rounded, 1);
    EXPECT_LT(ip.residual, 1e-9);
    EXPECT_THROW(inner_product(t[0], trivial_character(named::alternating(3))), PreconditionError);
    ClassFunction half = t[0];
    for (auto& v : half.values) v *= 0.5;
    EXPECT_THROW(multiplicity(half, t[0]), InvariantViolation);
}

TEST(PermutationCharacter, Examples) {
    PermGroup s3 = named::symmetric(3);
    ClassFunction pc = permutation_character(s3, natural_action(s3));
    EXPECT_NEAR(pc.at(Permutation::identity(3)).real(), 3.0, 0);
    EXPECT_NEAR(pc.at(cyc(3, "(0 1)")).real(), 1.0, 0);
    EXPECT_NEAR(pc.at(cyc(3, "(0 1 2)")).real(), 0.0, 0);

    ClassFunction one = permutation_character(s3, coset_action(right_coset_data(s3, s3)));
    EXPECT_EQ(character_table(s3).find(one), 0u);

    GroupAction bad{s3, 3, std::vector<Permutation>(6, Permutation::identity(3))};
    bad.images[1] = cyc(3, "(0 1)");
    EXPECT_THROW(permutation_character(s3, bad), InputError);
}

TEST(PermutationCharacter, EqualsInducedTrivialOnCorpus) {
    for (const auto& [name, g, h] : corpus_pairs()) {
        SCOPED_TRACE(name);
        ClassFunction pc = permutation_character(g, coset_action(right_coset_data(g, h)));
        ClassFunction ind = induce(trivial_character(h), g);
        for (std::size_t c = 0; c < pc.values.size(); ++c) {
            EXPECT_EQ(pc.values[c].imag(), 0.0);
            EXPECT_EQ(pc.values[c].real(), std::round(ind.values[c].real()));
            EXPECT_NEAR(ind.values[c].real(), pc.values[c].real(), 1e-9);
        }
    }
}

TEST(Frobenius, ReciprocityOnCorpus) {
    for (const auto& [name, g, h] : corpus_pairs()) {
        SCOPED_TRACE(name);
        CharacterTable tg = character_table(g);
        CharacterTable th = character_table(h);
        for (const auto& chi : th.irreducibles) {
            ClassFunction ind = induce(chi, tg.classes);
            for (const auto& psi : tg.irreducibles)
                EXPECT_EQ(multiplicity(ind, psi), multiplicity(chi, restrict(psi, h)));
        }
    }
}

TEST(CharacterTableJson, Shape) {
    auto j = character_table_json(character_table(named::symmetric(3)));
    EXPECT_EQ(j["degrees"], nlohmann::json({1, 1, 2}));
    EXPECT_EQ(j["classes"].size(), 3u);
    EXPECT_EQ(j["classes"][0]["representative"], "()");
    EXPECT_EQ(j["table"][2][1], nlohmann::json({0.0, 0.0}));
}
