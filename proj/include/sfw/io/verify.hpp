#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfw/character/table.hpp"
#include "sfw/cocycle/extension.hpp"
#include "sfw/index/arith.hpp"
#include "sfw/index/induced.hpp"
#include "sfw/io/group_io.hpp"
#include "sfw/perm/named_groups.hpp"
#include "sfw/subfactor/commutant.hpp"
#include "sfw/subfactor/graph.hpp"
#include "sfw/subfactor/theta.hpp"

namespace sfw {

struct CaseFailure {
    std::string id;
    std::string inputs;
    std::string witness;
};

struct VerifyReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<CaseFailure> failures;
    double wall_seconds = 0;

    bool ok() const noexcept { return failures.empty(); }

    nlohmann::json to_json() const {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& x : failures) f.push_back({{"case", x.id}, {"inputs", x.inputs}, {"witness", x.witness}});
        return {{"suite", suite}, {"cases", cases}, {"failures", f}, {"wall_seconds", wall_seconds}};
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theta", "graphs", "cocycles", "extensions", "arithmetic"};
    return names;
}

namespace verify_detail {

/// A check returns an empty string on success and a witness otherwise.
struct Case {
    std::string id;
    std::string inputs;
    std::function<std::string()> run;
};

inline std::uint64_t seed_of(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

inline std::string describe(const CorpusEntry& e) {
    return e.name + " (|G|=" + std::to_string(e.group.order()) + ", |H|=" + std::to_string(e.subgroup.order()) + ")";
}

inline std::string tuple_text(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

using IntAlg = GroupAlgebraElement<long long>;

inline IntAlg random_element(const PermGroup& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    std::uniform_int_distribution<int> len(1, 6);
    IntAlg x(g);
    for (int n = len(rng); n-- > 0;) x.add_term(pick(rng), coef(rng));
    return x;
}

inline std::string theta_consistency(const CorpusEntry& e, std::size_t k, std::size_t samples, const Config& cfg) {
    ThetaMap theta(right_coset_data(e.group, e.subgroup), k, cfg);
    std::mt19937_64 rng(seed_of(e.name) + k);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(e.group.order() - 1));
    const std::size_t n = theta.tuple_count();
    for (std::size_t s = 0; s < samples; ++s) {
        Elem g = pick(rng);
        auto ug = IntAlg::basis(e.group, g);
        for (std::size_t b = 0; b < n; ++b) {
            Tuple j = theta.decode(b);
            Tuple acted = theta.act(g, j);
            for (std::size_t a = 0; a < n; ++a) {
                Tuple i = theta.decode(a);
                IntAlg nested = theta.nested_form(ug, i, j);
                auto closed = theta.closed_form(g, i, j);
                IntAlg expect(e.group);
                if (closed) expect.add_term(*closed, 1);
                if (!(nested == expect))
                    return "g=" + e.group.element(g).to_cycles() + " i=" + tuple_text(i) + " j=" + tuple_text(j) +
                           ": nested " + nested.to_string() + " vs closed " + expect.to_string();
                if ((!nested.is_zero()) != (i == acted))
                    return "g=" + e.group.element(g).to_cycles() + " j=" + tuple_text(j) +
                           ": nonzero pattern differs from tuple action";
            }
        }
    }
    return {};
}

inline std::string tuple_group_law(const CorpusEntry& e, std::size_t k, std::size_t samples, const Config& cfg) {
    ThetaMap theta(right_coset_data(e.group, e.subgroup), k, cfg);
    std::mt19937_64 rng(seed_of(e.name) ^ 0x5bd1e995u);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(e.group.order() - 1));
    std::uniform_int_distribution<std::size_t> tup(0, theta.tuple_count() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        Elem g = pick(rng), h = pick(rng);
        Tuple j = theta.decode(tup(rng));
        if (theta.act(e.group.mul(g, h), j) != theta.act(g, theta.act(h, j)))
            return "g=" + e.group.element(g).to_cycles() + " h=" + e.group.element(h).to_cycles() + " j=" + tuple_text(j);
    }
    return {};
}

inline std::string pimsner_popa(const CorpusEntry& e, std::size_t samples) {
    CosetData cd = right_coset_data(e.group, e.subgroup);
    std::mt19937_64 rng(seed_of(e.name) ^ 0xabcdefu);
    for (std::size_t s = 0; s < samples; ++s) {
        IntAlg x = random_element(e.group, rng);
        IntAlg back = pimsner_popa_reassemble(pimsner_popa_expand(x, cd), cd);
        if (!(back == x)) return "x=" + x.to_string() + " reassembles to " + back.to_string();
    }
    return {};
}

inline std::string graph_law(const CorpusEntry& e, bool dual, const Config& cfg) {
    BipartiteMultiGraph gr = dual ? dual_principal_graph(e.group, e.subgroup, cfg) : principal_graph(e.group, e.subgroup, cfg);
    const double index = static_cast<double>(e.group.order()) / static_cast<double>(e.subgroup.order());
    const double n2 = gr.norm_squared();
    if (std::abs(n2 - index) > cfg.tol.norm)
        return "norm^2 " + std::to_string(n2) + " vs index " + std::to_string(index);
    if (!gr.is_connected()) return "graph is not connected";
    if (graph_json(graph_from_json(graph_json(gr))) != graph_json(gr)) return "JSON round trip changed the graph";
    return {};
}

inline std::string commutant_agreement(const CorpusEntry& e, std::size_t k, const Config& cfg) {
    std::string out;
    for (const PermGroup* g0 : {&e.group, &e.subgroup})
        for (CommutantSide side : {CommutantSide::InG, CommutantSide::InH}) {
            long long fast = relative_commutant_dim(e.group, *g0, e.subgroup, k, side, cfg);
            long long slow;
            try {
                slow = brute_force_commutant_dim(e.group, *g0, e.subgroup, k, side, cfg);
            } catch (const ResourceLimitError&) {
                continue;
            }
            if (fast != slow)
                return std::string(side_name(side)) + (g0 == &e.group ? " G0=G" : " G0=H") + ": characters give " +
                       std::to_string(fast) + ", oracle gives " + std::to_string(slow);
        }
    return out;
}

inline std::string character_laws(const PermGroup& g, const PermGroup& h, const Config& cfg) {
    CharacterTable tg = character_table(g, cfg), th = character_table(h, cfg);
    long long sum = 0;
    for (std::size_t i = 0; i < tg.size(); ++i) {
        long long d = std::llround(tg[i].degree().real());
        sum += d * d;
        for (std::size_t j = 0; j < tg.size(); ++j) {
            Complex ip = inner_product(tg[i], tg[j]).value;
            if (std::abs(ip - Complex(i == j ? 1.0 : 0.0)) > cfg.tol.character)
                return "row orthogonality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    }
    if (sum != static_cast<long long>(g.order())) return "sum of squared degrees is " + std::to_string(sum);
    for (std::size_t a = 0; a < th.size(); ++a) {
        ClassFunction up = induce(th[a], tg.classes);
        for (std::size_t b = 0; b < tg.size(); ++b) {
            long long lhs = multiplicity(up, tg[b], cfg.tol.multiplicity);
            long long rhs = multiplicity(restrict(tg[b], h), th[a], cfg.tol.multiplicity);
            if (lhs != rhs)
                return "Frobenius reciprocity fails for psi_" + std::to_string(a) + ", chi_" + std::to_string(b);
        }
    }
    return {};
}

inline std::string crossed_product(const PermGroup& g, const PermGroup& k, const PermGroup& mid, const Config& cfg) {
    for (RepRule rule : {RepRule::LexMin, RepRule::LexMaxNonIdentity}) {
        CrossedProductReport r = crossed_product_check(g, k, mid, rule, cfg);
        if (!r.ok) return std::string(rule == RepRule::LexMin ? "lex-min" : "lex-max") + " representatives: " + r.message;
        if (r.pairs_checked != g.order() * g.order()) return "not every basis pair was checked";
    }
    return {};
}

/// Structural checks on an extension: exact sequence, presentation relation,
/// cocycle identities before and after normalization, report fields.
inline std::string extension_invariants(const ExtensionResult& ext) {
    const PermGroup& h = ext.realized;
    if (h.order() != ext.base.order() * ext.gamma().order()) return "|H| != |G| |Gamma0|";
    if (!(ext.quotient.map.kernel() == ext.inner)) return "kernel of H -> Gamma0 differs from Ad(G)";
    if (!ext.embedding.is_homomorphism() || !ext.embedding.is_injective()) return "embedding is not injective";
    if (!(ext.embedding.image_group() == ext.inner)) return "embedding image differs from Inn(G)";
    if (!ext.lifts.front().is_identity()) return "lift of the identity is not the identity";
    for (Elem k = 0; k < ext.gamma().order(); ++k) {
        Elem hk = h.index_of(ext.lifts[k]);
        for (Elem a = 0; a < ext.base.order(); ++a)
            if (h.conj(hk, ext.embedding(a)) != ext.embedding(ext.lifts[k][a]))
                return "h_k g h_k^-1 != phi_k(g) at k=" + std::to_string(k);
    }
    CocycleReport cr = verify_cocycle(ext.cocycle);
    if (!cr.ok) return "cocycle: " + cr.message;
    if (!normalize_cocycle(ext.cocycle).is_normalized()) return "normalization failed";
    if (!ext.outer) return "outerness proxy fails";
    SubfactorReport rep = subfactor_report_from_out(ext);
    if (rep.index != ext.gamma().order() || !rep.crossed_relations) return "crossed relations fail";
    return {};
}

inline std::vector<Case> theta_cases(const std::vector<CorpusEntry>& corpus, const Config& cfg) {
    std::vector<Case> cs;
    for (const auto& e : corpus) {
        for (std::size_t k : {1u, 2u})
            cs.push_back({"theta/" + e.name + "/k=" + std::to_string(k), describe(e),
                          [&e, k, &cfg] { return theta_consistency(e, k, 50, cfg); }});
        cs.push_back({"theta/" + e.name + "/group-law", describe(e), [&e, &cfg] { return tuple_group_law(e, 2, 200, cfg); }});
        cs.push_back({"theta/" + e.name + "/pimsner-popa", describe(e), [&e] { return pimsner_popa(e, 100); }});
    }
    return cs;
}

inline std::vector<Case> graph_cases(const std::vector<CorpusEntry>& corpus, const Config& cfg) {
    std::vector<Case> cs;
    for (const auto& e : corpus) {
        cs.push_back({"graphs/" + e.name + "/principal", describe(e), [&e, &cfg] { return graph_law(e, false, cfg); }});
        cs.push_back({"graphs/" + e.name + "/dual", describe(e), [&e, &cfg] { return graph_law(e, true, cfg); }});
        for (std::size_t k : {1u, 2u})
            cs.push_back({"graphs/" + e.name + "/commutant-k=" + std::to_string(k), describe(e),
                          [&e, k, &cfg] { return commutant_agreement(e, k, cfg); }});
        cs.push_back({"graphs/" + e.name + "/characters", describe(e),
                      [&e, &cfg] { return character_laws(e.group, e.subgroup, cfg); }});
    }
    return cs;
}

inline std::vector<Case> cocycle_cases(const std::vector<CorpusEntry>& corpus, const Config& cfg) {
    std::vector<Case> cs;
    for (const auto& e : corpus)
        cs.push_back({"cocycles/" + e.name + "/crossed-product-core", describe(e), [&e, &cfg] {
                          return crossed_product(e.group, normal_core(e.group, e.subgroup), e.subgroup, cfg);
                      }});
    cs.push_back({"cocycles/trivial-and-perturbed", "Z3 acting trivially on S3", [] {
                      PermGroup s3 = named::symmetric(3), z3 = named::cyclic(3);
                      Cocycle2<GroupValues> c{z3, GroupValues{s3},
                                              std::vector<Permutation>(3, Permutation::identity(s3.order())),
                                              std::vector<Elem>(9, PermGroup::identity())};
                      if (!verify_cocycle(c).ok) return std::string("trivial cocycle rejected");
                      c(1, 2) = s3.index_of(Permutation::from_cycles(3, "(0 1)"));
                      CocycleReport r = verify_cocycle(c);
                      if (r.ok || r.witness.empty()) return std::string("perturbed cocycle accepted");
                      return std::string();
                  }});
    return cs;
}

inline std::vector<Case> extension_cases(const std::vector<CorpusEntry>& corpus, const Config& cfg) {
    std::vector<Case> cs;
    std::set<std::vector<Permutation>> seen;
    for (const auto& e : corpus) {
        for (const PermGroup* g : {&e.group, &e.subgroup}) {
            if (!seen.insert(std::vector<Permutation>(g->elements().begin(), g->elements().end())).second) continue;
            if (center(*g).order() != 1 || g->order() > cfg.aut_cap) continue;
            PermGroup grp = *g;
            cs.push_back({"extensions/" + e.name + (g == &e.group ? "/G" : "/H") + "/full-out",
                          "order " + std::to_string(g->order()),
                          [grp, &cfg] { return extension_invariants(extension_from_full_out(grp, cfg)); }});
        }
    }
    cs.push_back({"extensions/A4/fingerprint", "A4 with Out(A4)", [&cfg] {
                      ExtensionResult ext = extension_from_full_out(named::alternating(4), cfg);
                      std::map<std::size_t, std::size_t> want{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
                      if (ext.realized.order() != 24 || ext.index() != 2) return std::string("order or index wrong");
                      if (order_fingerprint(ext.realized) != want) return std::string("order histogram differs");
                      if (!crossed_product_check(ext.realized, ext.inner, ext.inner, RepRule::LexMin, cfg).ok)
                          return std::string("crossed product over the image of A4 fails");
                      return extension_invariants(ext);
                  }});
    cs.push_back({"extensions/S4xS4/swap", "S4 x S4 with the factor swap", [&cfg] {
                      PermGroup g = named::symmetric_square(4);
                      ExtensionResult ext =
                          extension_from_out(g, {automorphism_from_normalizer(g, named::factor_swap(4))}, cfg);
                      if (ext.index() != 2) return std::string("index is not 2");
                      return extension_invariants(ext);
                  }});
    return cs;
}

inline std::vector<Case> arithmetic_cases(const std::vector<CorpusEntry>& corpus, const Config& cfg) {
    std::vector<Case> cs;
    cs.push_back({"arithmetic/spectrum", "1, 2, 3, 3.5, 4.7", [&cfg] {
                      const double tol = cfg.tol.spectrum;
                      using K = SpectrumVerdict::Kind;
                      struct Want {
                          double x;
                          K kind;
                          std::uint64_t n;
                      };
                      for (const Want& w : {Want{1, K::Discrete, 3}, Want{2, K::Discrete, 4}, Want{3, K::Discrete, 6},
                                            Want{3.5, K::NotInSpectrum, 0}, Want{4.7, K::Continuous, 0}}) {
                          SpectrumVerdict v = jones_spectrum_query(w.x, tol);
                          if (v.kind != w.kind || v.n != w.n)
                              return "x=" + std::to_string(w.x) + " gave " + kind_name(v.kind);
                      }
                      return std::string();
                  }});
    cs.push_back({"arithmetic/virtual-index", "three worked examples and a violation", [] {
                      if (virtual_index({1, {{1, 1, 1}}}) != 1) return std::string("example 1");
                      if (virtual_index({2, {{1, 2, 5}}}) != 10) return std::string("example 2");
                      if (virtual_index({3, {{1, 1, 2}, {1, 2, 3}}}) != 15) return std::string("example 3");
                      try {
                          virtual_index({3, {{1, 2, 5}}});
                          return std::string("constraint not enforced");
                      } catch (const PreconditionError&) {
                      }
                      return std::string();
                  }});
    cs.push_back({"arithmetic/local-index", "uniform and mixed partitions", [] {
                      using R = LocalRational;
                      if (local_index_combine({{R(1, 2), 2.0}, {R(1, 2), 2.0}}) != 8.0) return std::string("halves");
                      if (std::abs(local_index_combine({{R(1, 3), 1.0}, {R(2, 3), 2.0}}) - 6.0) > 1e-12)
                          return std::string("thirds");
                      return std::string();
                  }});
    for (const auto& e : corpus) {
        cs.push_back({"arithmetic/" + e.name + "/index-chain", describe(e), [&e] {
                          for (const PermGroup& k : {normal_core(e.group, e.subgroup), trivial_group(e.group.degree())}) {
                              double gk = double(e.group.order()) / k.order(), gh = double(e.group.order()) / e.subgroup.order(),
                                     hk = double(e.subgroup.order()) / k.order();
                              if (!index_chain_check(gk, gh, hk)) return "chain through K of order " + std::to_string(k.order());
                          }
                          return std::string();
                      }});
        cs.push_back({"arithmetic/" + e.name + "/commutant-bound", describe(e), [&e, &cfg] {
                          long long d = relative_commutant_dim(e.group, e.subgroup, e.subgroup, 1, CommutantSide::InH, cfg);
                          double idx = double(e.group.order()) / e.subgroup.order();
                          if (!commutant_bound_check(d, idx)) return "dim " + std::to_string(d) + " exceeds index + 1";
                          return std::string();
                      }});
        cs.push_back({"arithmetic/" + e.name + "/induced", describe(e), [&e] {
                          InducedHomomorphism<long long> ind(e.group, e.subgroup, inclusion_hom(e.subgroup, e.group),
                                                             trivial_rep<long long>(e.subgroup));
                          if (!(ind(PermGroup::identity()) == GroupAlgebraMatrix<long long>::identity(e.group, ind.size())))
                              return std::string("Ind(e) is not the identity");
                          return ind.verify() ? std::string() : std::string("not a unitary homomorphism");
                      }});
    }
    return cs;
}

}  // namespace verify_detail

/// Runs one named suite (or "all") over the corpus. Files that failed to
/// load are reported as failures of every suite.
inline VerifyReport run_suite(const std::string& suite, const CorpusLoad& corpus, const Config& cfg = default_config()) {
    using namespace verify_detail;
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw InputError("unknown suite '" + suite + "'");
    auto start = std::chrono::steady_clock::now();
    std::vector<Case> cases;
    auto want = [&](const char* n) { return suite == "all" || suite == n; };
    auto append = [&](std::vector<Case> more) {
        for (auto& c : more) cases.push_back(std::move(c));
    };
    if (want("theta")) append(theta_cases(corpus.entries, cfg));
    if (want("graphs")) append(graph_cases(corpus.entries, cfg));
    if (want("cocycles")) append(cocycle_cases(corpus.entries, cfg));
    if (want("extensions")) append(extension_cases(corpus.entries, cfg));
    if (want("arithmetic")) append(arithmetic_cases(corpus.entries, cfg));

    VerifyReport rep;
    rep.suite = suite;
    for (const auto& [file, err] : corpus.errors) rep.failures.push_back({"load/" + file, file, err});
    rep.cases = cases.size() + corpus.errors.size();
    for (const auto& c : cases) {
        std::string w;
        try {
            w = c.run();
        } catch (const std::exception& ex) {
            w = std::string("exception: ") + ex.what();
        }
        if (!w.empty()) rep.failures.push_back({c.id, c.inputs, w});
    }
    std::sort(rep.failures.begin(), rep.failures.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace sfw
