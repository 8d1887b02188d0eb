#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sfw/io/verify.hpp"

#ifndef SFW_DEFAULT_CORPUS
#define SFW_DEFAULT_CORPUS "corpus"
#endif

namespace {

using namespace sfw;
using nlohmann::json;

struct Globals {
    std::string config_path;
    bool json = false;
    std::string out;
    std::optional<double> tol_char, tol_mult, tol_norm, tol_spectrum;
};

Config build_config(const Globals& g) {
    Config cfg;
    if (!g.config_path.empty()) cfg.apply_file(g.config_path);
    cfg.apply_env();
    if (g.tol_char) cfg.tol.character = *g.tol_char;
    if (g.tol_mult) cfg.tol.multiplicity = *g.tol_mult;
    if (g.tol_norm) cfg.tol.norm = *g.tol_norm;
    if (g.tol_spectrum) cfg.tol.spectrum = *g.tol_spectrum;
    cfg.validate();
    return cfg;
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + g.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss << std::setprecision(12) << x;
    return ss.str();
}

/// Either --pair file.json or --group plus --subgroup.
struct PairArgs {
    std::string group, subgroup, pair;

    void add(CLI::App* app) {
        app->add_option("--group", group, "group JSON file");
        app->add_option("--subgroup", subgroup, "subgroup JSON file");
        app->add_option("--pair", pair, "corpus entry with group and subgroup");
    }

    std::pair<PermGroup, PermGroup> load(const Config& cfg) const {
        if (!pair.empty()) {
            CorpusEntry e = parse_corpus_entry(detail::read_file(pair), pair, cfg);
            return {e.group, e.subgroup};
        }
        if (group.empty() || subgroup.empty()) throw InputError("need --pair or both --group and --subgroup");
        PermGroup g = load_group_file(group, cfg);
        PermGroup h = load_group_file(subgroup, cfg);
        if (g.degree() != h.degree()) throw InputError("group and subgroup act on different numbers of points");
        PermGroup::require_subgroup(h, g, "subgroup");
        return {g, h};
    }
};

std::vector<std::size_t> parse_index_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        char* end = nullptr;
        unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
        if (*end != '\0') throw InputError("bad Out coset index '" + tok + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

VirtualEmbeddingSpec parse_vspec(const std::string& path) {
    std::string text = detail::read_file(path);
    json j = detail::parse_text(text, path);
    try {
        VirtualEmbeddingSpec spec;
        spec.t = j.at("t").get<std::uint64_t>();
        for (const auto& p : j.at("parts")) {
            if (p.is_array())
                spec.parts.push_back({p.at(0).get<std::uint64_t>(), p.at(1).get<std::uint64_t>(), p.at(2).get<std::uint64_t>()});
            else
                spec.parts.push_back({p.at("s").get<std::uint64_t>(), p.at("index_G_K").get<std::uint64_t>(),
                                      p.at("index_H_gammaK").get<std::uint64_t>()});
        }
        return spec;
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Subfactor invariants of finite group-subgroup pairs"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config_path, "JSON config file");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--out", g.out, "write output to this path");
    app.add_option("--tol-char", g.tol_char, "character orthogonality tolerance");
    app.add_option("--tol-mult", g.tol_mult, "multiplicity rounding tolerance");
    app.add_option("--tol-norm", g.tol_norm, "graph norm tolerance");
    app.add_option("--tol-spectrum", g.tol_spectrum, "spectrum membership tolerance");

    auto* c_index = app.add_subcommand("index", "index [G:H] and double coset count");
    PairArgs index_args;
    index_args.add(c_index);

    auto* c_chartab = app.add_subcommand("chartab", "character table");
    std::string chartab_group;
    c_chartab->add_option("--group", chartab_group, "group JSON file")->required();

    auto* c_graph = app.add_subcommand("graph", "principal or dual principal graph");
    PairArgs graph_args;
    graph_args.add(c_graph);
    bool principal = false, dual = false;
    std::string format = "json";
    c_graph->add_flag("--principal", principal, "principal graph (default)");
    c_graph->add_flag("--dual", dual, "dual principal graph");
    c_graph->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* c_extend = app.add_subcommand("extend", "extension of G by a subgroup of Out(G)");
    std::string extend_group, out_subgroup;
    bool out_given = false;
    c_extend->add_option("--group", extend_group, "group JSON file")->required();
    c_extend->add_option("--out-subgroup", out_subgroup, "comma-separated Out(G) coset indices generating the subgroup")
        ->each([&](const std::string&) { out_given = true; });

    auto* c_spectrum = app.add_subcommand("spectrum", "Jones spectrum membership");
    double spectrum_x = 0;
    std::optional<double> spectrum_tol;
    c_spectrum->add_option("x", spectrum_x, "value")->required();
    c_spectrum->add_option("--tol", spectrum_tol, "tolerance");

    auto* c_vindex = app.add_subcommand("vindex", "index of a virtual embedding");
    std::string vspec;
    c_vindex->add_option("--spec", vspec, "spec JSON file")->required();

    auto* c_induce = app.add_subcommand("induce", "induced standard homomorphism with trivial rho");
    std::string ind_group, ind_sub, ind_target, ind_gamma;
    c_induce->add_option("--group", ind_group, "G")->required();
    c_induce->add_option("--subgroup", ind_sub, "K")->required();
    c_induce->add_option("--target", ind_target, "H")->required();
    c_induce->add_option("--gamma", ind_gamma, "images of K's generators in H")->required();

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string corpus_dir = SFW_DEFAULT_CORPUS;
    c_verify->add_option("suite", suite, "theta, graphs, cocycles, extensions, arithmetic or all")->required();
    c_verify->add_option("--corpus", corpus_dir, "corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Config cfg = build_config(g);

    if (*c_index) {
        auto [G, H] = index_args.load(cfg);
        std::size_t idx = G.order() / H.order();
        std::size_t dc = double_coset_data(G, H).count();
        if (g.json)
            emit(g, json{{"index", idx}, {"double_cosets", dc}}.dump(2));
        else
            emit(g, "index " + std::to_string(idx) + ", double_cosets " + std::to_string(dc));
        return 0;
    }
    if (*c_chartab) {
        CharacterTable t = character_table(load_group_file(chartab_group, cfg), cfg);
        if (g.json) {
            emit(g, character_table_json(t).dump(2));
            return 0;
        }
        std::ostringstream ss;
        ss << "classes";
        for (std::size_t c = 0; c < t.classes->count(); ++c)
            ss << "  " << t.group().element(t.classes->reps[c]).to_cycles() << "[" << t.classes->sizes[c] << "]";
        ss << "\n";
        for (std::size_t i = 0; i < t.size(); ++i) {
            ss << "chi_" << i;
            for (const auto& v : t[i].values) {
                double re = std::abs(v.real()) < 1e-12 ? 0.0 : v.real();
                double im = std::abs(v.imag()) < 1e-12 ? 0.0 : v.imag();
                ss << "  " << fmt(re);
                if (im != 0) ss << (im > 0 ? "+" : "") << fmt(im) << "i";
            }
            ss << "\n";
        }
        emit(g, ss.str());
        return 0;
    }
    if (*c_graph) {
        if (principal && dual) throw InputError("choose one of --principal and --dual");
        auto [G, H] = graph_args.load(cfg);
        BipartiteMultiGraph gr = dual ? dual_principal_graph(G, H, cfg) : principal_graph(G, H, cfg);
        emit(g, format == "dot" ? graph_dot(gr) : graph_json(gr).dump(2));
        return 0;
    }
    if (*c_extend) {
        PermGroup G = load_group_file(extend_group, cfg);
        ExtensionResult ext = [&] {
            if (!out_given) return extension_from_full_out(G, cfg);
            AutomorphismData ad = automorphism_group(G, cfg);
            return extension_from_out(G, ad, parse_index_list(out_subgroup), cfg);
        }();
        json j = extension_json(ext);
        SubfactorReport rep = subfactor_report_from_out(ext);
        j["report"] = {{"index", rep.index}, {"outerness", rep.outerness}, {"crossed_relations", rep.crossed_relations}};
        emit(g, j.dump(2));
        return 0;
    }
    if (*c_spectrum) {
        SpectrumVerdict v = jones_spectrum_query(spectrum_x, spectrum_tol ? *spectrum_tol : cfg.tol.spectrum);
        if (g.json) {
            json j{{"kind", kind_name(v.kind)}, {"value", v.value}, {"residual", v.residual}};
            if (v.kind == SpectrumVerdict::Kind::Discrete) j["n"] = v.n;
            emit(g, j.dump(2));
        } else if (v.kind == SpectrumVerdict::Kind::Discrete) {
            emit(g, "discrete n=" + std::to_string(v.n));
        } else if (v.kind == SpectrumVerdict::Kind::Continuous) {
            emit(g, "continuous");
        } else {
            emit(g, "not-in-spectrum residual=" + fmt(v.residual));
        }
        return 0;
    }
    if (*c_vindex) {
        std::uint64_t v = virtual_index(parse_vspec(vspec));
        emit(g, g.json ? json{{"index", v}}.dump(2) : std::to_string(v));
        return 0;
    }
    if (*c_induce) {
        PermGroup G = load_group_file(ind_group, cfg);
        PermGroup K = load_group_file(ind_sub, cfg);
        PermGroup H = load_group_file(ind_target, cfg);
        PermGroup::require_subgroup(K, G, "subgroup");
        std::string text = detail::read_file(ind_gamma);
        json jg = detail::parse_text(text, ind_gamma);
        std::vector<Permutation> imgs;
        try {
            for (const auto& s : jg.at("generator_images")) imgs.push_back(Permutation::from_cycles(H.degree(), s.get<std::string>()));
        } catch (const json::exception& e) {
            throw InputError(ind_gamma + ": " + e.what());
        }
        if (imgs.size() != K.generators().size())
            throw InputError(ind_gamma + ": expected one image per generator of the subgroup");
        GroupHom gamma = hom_from_generator_images(K, H, imgs);
        InducedHomomorphism<long long> ind(G, K, gamma, trivial_rep<long long>(K));
        json out{{"size", ind.size()}, {"verified", true}, {"generators", json::array()}};
        for (const auto& s : G.generators()) {
            auto m = ind(s);
            json rows = json::array();
            for (std::size_t r = 0; r < m.n; ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < m.n; ++c) row.push_back(m(r, c).to_string());
                rows.push_back(row);
            }
            out["generators"].push_back({{"element", s.to_cycles()}, {"matrix", rows}});
        }
        emit(g, out.dump(2));
        return 0;
    }
    if (*c_verify) {
        CorpusLoad corpus = load_corpus(corpus_dir, cfg);
        VerifyReport rep = run_suite(suite, corpus, cfg);
        if (g.json) {
            emit(g, rep.to_json().dump(2));
        } else {
            std::ostringstream ss;
            ss << "suite " << rep.suite << ": " << rep.cases << " cases, " << rep.failures.size() << " failures, "
               << fmt(rep.wall_seconds) << " s\n";
            for (const auto& f : rep.failures) ss << "FAIL " << f.id << " [" << f.inputs << "]: " << f.witness << "\n";
            emit(g, ss.str());
        }
        return rep.ok() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sfw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
