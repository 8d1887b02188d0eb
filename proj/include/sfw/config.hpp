#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "sfw/error.hpp"

namespace sfw {

struct Tolerances {
    double character = 1e-9;       // table orthonormality
    double multiplicity = 1e-6;    // rounding of inner products to integers
    double norm = 1e-6;            // graph norm vs index
    double spectrum = 1e-9;        // Jones spectrum membership
};

/// Caps and tolerances shared by every module. All caps must be positive.
struct Config {
    std::size_t order_cap = 5000;
    std::size_t aut_cap = 300;
    std::size_t theta_k_cap = 3;
    std::size_t oracle_cap = 20000;   // bound on |G| * t^k for the brute-force commutant
    std::size_t class_cap = 64;
    Tolerances tol{};

    void validate() const {
        if (order_cap == 0 || aut_cap == 0 || theta_k_cap == 0 || oracle_cap == 0 || class_cap == 0)
            throw InputError("config: all caps must be positive");
        if (!(tol.character > 0 && tol.multiplicity > 0 && tol.norm > 0 && tol.spectrum > 0))
            throw InputError("config: tolerances must be positive");
    }

    /// Overrides from SFW_* environment variables (SFW_ORDER_CAP, SFW_AUT_CAP,
    /// SFW_THETA_K_CAP, SFW_ORACLE_CAP, SFW_CLASS_CAP, SFW_TOL_CHAR,
    /// SFW_TOL_MULT, SFW_TOL_NORM, SFW_TOL_SPECTRUM).
    Config& apply_env() {
        read_env("SFW_ORDER_CAP", order_cap);
        read_env("SFW_AUT_CAP", aut_cap);
        read_env("SFW_THETA_K_CAP", theta_k_cap);
        read_env("SFW_ORACLE_CAP", oracle_cap);
        read_env("SFW_CLASS_CAP", class_cap);
        read_env("SFW_TOL_CHAR", tol.character);
        read_env("SFW_TOL_MULT", tol.multiplicity);
        read_env("SFW_TOL_NORM", tol.norm);
        read_env("SFW_TOL_SPECTRUM", tol.spectrum);
        validate();
        return *this;
    }

    /// Overrides from a JSON object using the same key names in snake case.
    Config& apply_json(const nlohmann::json& j) {
        auto take = [&](const char* key, auto& field) {
            if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
        };
        try {
            take("order_cap", order_cap);
            take("aut_cap", aut_cap);
            take("theta_k_cap", theta_k_cap);
            take("oracle_cap", oracle_cap);
            take("class_cap", class_cap);
            if (j.contains("tolerances")) {
                const auto& t = j.at("tolerances");
                if (t.contains("char")) tol.character = t.at("char").get<double>();
                if (t.contains("multiplicity")) tol.multiplicity = t.at("multiplicity").get<double>();
                if (t.contains("norm")) tol.norm = t.at("norm").get<double>();
                if (t.contains("spectrum")) tol.spectrum = t.at("spectrum").get<double>();
            }
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("config: ") + e.what());
        }
        validate();
        return *this;
    }

    Config& apply_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InputError("config: cannot open " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw InputError("config " + path + ": " + e.what());
        }
        return apply_json(j);
    }

    nlohmann::json to_json() const {
        return {{"order_cap", order_cap},
                {"aut_cap", aut_cap},
                {"theta_k_cap", theta_k_cap},
                {"oracle_cap", oracle_cap},
                {"class_cap", class_cap},
                {"tolerances",
                 {{"char", tol.character},
                  {"multiplicity", tol.multiplicity},
                  {"norm", tol.norm},
                  {"spectrum", tol.spectrum}}}};
    }

private:
    static void read_env(const char* name, std::size_t& field) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            unsigned long long x = std::strtoull(v, &end, 10);
            if (end == v || *end != '\0') throw InputError(std::string("bad value for ") + name);
            field = static_cast<std::size_t>(x);
        }
    }
    static void read_env(const char* name, double& field) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            double x = std::strtod(v, &end);
            if (end == v || *end != '\0') throw InputError(std::string("bad value for ") + name);
            field = x;
        }
    }
};

inline const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

}  // namespace sfw
