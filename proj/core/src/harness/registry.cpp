#include "hideopt/harness/registry.hpp"

#include <stdexcept>

#include "hideopt/de.hpp"
#include "hideopt/hide.hpp"
#include "hideopt/jade.hpp"
#include "hideopt/psode.hpp"

namespace hideopt::harness {

namespace {

using nlohmann::json;

void reject_unknown(const json& params, std::initializer_list<const char*> known) {
    if (params.is_null()) return;
    for (const auto& [key, value] : params.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("unknown algorithm parameter: " + key);
    }
}

template <typename T>
void maybe(const json& params, const char* key, T& out) {
    if (!params.is_null() && params.contains(key)) out = params.at(key).get<T>();
}

}  // namespace

Runner make_runner(const std::string& name, const nlohmann::json& params) {
    if (name == "de") {
        reject_unknown(params, {"F", "CR", "NP"});
        DEParams p;
        maybe(params, "F", p.F);
        maybe(params, "CR", p.CR);
        maybe(params, "NP", p.NP);
        p.validate();
        return [p](const ObjectiveFunction& f, const Termination& t, std::uint64_t seed) {
            return run_de(f, p, t, seed);
        };
    }
    if (name == "hide") {
        reject_unknown(params, {"HC", "F", "CR", "N_l", "NP", "init_spread", "crossover"});
        HIDEParams p;
        maybe(params, "HC", p.HC);
        maybe(params, "F", p.F);
        maybe(params, "CR", p.CR);
        maybe(params, "N_l", p.N_l);
        maybe(params, "NP", p.NP);
        maybe(params, "init_spread", p.init_spread);
        if (!params.is_null() && params.contains("crossover")) {
            std::string mode = params.at("crossover").get<std::string>();
            if (mode == "dimwise")
                p.crossover = HideCrossover::HCDimwise;
            else if (mode == "binomial")
                p.crossover = HideCrossover::Binomial;
            else
                throw std::invalid_argument("crossover must be 'dimwise' or 'binomial'");
        }
        p.validate();
        return [p](const ObjectiveFunction& f, const Termination& t, std::uint64_t seed) {
            return run_hide(f, p, t, seed);
        };
    }
    if (name == "jade") {
        reject_unknown(params, {"p", "c", "NP", "archive"});
        JADEParams p;
        maybe(params, "p", p.p);
        maybe(params, "c", p.c);
        maybe(params, "NP", p.NP);
        maybe(params, "archive", p.archive_enabled);
        p.validate();
        return [p](const ObjectiveFunction& f, const Termination& t, std::uint64_t seed) {
            return run_jade(f, p, t, seed);
        };
    }
    if (name == "psode") {
        reject_unknown(params, {"w", "phi_p", "phi_g", "F_lo", "F_hi", "CR_lo", "CR_hi", "NP"});
        PSODEParams p;
        maybe(params, "w", p.w);
        maybe(params, "phi_p", p.phi_p);
        maybe(params, "phi_g", p.phi_g);
        maybe(params, "F_lo", p.F_lo);
        maybe(params, "F_hi", p.F_hi);
        maybe(params, "CR_lo", p.CR_lo);
        maybe(params, "CR_hi", p.CR_hi);
        maybe(params, "NP", p.NP);
        p.validate();
        return [p](const ObjectiveFunction& f, const Termination& t, std::uint64_t seed) {
            return run_psode(f, p, t, seed);
        };
    }
    throw std::invalid_argument("unknown algorithm: " + name);
}

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"de", "jade", "psode", "hide"};
    return names;
}

}  // namespace hideopt::harness
