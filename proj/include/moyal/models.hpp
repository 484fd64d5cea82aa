#pragma once

#include <map>
#include <string>
#include <vector>

#include "moyal/ermakov.hpp"
#include "moyal/poly.hpp"

namespace moyal {

// Preset catalog: SHO baseline, Caldirola-Kanai, time-dependent frequency.
struct ModelPreset {
    enum class Id { sho, caldirola_kanai, td_frequency };
    Id id = Id::sho;
    std::map<std::string, double> params;

    static ModelPreset sho(double omega0 = 1.0);
    static ModelPreset ck(double m0 = 1.0, double gamma0 = 0.2, double omega0 = 1.0);
    static ModelPreset tdf_cos(double a = 1.0, double b = 0.3);
    static ModelPreset tdf_quench(double omega1 = 1.0, double omega2 = 2.0, double t_c = 5.0,
                                  double width = 1.0);
    static ModelPreset from_name(const std::string& name,
                                 const std::map<std::string, double>& overrides);
};

TDModel build_model(const ModelPreset& preset);

// H(x, p; t) = p^2 / 2m(t) + m(t) omega(t)^2 x^2 / 2 as an exact polynomial.
PolySymbol hamiltonian_symbol(const TDModel& model, double t);

// The shipped omega(t) presets for the TDF family.
std::vector<ModelPreset> tdf_frequency_specs();

// Every preset exercised by the verification suites.
std::vector<ModelPreset> all_presets();

} // namespace moyal
