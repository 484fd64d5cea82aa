#include "moyal/models.hpp"

#include <cmath>

namespace moyal {

namespace {

double get(const std::map<std::string, double>& m, const std::string& k, double dflt) {
    auto it = m.find(k);
    return it == m.end() ? dflt : it->second;
}

} // namespace

ModelPreset ModelPreset::sho(double omega0) {
    return {Id::sho, {{"omega0", omega0}}};
}
ModelPreset ModelPreset::ck(double m0, double gamma0, double omega0) {
    return {Id::caldirola_kanai, {{"m0", m0}, {"gamma0", gamma0}, {"omega0", omega0}}};
}
ModelPreset ModelPreset::tdf_cos(double a, double b) {
    return {Id::td_frequency, {{"kind", 0.0}, {"a", a}, {"b", b}}};
}
ModelPreset ModelPreset::tdf_quench(double omega1, double omega2, double t_c, double width) {
    return {Id::td_frequency,
            {{"kind", 1.0}, {"omega1", omega1}, {"omega2", omega2}, {"t_c", t_c}, {"width", width}}};
}

ModelPreset ModelPreset::from_name(const std::string& name,
                                   const std::map<std::string, double>& overrides) {
    ModelPreset p;
    if (name == "sho")
        p = sho();
    else if (name == "ck")
        p = ck();
    else if (name == "tdf")
        p = get(overrides, "kind", 0.0) == 1.0 ? tdf_quench() : tdf_cos();
    else
        throw ValidationError("unknown model '" + name + "' (expected sho|ck|tdf)");
    for (auto& [k, v] : overrides) {
        if (!p.params.count(k) && k != "kind")
            throw ValidationError("unknown parameter '" + k + "' for model " + name);
        p.params[k] = v;
    }
    return p;
}

TDModel build_model(const ModelPreset& preset) {
    TDModel m;
    switch (preset.id) {
    case ModelPreset::Id::sho: {
        double w0 = get(preset.params, "omega0", 1.0);
        if (!(w0 > 0)) throw ValidationError("sho: omega0 must be positive");
        m.label = "sho";
        m.Omega = w0; // makes rho == 1, tau == t: the regression anchor
        m.mass = [](double) { return 1.0; };
        m.omega = [w0](double) { return w0; };
        m.gamma = [](double) { return 0.0; };
        m.unit_mass = true;
        m.rho0 = 1.0; // closed-form initial data: direct integration holds rho == 1 exactly
        m.rhodot0 = 0.0;
        m.rho_closed = [](double) { return 1.0; };
        m.rhodot_closed = [](double) { return 0.0; };
        m.tau_closed = [](double t) { return t; };
        break;
    }
    case ModelPreset::Id::caldirola_kanai: {
        double m0 = get(preset.params, "m0", 1.0);
        double g0 = get(preset.params, "gamma0", 0.2);
        double w0 = get(preset.params, "omega0", 1.0);
        if (!(m0 > 0) || !(w0 > 0) || !(g0 >= 0))
            throw ValidationError("ck: need m0 > 0, omega0 > 0, gamma0 >= 0");
        double Om0sq = w0 * w0 - 0.25 * g0 * g0;
        if (!(Om0sq > 0))
            throw ValidationError("ck: overdamped (omega0^2 <= gamma0^2/4) is not supported");
        double Om0 = std::sqrt(Om0sq);
        m.label = "caldirola_kanai";
        m.Omega = 1.0;
        m.mass = [m0, g0](double t) { return m0 * std::exp(g0 * t); };
        m.omega = [w0](double) { return w0; };
        m.gamma = [g0](double) { return g0; };
        m.rho0 = 1.0 / std::sqrt(m0 * Om0);
        m.rhodot0 = -0.5 * g0 * m.rho0;
        m.rho_closed = [m0, g0, Om0](double t) {
            return std::exp(-0.5 * g0 * t) / std::sqrt(m0 * Om0);
        };
        m.rhodot_closed = [m0, g0, Om0](double t) {
            return -0.5 * g0 * std::exp(-0.5 * g0 * t) / std::sqrt(m0 * Om0);
        };
        m.tau_closed = [Om0](double t) { return Om0 * t; };
        break;
    }
    case ModelPreset::Id::td_frequency: {
        m.label = "td_frequency";
        m.Omega = 1.0;
        m.mass = [](double) { return 1.0; };
        m.gamma = [](double) { return 0.0; };
        m.unit_mass = true;
        if (get(preset.params, "kind", 0.0) == 1.0) {
            double w1 = get(preset.params, "omega1", 1.0);
            double w2 = get(preset.params, "omega2", 2.0);
            double tc = get(preset.params, "t_c", 5.0);
            double wd = get(preset.params, "width", 1.0);
            if (!(w1 > 0) || !(w2 > 0) || !(wd > 0))
                throw ValidationError("tdf quench: frequencies and width must be positive");
            // smooth logistic ramp omega1 -> omega2 (C-infinity)
            m.omega = [w1, w2, tc, wd](double t) {
                return w1 + (w2 - w1) / (1.0 + std::exp(-(t - tc) / wd));
            };
            m.label = "tdf_quench";
        } else {
            double a = get(preset.params, "a", 1.0);
            double b = get(preset.params, "b", 0.3);
            if (!(a > std::abs(b)))
                throw ValidationError("tdf cos: need a > |b| so omega^2 stays positive");
            m.omega = [a, b](double t) { return std::sqrt(a + b * std::cos(t)); };
            m.label = "tdf_cos";
            if (b == 0.0) {
                double r = std::pow(a, -0.25);
                m.rho_closed = [r](double) { return r; };
                m.rhodot_closed = [](double) { return 0.0; };
            }
        }
        break;
    }
    }
    return m;
}

PolySymbol hamiltonian_symbol(const TDModel& model, double t) {
    model.validate_at(t);
    double mt = model.mass(t), wt = model.omega(t);
    PolySymbol h;
    h.set(0, 2, 0.5 / mt);
    h.set(2, 0, 0.5 * mt * wt * wt);
    return h;
}

std::vector<ModelPreset> tdf_frequency_specs() {
    return {ModelPreset::tdf_cos(), ModelPreset::tdf_quench()};
}

std::vector<ModelPreset> all_presets() {
    return {ModelPreset::sho(), ModelPreset::ck(), ModelPreset::tdf_cos(),
            ModelPreset::tdf_quench()};
}

} // namespace moyal
