#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "moyal/grid_symbol.hpp"

namespace moyal {

// All floating-point output uses 17 significant digits so files round-trip
// and reruns are byte-identical.
static std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const GridSymbol& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open for writing: " + path);
    out << "x,p,re,im\n";
    const PhaseGrid& g = f.grid;
    for (int i = 0; i < g.n_x(); ++i)
        for (int j = 0; j < g.n_p(); ++j) {
            const cplx& v = f.at(i, j);
            out << fmt17(g.x(i)) << ',' << fmt17(g.p(j)) << ',' << fmt17(v.real()) << ','
                << fmt17(v.imag()) << '\n';
        }
}

void write_json(const GridSymbol& f, const std::string& path) {
    nlohmann::ordered_json j;
    j["grid"] = {{"n_x", f.grid.n_x()},
                 {"n_p", f.grid.n_p()},
                 {"x_max", f.grid.x_max()},
                 {"p_max", f.grid.p_max()}};
    auto& vals = j["values"] = nlohmann::ordered_json::array();
    for (const cplx& v : f.values) vals.push_back({v.real(), v.imag()});
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open for writing: " + path);
    out << j.dump() << '\n';
}

GridSymbol read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open: " + path);
    nlohmann::json j;
    in >> j;
    PhaseGrid g(j.at("grid").at("n_x").get<int>(), j.at("grid").at("n_p").get<int>(),
                j.at("grid").at("x_max").get<double>(), j.at("grid").at("p_max").get<double>());
    GridSymbol s(g);
    const auto& vals = j.at("values");
    if (vals.size() != g.size()) throw ValidationError("read_json: value count mismatch");
    for (std::size_t k = 0; k < g.size(); ++k)
        s.values[k] = cplx(vals[k][0].get<double>(), vals[k][1].get<double>());
    return s;
}

GridSymbol read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("read_csv: empty file");
    std::vector<double> xs, ps;
    std::vector<cplx> vals;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double x, p, re, im;
        char c;
        if (!(ss >> x >> c >> p >> c >> re >> c >> im))
            throw ValidationError("read_csv: malformed row: " + line);
        xs.push_back(x);
        ps.push_back(p);
        vals.push_back(cplx(re, im));
    }
    if (vals.empty()) throw ValidationError("read_csv: no data rows");
    // row-major x outer: n_p = index where x first changes
    std::size_t np = 1;
    while (np < xs.size() && xs[np] == xs[0]) ++np;
    if (vals.size() % np != 0) throw ValidationError("read_csv: ragged grid");
    std::size_t nx = vals.size() / np;
    double xmax = -xs[0], pmax = -ps[0];
    PhaseGrid g(int(nx), int(np), xmax, pmax);
    return GridSymbol(g, std::move(vals));
}

} // namespace moyal
