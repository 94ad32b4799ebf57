#include "mubkit/io.hpp"

#include <fstream>
#include <sstream>

namespace mubkit {

using nlohmann::json;

json basis_set_to_json(const BasisSet& s) {
    json jb = json::array();
    for (const auto& b : s.bases) {
        json vecs = json::array();
        for (const auto& v : b.vectors) {
            json amps = json::array();
            for (const auto& a : v.amp) amps.push_back({a.real(), a.imag()});
            vecs.push_back(std::move(amps));
        }
        jb.push_back({{"label", b.label}, {"vectors", std::move(vecs)}});
    }
    return {{"d", s.dim}, {"provenance", s.provenance}, {"bases", std::move(jb)}};
}

BasisSet basis_set_from_json(const json& j) {
    BasisSet s;
    s.dim = j.at("d").get<std::size_t>();
    s.provenance = j.value("provenance", "");
    for (const auto& jb : j.at("bases")) {
        Basis b;
        b.label = jb.value("label", "");
        for (const auto& jv : jb.at("vectors")) {
            CVector v;
            v.amp.reserve(jv.size());
            for (const auto& ja : jv) {
                if (!ja.is_array() || ja.size() != 2)
                    throw std::runtime_error("basis_set_from_json: amplitude must be [re, im]");
                v.amp.emplace_back(ja[0].get<double>(), ja[1].get<double>());
            }
            if (v.dim() != s.dim)
                throw std::runtime_error("basis_set_from_json: vector length disagrees with d");
            b.vectors.push_back(std::move(v));
        }
        if (b.dim() != s.dim)
            throw std::runtime_error("basis_set_from_json: basis size disagrees with d");
        s.bases.push_back(std::move(b));
    }
    return s;
}

json design_to_json(const ResolvableDesign& d) {
    json classes = json::array();
    for (const auto& cls : d.classes) {
        json jc = json::array();
        for (const auto& b : cls) jc.push_back(b);
        classes.push_back(std::move(jc));
    }
    return {{"d", d.point_count}, {"classes", std::move(classes)}, {"provenance", d.provenance}};
}

ResolvableDesign design_from_json(const json& j) {
    ResolvableDesign d;
    d.point_count = j.at("d").get<int>();
    d.provenance = j.value("provenance", "");
    for (const auto& jc : j.at("classes")) {
        ParallelClass cls;
        for (const auto& jb : jc) cls.push_back(jb.get<Block>());
        d.classes.push_back(std::move(cls));
    }
    return d;
}

json qkd_outcome_to_json(const QkdOutcome& o) {
    return {{"raw_rate", o.raw_rate},
            {"sift_error", o.sift_error},
            {"trials", o.trials},
            {"std_error", o.std_error},
            {"seed", o.seed}};
}

QkdOutcome qkd_outcome_from_json(const json& j) {
    QkdOutcome o;
    o.raw_rate = j.at("raw_rate").get<double>();
    o.sift_error = j.at("sift_error").get<double>();
    o.trials = j.at("trials").get<long long>();
    o.std_error = j.at("std_error").get<double>();
    o.seed = j.at("seed").get<std::uint64_t>();
    return o;
}

namespace {

json omega_map_to_json(const std::map<double, double>& omega) {
    json arr = json::array();
    for (const auto& [t, v] : omega) arr.push_back({{"t", t}, {"value", v}});
    return arr;
}

}  // namespace

json measure_report_to_json(const MeasureReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"l", p.l},
                         {"m", p.m},
                         {"omega_t", omega_map_to_json(p.omega_t)},
                         {"tau", p.tau},
                         {"sigma", p.sigma},
                         {"d_squared", p.d_squared},
                         {"gamma_squared", p.gamma_squared},
                         {"delta", p.delta_pair}});
    json j{{"d", r.dim},
           {"basis_count", r.basis_count},
           {"provenance", r.provenance},
           {"pairs", std::move(pairs)},
           {"omega_t", omega_map_to_json(r.omega_t)},
           {"tau", r.tau},
           {"sigma", r.sigma},
           {"asd", r.asd},
           {"asd_grand_mean", r.asd_grand_mean},
           {"d_squared_max", r.d_squared_max},
           {"delta", r.delta},
           {"epsilon", r.epsilon},
           {"frame_potential_2", r.frame_potential_2},
           {"sym_dim_2", r.sym_dim_2},
           {"design_defect_2", r.design_defect_2},
           {"log_volume_ratio", r.log_volume_ratio},
           {"classification",
            {{"label", to_string(r.classification.label)},
             {"beta", r.classification.beta},
             {"beta_min", r.classification.beta_min},
             {"delta", r.classification.delta}}}};
    if (r.gram_log_vol) j["gram_log_volume"] = *r.gram_log_vol;
    return j;
}

std::string measure_report_to_csv(const MeasureReport& r) {
    std::ostringstream os;
    os.precision(15);
    os << "l,m,omega_2,tau,sigma,d2,gamma2\n";
    for (const auto& p : r.pairs) {
        const auto it = p.omega_t.find(2.0);
        os << p.l << ',' << p.m << ',' << (it != p.omega_t.end() ? it->second : 0.0) << ','
           << p.tau << ',' << p.sigma << ',' << p.d_squared << ',' << p.gamma_squared << '\n';
    }
    const auto it = r.omega_t.find(2.0);
    os << "*,*," << (it != r.omega_t.end() ? it->second : 0.0) << ',' << r.tau << ','
       << r.sigma << ',' << r.asd << ",\n";
    return os.str();
}

void save_json(const json& j, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << j.dump(2) << '\n';
    if (!f) throw std::runtime_error("write failed: " + path);
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace mubkit
