#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "pareto.hpp"
#include "strategies.hpp"

namespace moqc {

namespace detail {

inline nlohmann::json witness_labels(const Graph& g, const VertexSet& s) {
    std::vector<long long> labels;
    labels.reserve(s.ids().size());
    for (int v : s.ids()) labels.push_back(g.orig_label[v]);
    std::sort(labels.begin(), labels.end());
    return nlohmann::json(labels);
}

inline nlohmann::json mos_entry_json(const Graph& g, const FrontierEntry& e) {
    nlohmann::json j;
    j["edges"] = e.p.m;
    j["vertices"] = e.p.k;
    if (e.p.k >= 2) {
        Rational d(2 * e.p.m, (long long)e.p.k * (e.p.k - 1));
        j["density"] = d.to_double();
        j["density_exact"] = d.to_string();
    }
    j["witness"] = witness_labels(g, e.witness);
    j["provenance"] = to_string(e.prov);
    j["certificate"] = to_string(e.cert);
    j["efficient"] = e.efficient;
    return j;
}

inline nlohmann::json moqc_entry_json(const Graph& g, const MoqcEntry& e) {
    nlohmann::json j;
    j["density"] = e.p.density.to_double();
    j["density_exact"] = e.p.density.to_string();
    j["vertices"] = e.p.k;
    j["edges"] = e.m;
    j["witness"] = witness_labels(g, e.witness);
    j["provenance"] = to_string(e.prov);
    j["certificate"] = to_string(e.cert);
    return j;
}

}  // namespace detail

inline nlohmann::json report_to_json(const RunReport& r) {
    nlohmann::json j;
    j["strategy"] = r.strategy;
    j["n"] = r.n;
    j["m"] = r.m;
    j["timed_out"] = r.timed_out;
    j["omega_hat"] = r.omega_hat;
    j["points_prefilter"] = r.points_prefilter;
    j["frontier_size"] = r.frontier_size;
    j["moqc_size"] = r.moqc_size;
    j["count_ds"] = r.count_ds;
    j["count_mind"] = r.count_mind;
    j["count_maxd"] = r.count_maxd;
    j["count_eps"] = r.count_eps;
    j["gen_mind"] = r.gen_mind;
    j["gen_maxd"] = r.gen_maxd;
    j["cert_p8"] = r.cert_p8;
    j["cert_p9"] = r.cert_p9;
    j["cert_p10"] = r.cert_p10;
    j["cert_p11i"] = r.cert_p11i;
    j["cert_p11ii"] = r.cert_p11ii;
    j["uncertified"] = r.uncertified;
    j["unproven_weff"] = r.unproven_weff;
    j["edks_calls"] = r.edks_calls;
    j["ws_calls"] = r.ws_calls;
    j["bnb_nodes"] = r.bnb_nodes;
    j["bnb_pruned"] = r.bnb_pruned;
    j["t_total"] = r.t_total;
    j["t_edks"] = r.t_edks;
    j["t_ws"] = r.t_ws;
    j["pct_ds"] = r.pct_ds();
    j["pct_mind"] = r.pct_mind();
    j["pct_maxd"] = r.pct_maxd();
    j["pct_eps"] = r.pct_eps();
    j["pct_p8"] = r.pct_p8();
    j["pct_p9"] = r.pct_p9();
    j["pct_p10"] = r.pct_p10();
    j["pct_p11i"] = r.pct_p11i();
    j["pct_p11ii"] = r.pct_p11ii();
    j["pct_unproven"] = r.pct_unproven();
    return j;
}

inline nlohmann::json frontier_to_json(const Graph& g, const std::string& instance_path,
                                       const MosResult& res) {
    nlohmann::json j;
    j["format"] = "moqc-frontier";
    j["version"] = 1;
    j["instance"] = {{"path", instance_path}, {"n", g.n}, {"m", g.m}};
    j["strategy"] = res.report.strategy;
    j["status"] = res.report.timed_out ? "timeout" : "ok";
    nlohmann::json mos = nlohmann::json::array();
    const LabeledFrontier& src = res.report.timed_out ? res.prefilter : res.frontier;
    for (const FrontierEntry& e : src.entries()) mos.push_back(detail::mos_entry_json(g, e));
    j["mos"] = mos;
    nlohmann::json mq = nlohmann::json::array();
    for (const MoqcEntry& e : res.moqc) mq.push_back(detail::moqc_entry_json(g, e));
    j["moqc"] = mq;
    j["report"] = report_to_json(res.report);
    return j;
}

inline nlohmann::json frontier_to_json(const Graph& g, const std::string& instance_path,
                                       const MoqcResult& res) {
    nlohmann::json j;
    j["format"] = "moqc-frontier";
    j["version"] = 1;
    j["instance"] = {{"path", instance_path}, {"n", g.n}, {"m", g.m}};
    j["strategy"] = res.report.strategy;
    j["status"] = res.report.timed_out ? "timeout" : "ok";
    j["mos"] = nlohmann::json::array();
    nlohmann::json mq = nlohmann::json::array();
    for (const MoqcEntry& e : res.points) mq.push_back(detail::moqc_entry_json(g, e));
    j["moqc"] = mq;
    j["report"] = report_to_json(res.report);
    return j;
}

// One header line plus one data row; mirrors the summary tables the solver
// is usually compared against.
inline std::string report_csv(const RunReport& r) {
    std::ostringstream os;
    os << "strategy,n,m,status,omega_hat,points_prefilter,frontier_size,moqc_size,"
          "pct_ds,pct_mind,pct_maxd,pct_eps,"
          "pct_p8,pct_p9,pct_p10,pct_p11i,pct_p11ii,pct_unproven,"
          "edks_calls,ws_calls,bnb_nodes,t_total,t_edks,t_ws\n";
    os << r.strategy << ',' << r.n << ',' << r.m << ','
       << (r.timed_out ? "timeout" : "ok") << ',' << r.omega_hat << ','
       << r.points_prefilter << ',' << r.frontier_size << ',' << r.moqc_size << ',';
    os << std::fixed << std::setprecision(2);
    os << r.pct_ds() << ',' << r.pct_mind() << ',' << r.pct_maxd() << ',' << r.pct_eps() << ','
       << r.pct_p8() << ',' << r.pct_p9() << ',' << r.pct_p10() << ',' << r.pct_p11i() << ','
       << r.pct_p11ii() << ',' << r.pct_unproven() << ',';
    os << r.edks_calls << ',' << r.ws_calls << ',' << r.bnb_nodes << ',';
    os << std::setprecision(4) << r.t_total << ',' << r.t_edks << ',' << r.t_ws << '\n';
    return os.str();
}

// Tab-separated rows for plotting, derived from a saved frontier document.
// MOS rows are preferred; a document from one of the direct quasi-clique
// methods only has density points, which are emitted instead.
inline std::string plotdata_tsv(const nlohmann::json& doc, int precision = 6) {
    if (!doc.contains("mos") || !doc.contains("moqc"))
        throw invalid_input("not a frontier document");
    std::ostringstream os;
    os << "edges\tvertices\tdensity\tprovenance\tcertificate\n";
    os << std::fixed << std::setprecision(precision);
    const nlohmann::json& mos = doc["mos"];
    const nlohmann::json& mq = doc["moqc"];
    const nlohmann::json& rows = mos.empty() ? mq : mos;
    if (rows.empty()) throw invalid_input("frontier document holds no points");
    for (const auto& e : rows) {
        os << e["edges"].get<long long>() << '\t' << e["vertices"].get<int>() << '\t';
        if (e.contains("density"))
            os << e["density"].get<double>();
        else
            os << "";
        os << '\t' << e["provenance"].get<std::string>() << '\t'
           << e["certificate"].get<std::string>() << '\n';
    }
    return os.str();
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path, 0, e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write " + path);
    out << text;
}

}  // namespace moqc
