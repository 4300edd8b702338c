#include "backbone/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace backbone {

std::string format_double(double value) {
    if (std::isnan(value)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

constexpr const char* kHeader =
    "method,local,ratio,kept_edges,largest_component_ratio,diameter_quotient,"
    "clustering_deviation,spearman_degree,spearman_betweenness,spearman_pagerank,"
    "conductance,conductance_change,fragmentation,ari,scoring_seconds";

nlohmann::ordered_json to_json_value(double v) {
    // NaN serializes as null either way; being explicit keeps the intent.
    if (std::isnan(v)) return nullptr;
    return v;
}

}  // namespace

std::string report_csv(std::span<const AnalysisRecord> records) {
    std::string out = kHeader;
    out += '\n';
    for (const auto& r : records) {
        out += r.method;
        out += ',';
        out += r.local ? '1' : '0';
        out += ',';
        out += format_double(r.ratio);
        out += ',';
        out += std::to_string(r.kept_edges);
        for (double v : {r.largest_component_ratio, r.diameter_quotient,
                         r.clustering_deviation, r.spearman_degree, r.spearman_betweenness,
                         r.spearman_pagerank, r.conductance, r.conductance_change,
                         r.fragmentation, r.ari, r.scoring_seconds}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::string report_json(std::span<const AnalysisRecord> records) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["method"] = r.method;
        row["local"] = r.local;
        row["ratio"] = r.ratio;
        row["kept_edges"] = r.kept_edges;
        row["largest_component_ratio"] = to_json_value(r.largest_component_ratio);
        row["diameter_quotient"] = to_json_value(r.diameter_quotient);
        row["clustering_deviation"] = to_json_value(r.clustering_deviation);
        row["spearman_degree"] = to_json_value(r.spearman_degree);
        row["spearman_betweenness"] = to_json_value(r.spearman_betweenness);
        row["spearman_pagerank"] = to_json_value(r.spearman_pagerank);
        row["conductance"] = to_json_value(r.conductance);
        row["conductance_change"] = to_json_value(r.conductance_change);
        row["fragmentation"] = to_json_value(r.fragmentation);
        row["ari"] = to_json_value(r.ari);
        row["scoring_seconds"] = to_json_value(r.scoring_seconds);
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

}  // namespace backbone
