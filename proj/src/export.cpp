#include "meshpat/export.hpp"

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "meshpat/text.hpp"

namespace meshpat {

std::string interval_json(const Interval& iv) {
    nlohmann::ordered_json j;
    j["bottom"] = format_pattern(iv.bottom);
    j["top"] = format_pattern(iv.top);
    std::vector<std::string> names;
    for (const MeshPattern& m : iv.elements) names.push_back(format_pattern(m));
    j["elements"] = names;
    auto covers = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : iv.covers)
        covers.push_back({names[lo], names[hi]});
    j["covers"] = std::move(covers);
    std::vector<long long> mu = mobius_all(iv);
    nlohmann::ordered_json mj;
    for (int i = 0; i < iv.size(); ++i) mj[names[i]] = mu[i];
    j["mobius"] = std::move(mj);
    ChainStats st = chain_stats(iv);
    nlohmann::ordered_json hist;
    for (const auto& [len, cnt] : st.lengths) hist[std::to_string(len)] = cnt;
    j["stats"] = {{"dimension", st.dimension}, {"pure", st.is_pure},
                  {"chain_lengths", std::move(hist)}};
    return j.dump(2) + "\n";
}

std::string interval_dot(const Interval& iv) {
    std::string out = "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
    std::vector<std::string> names;
    for (const MeshPattern& m : iv.elements) names.push_back(format_pattern(m));
    for (const std::string& n : names) out += "  \"" + n + "\";\n";
    for (const auto& [lo, hi] : iv.covers)
        out += "  \"" + names[lo] + "\" -> \"" + names[hi] + "\";\n";
    std::map<std::pair<int, int>, std::vector<int>> levels;
    for (int i = 0; i < iv.size(); ++i)
        levels[{iv.elements[i].size(), iv.elements[i].shading.count()}].push_back(i);
    for (const auto& [key, members] : levels) {
        out += "  { rank=same;";
        for (int i : members) out += " \"" + names[i] + "\";";
        out += " }\n";
    }
    out += "}\n";
    return out;
}

} // namespace meshpat
