#include "navstat/episode.hpp"
#include "navstat/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace navstat {

using nlohmann::json;

EpisodeSet load_episodes(std::istream& in, const std::string& name) {
    EpisodeSet set;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            throw NavError(name + ": line " + std::to_string(lineno) +
                           ": malformed JSON record: " + e.what());
        }
        auto fail = [&](const std::string& why) -> NavError {
            return NavError(name + ": line " + std::to_string(lineno) + ": " + why);
        };
        if (!rec.is_object() || !rec.contains("episode_id") || !rec.contains("agent_id") ||
            !rec.contains("coords"))
            throw fail("record must have episode_id, agent_id and coords");
        if (!rec["episode_id"].is_string() || !rec["agent_id"].is_string())
            throw fail("episode_id and agent_id must be strings");
        if (!rec["coords"].is_array() || rec["coords"].empty())
            throw fail("coords must be a non-empty array of [x,y,z] points");

        Episode ep;
        ep.episode_id = rec["episode_id"].get<std::string>();
        ep.coords.reserve(rec["coords"].size());
        for (const auto& pt : rec["coords"]) {
            if (!pt.is_array() || pt.size() != 3)
                throw fail("each coordinate must be a 3-element array");
            std::array<double, 3> c{};
            for (int k = 0; k < 3; ++k) {
                if (!pt[k].is_number())
                    throw fail("non-numeric coordinate component");
                c[(size_t)k] = pt[k].get<double>();
            }
            ep.coords.push_back(c);
        }

        std::string agent = rec["agent_id"].get<std::string>();
        if (set.episodes.empty()) {
            set.agent_id = agent;
        } else if (agent != set.agent_id) {
            throw fail("mixed agent_ids in one log ('" + set.agent_id + "' vs '" + agent +
                       "'); split the file per agent");
        }
        set.episodes.push_back(std::move(ep));
    }
    if (set.episodes.empty())
        throw NavError(name + ": empty trajectory log (no episode records)");
    return set;
}

EpisodeSet load_episodes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NavError("cannot open trajectory log '" + path + "'");
    return load_episodes(in, path);
}

static void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void save_episodes(const EpisodeSet& set, std::ostream& out) {
    std::string line;
    for (const auto& ep : set.episodes) {
        line.clear();
        line += "{\"episode_id\":\"" + ep.episode_id + "\",\"agent_id\":\"" + set.agent_id +
                "\",\"coords\":[";
        for (size_t i = 0; i < ep.coords.size(); ++i) {
            if (i) line += ',';
            line += '[';
            append_number(line, ep.coords[i][0]);
            line += ',';
            append_number(line, ep.coords[i][1]);
            line += ',';
            append_number(line, ep.coords[i][2]);
            line += ']';
        }
        line += "]}\n";
        out << line;
    }
}

void save_episodes_file(const EpisodeSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw NavError("cannot write trajectory log '" + path + "'");
    save_episodes(set, out);
}

} // namespace navstat
