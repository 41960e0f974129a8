#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace navstat {

struct Episode {
    std::string episode_id;
    std::vector<std::array<double, 3>> coords; // one (x,y,z) per time step
};

struct EpisodeSet {
    std::string agent_id;
    std::vector<Episode> episodes;
};

// Trajectory-log format: JSON Lines, one object per episode:
//   {"episode_id": str, "agent_id": str, "coords": [[x,y,z], ...]}
// Line order is episode order.  A file must contain a single agent.
EpisodeSet load_episodes(std::istream& in, const std::string& name = "<stream>");
EpisodeSet load_episodes_file(const std::string& path);

void save_episodes(const EpisodeSet& set, std::ostream& out);
void save_episodes_file(const EpisodeSet& set, const std::string& path);

} // namespace navstat
