#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace navstat {

// Segments are 4x4 cell blocks; 1 cell = 1 world unit, cell centers at
// integer (x, 0, z).
constexpr int kSeg = 4;

struct MazeConfig {
    int segments_min = 5;
    int segments_max = 30;
    int spawn_points = 16; // M; fixed at 16 by the 4x4 segment geometry
    double p_token = 0.75;
    double p_enemy = 0.25;
    double enemy_visual_radius = 5.0; // in segment units
    int max_steps = 2000;
    uint64_t seed = 0;
};

struct Cell {
    int x = 0;
    int z = 0;
    auto operator<=>(const Cell&) const = default;
};

inline uint64_t cell_key(Cell c) {
    return ((uint64_t)(uint32_t)c.x << 32) | (uint32_t)c.z;
}

struct MazeInstance {
    std::vector<Cell> segments; // segment-lattice coordinates, sorted
    std::vector<Cell> tokens;
    std::vector<Cell> enemies;
    Cell start{};
    std::unordered_set<uint64_t> platform;

    bool on_platform(Cell c) const { return platform.count(cell_key(c)) != 0; }

    // Corner walls: crossing a segment boundary is blocked at the two corner
    // lanes of each side ((perpendicular coordinate mod 4) in {0, 3}); the
    // middle two lanes are doorways.  Walls stand on outer boundaries too,
    // so off-platform exits only exist through doorway lanes.
    static bool edge_blocked(Cell a, Cell b) {
        if (a.x / kSeg == b.x / kSeg && a.z / kSeg == b.z / kSeg) return false;
        int lane = (a.x != b.x) ? a.z : a.x;
        lane %= kSeg;
        return lane == 0 || lane == kSeg - 1;
    }

    void rebuild_platform();
};

// Segment count N ~ U(segments_min, segments_max); connected polyomino
// growth; per segment at most one token (probability p_token, position
// uniform over the segment's enemy-free cells); per cell an enemy with
// probability p_enemy / M; start uniform over the first segment's enemy-free
// cells.
MazeInstance generate_maze(const MazeConfig& cfg);

std::string maze_to_json(const MazeInstance& maze);
MazeInstance maze_from_json(const std::string& text);

std::string maze_config_to_json(const MazeConfig& cfg);
MazeConfig maze_config_from_json(const std::string& text);
MazeConfig maze_config_from_file(const std::string& path);

} // namespace navstat
