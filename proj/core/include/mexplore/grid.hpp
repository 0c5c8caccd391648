#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mexplore {

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

struct CellHash {
  size_t operator()(const Cell& c) const {
    return std::hash<uint64_t>()((static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 32) |
                                 static_cast<uint32_t>(c.y));
  }
};

enum class CellKind : uint8_t { Wall, Floor, Spawn, Treasure, Wormhole };

// Static map geometry. Treasure ids follow the letters A..D, wormhole ids
// follow row-major scan order.
struct MapSpec {
  int width = 0;
  int height = 0;
  std::vector<CellKind> cells;               // row-major, height*width
  std::vector<int> treasure_id;              // -1 where not a treasure
  std::vector<Cell> treasure_positions;      // indexed by treasure id
  std::vector<Cell> wormhole_positions;      // indexed by wormhole id
  std::vector<int> wormhole_id;              // -1 where not a wormhole
  std::vector<Cell> spawn_cells;             // row-major scan order

  CellKind at(int x, int y) const { return cells[static_cast<size_t>(y) * width + x]; }
  bool is_wall(int x, int y) const { return at(x, y) == CellKind::Wall; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  int n_treasures() const { return static_cast<int>(treasure_positions.size()); }
  int n_wormholes() const { return static_cast<int>(wormhole_positions.size()); }

  // Parses the ASCII grid format: '#' wall, '.' floor, 'S' spawn,
  // 'A'-'D' treasures 0-3, 'W' wormhole. Rectangular with a full '#' border.
  // Throws std::invalid_argument on any malformed input.
  static MapSpec from_ascii(const std::string& text);
  static MapSpec load_file(const std::string& path);
  std::string to_ascii() const;
};

// Built-in maps, addressable by name in run configs.
// "default15": 15x15, central spawn room, four wormhole-guarded corridors
//              leading to treasure rooms.
// "smoke9":    small 9x9 four-treasure map for quick runs.
// "corridor11": single-agent corridor with one treasure.
const std::string& builtin_map(const std::string& name);
bool is_builtin_map(const std::string& name);

}  // namespace mexplore
