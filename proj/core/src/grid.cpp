#include "mexplore/grid.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mexplore {

namespace {

const char* kDefaultMap15 =
    "###############\n"
    "####...A...####\n"
    "####.......####\n"
    "####.......####\n"
    "#######W#######\n"
    "#...###.###...#\n"
    "#...##.S.##...#\n"
    "#D..W.S.S.W..B#\n"
    "#...##.S.##...#\n"
    "#...###.###...#\n"
    "#######W#######\n"
    "####.......####\n"
    "####.......####\n"
    "####...C...####\n"
    "###############\n";

const char* kSmokeMap9 =
    "#########\n"
    "#A.....B#\n"
    "#.##.##.#\n"
    "#..#.#..#\n"
    "#..SWS..#\n"
    "#..#.#..#\n"
    "#.##.##.#\n"
    "#C.....D#\n"
    "#########\n";

const char* kCorridorMap11 =
    "###########\n"
    "#S.......A#\n"
    "###########\n";

}  // namespace

bool is_builtin_map(const std::string& name) {
  return name == "default15" || name == "smoke9" || name == "corridor11";
}

const std::string& builtin_map(const std::string& name) {
  static const std::map<std::string, std::string> maps = {
      {"default15", kDefaultMap15},
      {"smoke9", kSmokeMap9},
      {"corridor11", kCorridorMap11},
  };
  auto it = maps.find(name);
  if (it == maps.end()) throw std::invalid_argument("unknown builtin map: " + name);
  return it->second;
}

MapSpec MapSpec::from_ascii(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.size() < 3) throw std::invalid_argument("map: needs at least 3 rows");

  MapSpec m;
  m.height = static_cast<int>(rows.size());
  m.width = static_cast<int>(rows[0].size());
  if (m.width < 3) throw std::invalid_argument("map: needs at least 3 columns");
  m.cells.assign(static_cast<size_t>(m.width) * m.height, CellKind::Wall);
  m.treasure_id.assign(m.cells.size(), -1);
  m.wormhole_id.assign(m.cells.size(), -1);

  std::map<int, Cell> treasures;  // id -> position, detects duplicates
  for (int y = 0; y < m.height; ++y) {
    if (static_cast<int>(rows[y].size()) != m.width)
      throw std::invalid_argument("map: ragged row " + std::to_string(y));
    for (int x = 0; x < m.width; ++x) {
      const char c = rows[y][x];
      const size_t idx = static_cast<size_t>(y) * m.width + x;
      switch (c) {
        case '#': m.cells[idx] = CellKind::Wall; break;
        case '.': m.cells[idx] = CellKind::Floor; break;
        case 'S':
          m.cells[idx] = CellKind::Spawn;
          m.spawn_cells.push_back({x, y});
          break;
        case 'W':
          m.cells[idx] = CellKind::Wormhole;
          m.wormhole_id[idx] = static_cast<int>(m.wormhole_positions.size());
          m.wormhole_positions.push_back({x, y});
          break;
        case 'A':
        case 'B':
        case 'C':
        case 'D': {
          const int id = c - 'A';
          if (treasures.count(id))
            throw std::invalid_argument(std::string("map: duplicate treasure ") + c);
          treasures[id] = {x, y};
          m.cells[idx] = CellKind::Treasure;
          m.treasure_id[idx] = id;
          break;
        }
        default:
          throw std::invalid_argument(std::string("map: unknown character '") + c + "'");
      }
      const bool border = x == 0 || y == 0 || x == m.width - 1 || y == m.height - 1;
      if (border && c != '#')
        throw std::invalid_argument("map: border must be all walls");
    }
  }

  // Treasure ids must form a contiguous prefix so they can index vectors.
  for (int id = 0; id < static_cast<int>(treasures.size()); ++id) {
    auto it = treasures.find(id);
    if (it == treasures.end())
      throw std::invalid_argument("map: treasure ids must start at A without gaps");
    m.treasure_positions.push_back(it->second);
  }
  if (m.spawn_cells.empty()) throw std::invalid_argument("map: no spawn cells");
  if (m.treasure_positions.empty()) throw std::invalid_argument("map: no treasures");
  return m;
}

MapSpec MapSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("map: cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_ascii(ss.str());
}

std::string MapSpec::to_ascii() const {
  std::string out;
  out.reserve(static_cast<size_t>(height) * (width + 1));
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const size_t idx = static_cast<size_t>(y) * width + x;
      char c = '#';
      switch (cells[idx]) {
        case CellKind::Wall: c = '#'; break;
        case CellKind::Floor: c = '.'; break;
        case CellKind::Spawn: c = 'S'; break;
        case CellKind::Treasure: c = static_cast<char>('A' + treasure_id[idx]); break;
        case CellKind::Wormhole: c = 'W'; break;
      }
      out.push_back(c);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace mexplore
