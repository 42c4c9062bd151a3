#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ringmap/catalog.hpp"
#include "ringmap/errors.hpp"

namespace ringmap {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

Caps parse_caps(std::string_view text, Caps base) {
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("caps item without '=': " + item);
    std::string key = item.substr(0, eq);
    double value;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParameterError("bad caps value: " + item);
    }
    if (value < 0) throw ParameterError("negative caps value: " + item);
    if (key == "nodes")
      base.node_cap = static_cast<std::uint64_t>(value);
    else if (key == "seconds")
      base.seconds = value;
    else if (key == "states")
      base.state_cap = static_cast<std::uint64_t>(value);
    else if (key == "threads")
      base.threads = static_cast<int>(value);
    else
      throw ParameterError("unknown caps key: " + key);
  }
  return base;
}

Caps caps_from_env(Caps base) {
  if (const char* env = std::getenv("RINGMAP_CAPS")) return parse_caps(env, base);
  return base;
}

namespace {

ordered_json record_json(const MapRecord& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["n"] = r.n;
  j["inner_seq"] = r.inner_seq.to_string();
  j["outer_seq"] = r.outer_seq.to_string();
  j["V"] = r.V;
  j["E"] = r.E;
  j["F"] = r.F;
  j["aut_order"] = r.aut_order;
  j["self_complementary"] = r.self_complementary;
  j["two_paths"] = r.two_paths;
  j["non_polyhedral"] = r.non_polyhedral;
  j["canonical_hex"] = r.canonical.hex();
  return j;
}

CanonicalCode code_from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParameterError("odd-length canonical hex");
  // Ring-marked cubic codes carry six entries per vertex; entries exceed one
  // byte only once V > 255.
  const std::size_t narrow_entries = hex.size() / 2;
  int width = (narrow_entries % 6 == 0 && narrow_entries / 6 <= 255) ? 2 : 4;
  if (hex.size() % width != 0) throw ParameterError("canonical hex has a bad length");
  CanonicalCode code;
  for (std::size_t i = 0; i < hex.size(); i += width) {
    auto part = std::string(hex.substr(i, width));
    char* end = nullptr;
    unsigned long v = std::strtoul(part.c_str(), &end, 16);
    if (*end != '\0') throw ParameterError("non-hex character in canonical code");
    code.entries.push_back(static_cast<std::uint16_t>(v));
  }
  return code;
}

// Darts 3v+s; slot s of vertex v points at nbrs[v][s]. Rotation order is
// given by the slot order.
CombinatorialMap map_from_rotations(const std::vector<std::vector<int>>& nbrs) {
  const int V = static_cast<int>(nbrs.size());
  std::vector<int> sigma, alpha;
  std::vector<int> base(V + 1, 0);
  for (int v = 0; v < V; ++v) base[v + 1] = base[v] + static_cast<int>(nbrs[v].size());
  sigma.resize(base[V]);
  alpha.assign(base[V], -1);
  for (int v = 0; v < V; ++v) {
    int deg = static_cast<int>(nbrs[v].size());
    for (int s = 0; s < deg; ++s) {
      sigma[base[v] + s] = base[v] + (s + 1) % deg;
      int w = nbrs[v][s];
      if (w < 0 || w >= V || w == v) throw StructuralError("bad neighbour in rotation list");
      if (std::count(nbrs[v].begin(), nbrs[v].end(), w) != 1)
        throw StructuralError("multi-edge in rotation list");
      auto it = std::find(nbrs[w].begin(), nbrs[w].end(), v);
      if (it == nbrs[w].end()) throw StructuralError("rotation lists are not symmetric");
      alpha[base[v] + s] = base[w] + static_cast<int>(it - nbrs[w].begin());
    }
  }
  return CombinatorialMap(std::move(sigma), std::move(alpha));
}

}  // namespace

std::string to_json(const std::vector<MapRecord>& records) {
  std::vector<const MapRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    return a->canonical.hex() < b->canonical.hex();
  });
  ordered_json arr = ordered_json::array();
  for (auto* r : sorted) arr.push_back(record_json(*r));
  return arr.dump(2) + "\n";
}

std::vector<MapRecord> records_from_json(std::string_view text) {
  auto arr = ordered_json::parse(text);
  if (!arr.is_array()) throw ParameterError("catalog JSON must be an array");
  std::vector<MapRecord> out;
  for (const auto& j : arr) {
    MapRecord r;
    r.p = j.at("p");
    r.q = j.at("q");
    r.n = j.at("n");
    r.inner_seq = canonical_seq(BoundarySequence::parse(j.at("inner_seq").get<std::string>()));
    r.outer_seq = canonical_seq(BoundarySequence::parse(j.at("outer_seq").get<std::string>()));
    r.V = j.at("V");
    r.E = j.at("E");
    r.F = j.at("F");
    r.aut_order = j.at("aut_order");
    r.self_complementary = j.at("self_complementary");
    r.two_paths = j.at("two_paths");
    r.non_polyhedral = j.at("non_polyhedral");
    r.canonical = code_from_hex(j.at("canonical_hex").get<std::string>());
    out.push_back(std::move(r));
  }
  return out;
}

AssembledMap map_from_canonical_hex(std::string_view hex) {
  const CanonicalCode code = code_from_hex(hex);
  if (code.entries.empty() || code.entries.size() % 6 != 0)
    throw ParameterError("not a ring-marked cubic code");
  const int V = static_cast<int>(code.entries.size() / 6);
  std::vector<std::vector<int>> nbrs(V);
  std::vector<std::uint8_t> dart_mark(3 * V);
  for (int v = 0; v < V; ++v)
    for (int s = 0; s < 3; ++s) {
      nbrs[v].push_back(code.entries[6 * v + 2 * s] - 1);
      dart_mark[3 * v + s] = static_cast<std::uint8_t>(code.entries[6 * v + 2 * s + 1]);
    }
  AssembledMap out{map_from_rotations(nbrs), {}};
  const auto& m = out.map;
  // The recorded mark belongs to the face on one fixed side of each dart;
  // which side depends on the orientation the code was read in.
  for (int side = 0; side < 2; ++side) {
    std::vector<int> face_mark(m.num_faces(), -1);
    bool consistent = true;
    for (int d = 0; d < m.num_darts() && consistent; ++d) {
      int f = side == 0 ? m.face_of(d) : m.face_of(m.alpha(d));
      if (face_mark[f] == -1)
        face_mark[f] = dart_mark[d];
      else
        consistent = face_mark[f] == dart_mark[d];
    }
    if (!consistent) continue;
    for (int f = 0; f < m.num_faces(); ++f)
      if (face_mark[f] == 1) out.ring.push_back(f);
    break;
  }
  if (out.ring.empty()) throw ParameterError("canonical code carries no ring marks");
  // Put the ring in cyclic order.
  std::vector<int> order{out.ring[0]};
  std::set<int> left(out.ring.begin() + 1, out.ring.end());
  while (!left.empty()) {
    int cur = order.back(), pick = -1;
    for (int d : m.face_darts(cur)) {
      int g = m.face_of(m.alpha(d));
      if (left.count(g)) {
        pick = g;
        break;
      }
    }
    if (pick < 0) throw StructuralError("marked faces do not form a ring");
    order.push_back(pick);
    left.erase(pick);
  }
  out.ring = std::move(order);
  return out;
}

std::string to_planar_code(const std::vector<CombinatorialMap>& maps) {
  std::string out = ">>planar_code<<";
  for (const auto& m : maps) {
    if (m.num_vertices() > 255) throw ParameterError("planar_code needs V <= 255");
    out.push_back(static_cast<char>(m.num_vertices()));
    for (int v = 0; v < m.num_vertices(); ++v) {
      int d0 = m.vertex_dart(v), d = d0;
      do {
        out.push_back(static_cast<char>(m.head(d) + 1));
        d = m.sigma_inv(d);
      } while (d != d0);
      out.push_back('\0');
    }
  }
  return out;
}

std::vector<CombinatorialMap> from_planar_code(std::string_view bytes) {
  const std::string_view header = ">>planar_code<<";
  if (bytes.substr(0, header.size()) != header) throw ParameterError("missing planar_code header");
  std::vector<CombinatorialMap> out;
  std::size_t i = header.size();
  while (i < bytes.size()) {
    int V = static_cast<unsigned char>(bytes[i++]);
    std::vector<std::vector<int>> nbrs(V);
    for (int v = 0; v < V; ++v) {
      while (true) {
        if (i >= bytes.size()) throw ParameterError("truncated planar_code");
        int w = static_cast<unsigned char>(bytes[i++]);
        if (w == 0) break;
        nbrs[v].push_back(w - 1);
      }
      std::reverse(nbrs[v].begin(), nbrs[v].end());  // clockwise on disk
    }
    out.push_back(map_from_rotations(nbrs));
  }
  return out;
}

std::string to_dot(const CombinatorialMap& map, const std::vector<int>& ring,
                   const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (!ring.empty()) {
    out << "  // ring faces:";
    for (int f : ring) {
      out << " [";
      auto vs = map.face_vertices(f);
      for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
      out << "]";
    }
    out << "\n";
  }
  for (int d = 0; d < map.num_darts(); ++d)
    if (d < map.alpha(d)) out << "  " << map.tail(d) << " -- " << map.head(d) << ";\n";
  out << "}\n";
  return out.str();
}

ExportFormat parse_format(std::string_view name) {
  if (name == "planar_code") return ExportFormat::PlanarCode;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  throw ParameterError("unknown format '" + std::string(name) + "' (planar_code, dot, json)");
}

std::string catalog_file_name(int p, int q, int n) {
  return "M_p" + std::to_string(p) + "_q" + std::to_string(q) + "_n" + std::to_string(n) + ".json";
}

namespace {

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << data;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::vector<fs::path> export_catalog(const std::vector<MapRecord>& records, ExportFormat format,
                                     const fs::path& dir) {
  fs::create_directories(dir);
  std::map<std::tuple<int, int, int>, std::vector<MapRecord>> groups;
  for (const auto& r : records) groups[{r.p, r.q, r.n}].push_back(r);
  std::vector<fs::path> written;
  for (auto& [key, group] : groups) {
    auto [p, q, n] = key;
    std::sort(group.begin(), group.end(), [](const MapRecord& a, const MapRecord& b) {
      return a.canonical.hex() < b.canonical.hex();
    });
    std::string stem = catalog_file_name(p, q, n);
    stem = stem.substr(0, stem.size() - 5);
    if (format == ExportFormat::Json) {
      written.push_back(dir / (stem + ".json"));
      write_file(written.back(), to_json(group));
    } else if (format == ExportFormat::PlanarCode) {
      std::vector<CombinatorialMap> maps;
      for (const auto& r : group) maps.push_back(map_from_canonical_hex(r.canonical.hex()).map);
      written.push_back(dir / (stem + ".pc"));
      write_file(written.back(), to_planar_code(maps));
    } else {
      for (std::size_t i = 0; i < group.size(); ++i) {
        auto m = map_from_canonical_hex(group[i].canonical.hex());
        written.push_back(dir / (stem + "_" + std::to_string(i) + ".dot"));
        write_file(written.back(), to_dot(m.map, m.ring, "M" + std::to_string(i)));
      }
    }
  }
  return written;
}

PersistDiff persist(const Catalog& catalog, const fs::path& dir) {
  if (!catalog.complete) throw ResourceExhausted("refusing to persist a partial enumeration");
  fs::create_directories(dir);
  const fs::path path = dir / catalog_file_name(catalog.p, catalog.q, catalog.n);
  PersistDiff diff;
  std::set<std::string> now, before;
  for (const auto& e : catalog.entries) now.insert(e.record.canonical.hex());
  if (fs::exists(path)) {
    diff.existed = true;
    for (const auto& r : records_from_json(read_file(path))) before.insert(r.canonical.hex());
  }
  std::set_difference(now.begin(), now.end(), before.begin(), before.end(),
                      std::back_inserter(diff.added));
  std::set_difference(before.begin(), before.end(), now.begin(), now.end(),
                      std::back_inserter(diff.removed));
  write_file(path, to_json(records_of(catalog)));
  return diff;
}

}  // namespace ringmap
