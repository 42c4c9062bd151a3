#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringmap/assembler.hpp"
#include "ringmap/paramdomain.hpp"

namespace ringmap {

struct Caps {
  /// Fill nodes per sequence class (one length k, or one sequence pair).
  std::uint64_t node_cap = 100'000'000;
  /// Wall-clock budget for one enumerate_maps run.
  double seconds = 3600;
  /// Growth states per sequence class.
  std::uint64_t state_cap = 50'000'000;
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;
};

/// "nodes=1e9,seconds=600,states=1e8,threads=4"; unknown keys are an error.
Caps parse_caps(std::string_view text, Caps base = {});
/// Applies RINGMAP_CAPS when set.
Caps caps_from_env(Caps base = {});

struct MapRecord {
  int p = 0, q = 0, n = 0;
  /// Canonical sequences; inner has k <= k' (ties: smaller sequence).
  BoundarySequence inner_seq, outer_seq;
  CanonicalCode canonical;  // ring faces marked
  int V = 0, E = 0, F = 0;
  int aut_order = 0;  // ring-preserving automorphisms, reflections included
  bool self_complementary = false;  // I_n and O_n isomorphic
  bool two_paths = false;
  bool non_polyhedral = false;
  int x_inner = 0, x_outer = 0;
};

/// Validates a finished map with its ring and derives its record. Throws
/// StructuralError or NotARing when the map is not an M_n(p,q) on that ring.
MapRecord make_record(const CombinatorialMap& map, const std::vector<int>& ring, int p, int q);

struct CatalogEntry {
  MapRecord record;
  AssembledMap assembled;
  /// The sequence pair and labelled filling pair that first produced it.
  BoundarySequence gen_inner, gen_outer;
  std::size_t alignment = 0;
};

struct Catalog {
  int p = 0, q = 0, n = 0;
  Admissibility admissibility;
  bool complete = true;
  std::string note;  // why the run is partial
  std::vector<CatalogEntry> entries;  // sorted by canonical code
  std::size_t sequence_pairs = 0;     // pentagonal pairs (a, complement)
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// Every M_n(p,q) up to isomorphism of the (map, ring) pair. Partial runs
/// come back with complete = false; their entries are a lower bound.
Catalog enumerate_maps(int p, int q, int n, const Caps& caps = {});

// ---- verification ----

enum class ClaimStatus { Pass, Fail, Exhausted };
const char* to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Fail;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<Claim> claims;
  bool all_passed() const;
  bool any_failed() const;
  /// 0 all pass, 1 any failure, 2 inconclusive.
  int exit_code() const;
};

enum class VerifyScope { Fast, Full };
VerificationReport verify_theorem(VerifyScope scope, const Caps& caps = {});

/// Reference pentagonal sequences for k <= 9, n >= 2: (k, n) -> sequences.
std::vector<std::pair<std::pair<int, int>, std::vector<std::string>>> reference_pentagonal_table();

struct ExploreResult {
  int p, q, n;
  Admissibility admissibility;
  bool complete = false;
  std::size_t count = 0;
  std::string verdict;  // "exists", "none", "inconclusive", "inadmissible"
  std::string note;
  double seconds = 0;
};

/// Exploratory runs on parameters left open; results are not ground truth.
std::vector<ExploreResult> explore_open(int p, int q, int n_min, int n_max, const Caps& caps = {});

// ---- formats ----

std::string to_json(const std::vector<MapRecord>& records);
std::vector<MapRecord> records_from_json(std::string_view text);
/// Header ">>planar_code<<", then per map V and 1-based neighbour lists in
/// clockwise order, each closed by 0. V <= 255.
std::string to_planar_code(const std::vector<CombinatorialMap>& maps);
std::vector<CombinatorialMap> from_planar_code(std::string_view bytes);
/// Undirected graph; ring faces listed in a comment.
std::string to_dot(const CombinatorialMap& map, const std::vector<int>& ring = {},
                   const std::string& name = "M");

/// Rebuilds the map (and its marked ring faces) from a ring-marked code.
AssembledMap map_from_canonical_hex(std::string_view hex);

std::vector<MapRecord> records_of(const Catalog& catalog);

enum class ExportFormat { PlanarCode, Dot, Json };
ExportFormat parse_format(std::string_view name);

/// Writes the catalog in `format` under `dir`; returns the paths written.
std::vector<std::filesystem::path> export_catalog(const std::vector<MapRecord>& records,
                                                  ExportFormat format,
                                                  const std::filesystem::path& dir);

/// results dir file name for one (p, q, n).
std::string catalog_file_name(int p, int q, int n);

struct PersistDiff {
  bool existed = false;
  std::vector<std::string> added, removed;  // canonical hex
  bool changed() const { return !added.empty() || !removed.empty(); }
};

/// Writes the JSON catalog for a complete run, comparing with the previous
/// file first.
PersistDiff persist(const Catalog& catalog, const std::filesystem::path& dir);

}  // namespace ringmap
