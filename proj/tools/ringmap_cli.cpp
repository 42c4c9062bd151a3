// ringmap: enumerate and check 3-valent maps with a ring of q-gons.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ringmap/catalog.hpp"
#include "ringmap/errors.hpp"
#include "ringmap/patchfill.hpp"

using namespace ringmap;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInconclusive = 2;

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("bad range '" + text + "' (expected A..B)");
  }
}

std::string triple(int p, int q, int n) {
  return "M_" + std::to_string(n) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void print_catalog(const Catalog& cat) {
  std::printf("%s: %s, %zu map(s), %zu sequence pair(s), %llu nodes, %.2fs%s\n",
              triple(cat.p, cat.q, cat.n).c_str(), cat.admissibility.to_string().c_str(),
              cat.entries.size(), cat.sequence_pairs, static_cast<unsigned long long>(cat.nodes),
              cat.seconds, cat.complete ? "" : "  [PARTIAL]");
  if (!cat.complete) std::printf("  partial: %s\n", cat.note.c_str());
  for (const auto& e : cat.entries) {
    const auto& r = e.record;
    std::printf("  V=%d E=%d F=%d aut=%d inner=%s outer=%s x=%d+%d%s%s%s\n", r.V, r.E, r.F,
                r.aut_order, r.inner_seq.to_string().c_str(), r.outer_seq.to_string().c_str(),
                r.x_inner, r.x_outer, r.self_complementary ? " self-complementary" : "",
                r.two_paths ? " two-paths" : "", r.non_polyhedral ? " non-polyhedral" : "");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rings of q-gons in 3-valent planar maps: domains, fillings, catalogs."};
  app.require_subcommand(1);
  app.fallthrough();

  Caps caps = Caps{};
  std::optional<double> seconds;
  std::optional<std::uint64_t> nodes;
  std::optional<int> threads;
  app.add_option("--seconds", seconds, "Time budget per enumeration run");
  app.add_option("--nodes", nodes, "Fill node cap per sequence class");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* domain = app.add_subcommand("domain", "Admissible (p,q,n) triples");
  std::string p_range = "3..8", q_range = "4..12";
  int n_max = 30;
  domain->add_option("--p", p_range, "p range A..B");
  domain->add_option("--q", q_range, "q range C..D");
  domain->add_option("--n-max", n_max, "Largest n");

  auto* table1 = app.add_subcommand("table1", "Pentagonal sequences by length k and sum n");
  int k_max = 9;
  table1->add_option("--k-max", k_max, "Largest k");

  auto* fill_cmd = app.add_subcommand("fill", "Fill a boundary sequence with p-gons");
  std::string seq;
  int fill_p = 5;
  bool fill_enumerate = false;
  fill_cmd->add_option("--seq", seq, "Sequence, e.g. 110110, 3,0,1 or deg(5)")->required();
  fill_cmd->add_option("--p", fill_p, "Face size")->required();
  fill_cmd->add_flag("--enumerate", fill_enumerate, "List fillings up to isomorphism");

  auto* enum_cmd = app.add_subcommand("enumerate", "All maps M_n(p,q)");
  int ep = 0, eq = 0, en = 0;
  std::string format = "json";
  std::string out_dir;
  enum_cmd->add_option("--p", ep)->required();
  enum_cmd->add_option("--q", eq)->required();
  enum_cmd->add_option("--n", en)->required();
  enum_cmd->add_option("--format", format, "planar_code, dot or json");
  enum_cmd->add_option("--out", out_dir, "Results directory");

  auto* verify = app.add_subcommand("verify-theorem", "Check the existence claims");
  bool full = false;
  verify->add_flag("--full", full, "Include the long runs");

  auto* explore = app.add_subcommand("explore", "Exploratory runs on open parameters");
  int xp = 0, xq = 0;
  std::string n_range;
  explore->add_option("--p", xp)->required();
  explore->add_option("--q", xq)->required();
  explore->add_option("--n", n_range, "n range A..B")->required();

  auto* export_cmd = app.add_subcommand("export", "Convert stored catalogs");
  std::string in_dir, export_out;
  export_cmd->add_option("--in", in_dir, "Results directory")->required();
  export_cmd->add_option("--format", format, "planar_code, dot or json")->required();
  export_cmd->add_option("--out", export_out, "Destination (default: --in)");

  CLI11_PARSE(app, argc, argv);

  try {
    caps = caps_from_env(caps);
    if (seconds) caps.seconds = *seconds;
    if (nodes) caps.node_cap = *nodes;
    if (threads) caps.threads = *threads;

    if (domain->parsed()) {
      auto [p0, p1] = parse_range(p_range);
      auto [q0, q1] = parse_range(q_range);
      for (const auto& e : scan_domain(p0, p1, q0, q1, n_max))
        std::printf("%d %d %d %s\n", e.p, e.q, e.n, e.admissibility.to_string().c_str());
      return kPass;
    }

    if (table1->parsed()) {
      for (const auto& [key, seqs] : pentagonal_table(k_max)) {
        if (seqs.empty()) continue;
        std::printf("k=%d n=%d:", key.first, key.second);
        for (const auto& s : seqs) std::printf(" %s", s.to_string().c_str());
        std::printf("\n");
      }
      return kPass;
    }

    if (fill_cmd->parsed()) {
      auto a = BoundarySequence::parse(seq);
      FillOptions opts;
      opts.node_cap = caps.node_cap;
      auto r = fill(a, fill_p, fill_enumerate ? FillMode::Enumerate : FillMode::Decide, opts);
      std::printf("%s p=%d: %s (%llu nodes)\n", a.to_string().c_str(), fill_p,
                  r.fillable ? "fillable" : "not fillable",
                  static_cast<unsigned long long>(r.nodes));
      for (std::size_t i = 0; i < r.patches.size(); ++i) {
        auto st = patch_stats(r.patches[i]);
        std::printf("  #%zu f=%d x=%d faces:", i, st.f, st.x);
        for (const auto& f : r.patches[i].faces) {
          std::printf(" [");
          for (std::size_t j = 0; j < f.size(); ++j) std::printf(j ? " %d" : "%d", f[j]);
          std::printf("]");
        }
        std::printf("\n");
      }
      return kPass;
    }

    if (enum_cmd->parsed()) {
      auto fmt = parse_format(format);
      auto cat = enumerate_maps(ep, eq, en, caps);
      if (out_dir.empty() && fmt == ExportFormat::Json) {
        std::fputs(to_json(records_of(cat)).c_str(), stdout);
      } else {
        print_catalog(cat);
      }
      if (!out_dir.empty()) {
        if (cat.complete) {
          auto diff = persist(cat, out_dir);
          if (diff.existed && diff.changed())
            std::fprintf(stderr, "catalog changed: %zu added, %zu removed\n", diff.added.size(),
                         diff.removed.size());
          else if (diff.existed)
            std::fprintf(stderr, "catalog unchanged\n");
        } else {
          std::fprintf(stderr, "partial run not persisted\n");
        }
        if (fmt != ExportFormat::Json) export_catalog(records_of(cat), fmt, out_dir);
      }
      return cat.complete ? kPass : kInconclusive;
    }

    if (verify->parsed()) {
      auto report = verify_theorem(full ? VerifyScope::Full : VerifyScope::Fast, caps);
      for (const auto& c : report.claims)
        std::printf("[%s] %-18s %7.2fs  %s\n    expected: %s\n    computed: %s\n",
                    to_string(c.status), c.id.c_str(), c.seconds, c.statement.c_str(),
                    c.expected.c_str(), c.computed.c_str());
      return report.exit_code();
    }

    if (explore->parsed()) {
      auto [n0, n1] = parse_range(n_range);
      std::printf("exploratory results, not established values\n");
      bool inconclusive = false;
      for (const auto& r : explore_open(xp, xq, n0, n1, caps)) {
        std::printf("%s: %s count=%zu %.2fs%s%s\n", triple(r.p, r.q, r.n).c_str(),
                    r.verdict.c_str(), r.count, r.seconds, r.note.empty() ? "" : "  ",
                    r.note.c_str());
        inconclusive = inconclusive || !r.complete;
      }
      return inconclusive ? kInconclusive : kPass;
    }

    if (export_cmd->parsed()) {
      auto fmt = parse_format(format);
      fs::path dest = export_out.empty() ? fs::path(in_dir) : fs::path(export_out);
      std::size_t files = 0;
      for (const auto& entry : fs::directory_iterator(in_dir)) {
        auto name = entry.path().filename().string();
        if (entry.path().extension() != ".json" || name.rfind("M_p", 0) != 0) continue;
        auto records = records_from_json(read_file(entry.path()));
        for (const auto& path : export_catalog(records, fmt, dest)) {
          std::printf("%s\n", path.string().c_str());
          ++files;
        }
      }
      if (files == 0) std::fprintf(stderr, "no catalogs in %s\n", in_dir.c_str());
      return kPass;
    }
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFail;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFail;
  }
  return kPass;
}
