#include "klfactor/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <sstream>

#include "klfactor/checks.hpp"
#include "klfactor/io_json.hpp"
#include "klfactor/parallel.hpp"

namespace klfactor {

namespace {

Factorization blocks_from_arg(const std::string& blocks_json, int n) {
  Json js = Json::parse(blocks_json);
  if (js.is_array()) return factorization_from_json(Json{{"n", n}, {"blocks", js}});
  return factorization_from_json(js);
}

std::string emit(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  // Plain text: one "key: value" line per top-level field.
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    os << key << ": ";
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << "\n";
  }
  return os.str();
}

Json tight_report(const Factorization& j) {
  TightResult t = is_tight(j);
  Json out{{"schema", 1}, {"factorization", factorization_to_json(j)}, {"tight", t.tight}};
  if (!t.tight) {
    Json parts = Json::array();
    for (const Permutation& p : t.witness->parts()) parts.push_back(p.to_string());
    out["witness"] = Json{{"mask", parts},
                          {"target", t.witness_target.to_string()},
                          {"d_r", t.witness_defects},
                          {"gap", t.witness_gap}};
  }
  KLTable table = KLTable::build(j.n());
  out["tight_via_hecke"] = is_tight_via_hecke(j, table);
  out["agree"] = out["tight_via_hecke"].get<bool>() == t.tight;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out) {
  CLI::App app{"Deodhar-style factorizations, defect polynomials, and a "
               "Kazhdan-Lusztig cross-checking engine for symmetric groups"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // kl
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials and basis elements");
  int kl_n = 3;
  std::string kl_w;
  kl->add_option("--n", kl_n, "window size")->required();
  kl->add_option("--w", kl_w, "emit C'_w and its row of P_{x,w}");

  // factorize
  auto* fac = app.add_subcommand("factorize", "monotone factorization of a permutation");
  std::string fac_w;
  fac->add_option("--w", fac_w, "one-line notation, e.g. \"3 4 1 2\"")->required();

  // defectpoly
  auto* dp = app.add_subcommand("defectpoly", "defect polynomials by enumeration and Hecke route");
  int dp_n = 0;
  std::string dp_blocks;
  dp->add_option("--n", dp_n, "window size")->required();
  dp->add_option("--blocks", dp_blocks, "JSON blocks, e.g. \"[[2],[1,3],[2]]\"")->required();

  // tight
  auto* tg = app.add_subcommand("tight", "tightness of a factorization with witness");
  int tg_n = 0;
  std::string tg_blocks;
  tg->add_option("--n", tg_n, "window size")->required();
  tg->add_option("--blocks", tg_blocks, "JSON blocks")->required();

  // heap
  auto* hp = app.add_subcommand("heap", "heap of connected components and its verdicts");
  int hp_n = 0;
  std::string hp_blocks;
  hp->add_option("--n", hp_n, "window size")->required();
  hp->add_option("--blocks", hp_blocks, "JSON blocks")->required();

  // patterns
  auto* pt = app.add_subcommand("patterns", "avoidance flags, descent intervals, directedness");
  std::string pt_w;
  pt->add_option("--w", pt_w, "one-line notation")->required();

  // sweep
  auto* sw = app.add_subcommand("sweep", "exhaustive S_n property runs with counts");
  int sw_n = 6;
  double sw_budget = 0.0;
  sw->add_option("--n", sw_n, "window size (default 6)");
  sw->add_option("--budget-seconds", sw_budget, "wall-clock budget; truncates with status 1");

  // verify
  auto* vf = app.add_subcommand("verify", "cross-check suite at the given bounds");
  int vf_n = 4, vf_r = 3, vf_size = 3;
  vf->add_option("--n", vf_n, "corpus window bound (default 4)");
  vf->add_option("--rmax", vf_r, "corpus length bound (default 3)");
  vf->add_option("--sizemax", vf_size, "corpus block size bound (default 3)");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out = app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out = std::string(e.what()) + "\n";
    return 2;
  }

  try {
    if (kl->parsed()) {
      Json report{{"schema", 1}, {"n", kl_n}};
      KLTable table = KLTable::build(kl_n);
      if (!kl_w.empty()) {
        Permutation w = Permutation::parse(kl_w);
        if (w.n() != kl_n) throw std::invalid_argument("--w does not match --n");
        report["w"] = w.to_string();
        report["cprime"] = hecke_to_json(table.cprime(w));
        Json polys = Json::object();
        for (const auto& [x, p] : table.row(w)) polys[x.to_string()] = p.to_q_string();
        report["polys"] = polys;
      } else {
        Json entries = Json::array();
        for (const Permutation& w : all_permutations(kl_n)) {
          Json polys = Json::object();
          for (const auto& [x, p] : table.row(w)) polys[x.to_string()] = p.to_q_string();
          entries.push_back(Json{{"w", w.to_string()}, {"polys", polys}});
        }
        report["entries"] = entries;
      }
      out = emit(report, format);
      return 0;
    }

    if (fac->parsed()) {
      Permutation w = Permutation::parse(fac_w);
      MonotoneResult res = monotone_factorization(w);
      Json report{{"schema", 1}, {"w", w.to_string()}};
      if (res.ok()) {
        report["factorization"] = factorization_to_json(*res.factorization)["blocks"];
        report["status"] = "ok";
      } else {
        report["status"] = res.failure->status();
        report["stage"] = res.failure->stage.to_string();
        if (res.failure->interval)
          report["interval"] = Json::array({res.failure->interval->first,
                                            res.failure->interval->second});
      }
      out = emit(report, format);
      return 0;
    }

    if (dp->parsed()) {
      Factorization j = blocks_from_arg(dp_blocks, dp_n);
      DefectFamily fam = defect_polynomials(j);
      Json report{{"schema", 1},
                  {"factorization", factorization_to_json(j)},
                  {"enumerated", defect_family_to_json(fam)}};
      try {
        DefectFamily via = defect_polynomials_via_hecke(j);
        report["hecke"] = defect_family_to_json(via);
        report["agree"] = via == fam;
      } catch (const InexactDivision&) {
        report["hecke"] = Json{{"error", "inexact-division"}};
        report["agree"] = false;
      }
      out = emit(report, format);
      return 0;
    }

    if (tg->parsed()) {
      out = emit(tight_report(blocks_from_arg(tg_blocks, tg_n)), format);
      return 0;
    }

    if (hp->parsed()) {
      Factorization j = blocks_from_arg(hp_blocks, hp_n);
      Heap h = build_heap(j);
      Json report{{"schema", 1},
                  {"factorization", factorization_to_json(j)},
                  {"components", heap_to_json(h)},
                  {"strong_rdes", is_strong_rdes(h)},
                  {"strong_bidescent", is_strong_bidescent(h)}};
      if (is_strong_bidescent(h)) {
        bool minimal = is_minimal_strong_bidescent(h);
        report["minimal"] = minimal;
        if (minimal) {
          Json lattice = Json::array();
          for (const LatticePoint& pt2 : lattice_embedding(h))
            lattice.push_back(Json{{"class", pt2.cls}, {"x", pt2.x}, {"y", pt2.y}});
          report["lattice"] = lattice;
        }
      }
      out = emit(report, format);
      return 0;
    }

    if (pt->parsed()) {
      Permutation w = Permutation::parse(pt_w);
      AvoidanceClass av = avoidance_class(w);
      Json report{{"schema", 1},
                  {"w", w.to_string()},
                  {"avoids", Json{{"4231", av.avoids_4231},
                                  {"45312", av.avoids_45312},
                                  {"34512", av.avoids_34512},
                                  {"45123", av.avoids_45123}}},
                  {"strong_rdes_intervals", intervals_to_json(strong_rdes_intervals(w))},
                  {"profile", directedness_to_json(w)}};
      out = emit(report, format);
      return 0;
    }

    if (sw->parsed()) {
      auto start = std::chrono::steady_clock::now();
      std::vector<Permutation> perms = all_permutations(sw_n);
      long long ok_count = 0, avoid_count = 0, mismatches = 0, processed = 0;
      bool truncated = false;
      for (const Permutation& w : perms) {
        if (sw_budget > 0) {
          double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          if (elapsed > sw_budget) { truncated = true; break; }
        }
        ++processed;
        AvoidanceClass av = avoidance_class(w);
        bool expect = av.avoids_4231 && av.avoids_45312;
        bool got = monotone_factorization(w).ok();
        if (expect) ++avoid_count;
        if (got) ++ok_count;
        if (expect != got) ++mismatches;
      }
      Json report{{"schema", 1},
                  {"n", sw_n},
                  {"total", static_cast<long long>(perms.size())},
                  {"processed", processed},
                  {"avoiding_4231_45312", avoid_count},
                  {"monotone_ok", ok_count},
                  {"mismatches", mismatches},
                  {"truncated", truncated}};
      out = emit(report, format);
      return (mismatches > 0 || truncated) ? 1 : 0;
    }

    if (vf->parsed()) {
      CorpusBounds bounds{vf_n, vf_r, vf_size};
      std::vector<CheckResult> results;
      results.push_back(check_bruhat_subword(std::min(vf_n, 4)));
      results.push_back(check_kl_self_consistency(std::min(vf_n, 4)));
      results.push_back(check_defect_invariance(bounds));
      results.push_back(check_hecke_identity(bounds));
      results.push_back(check_heap_agreement(bounds));
      results.push_back(check_cf_confluence(bounds));
      results.push_back(check_monotone_iff_avoidance(std::min(vf_n + 1, 5)));
      results.push_back(check_diamond_pattern(std::min(vf_n + 1, 5)));
      bool all_pass = true;
      Json checks = Json::array();
      for (const CheckResult& r : results) {
        checks.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        all_pass = all_pass && r.pass;
      }
      Json report{{"schema", 1},
                  {"bounds", Json{{"n", vf_n}, {"rmax", vf_r}, {"sizemax", vf_size}}},
                  {"checks", checks},
                  {"pass", all_pass}};
      out = emit(report, format);
      return all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    out = std::string("error: ") + e.what() + "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    out = std::string("error: ") + e.what() + "\n";
    return 2;
  }
  out = "no subcommand\n";
  return 2;
}

}  // namespace klfactor
