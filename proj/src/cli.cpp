#include "weyl27/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weyl27/acceptance.hpp"
#include "weyl27/combinatorics.hpp"
#include "weyl27/enumerate.hpp"
#include "weyl27/expectations.hpp"
#include "weyl27/invariants.hpp"
#include "weyl27/lines.hpp"
#include "weyl27/report.hpp"

namespace weyl27::cli {

namespace {

constexpr int kIoError = 2;

// Report destination: the configured file, or the caller's stream.
class Sink {
 public:
  explicit Sink(const RunConfig& cfg, std::ostream& fallback) : os_(&fallback) {
    if (cfg.output_path) {
      file_.open(*cfg.output_path);
      if (!file_) throw std::ios_base::failure("cannot open output file " + *cfg.output_path);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  bool good() const { return os_->good(); }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

Expectations expectations_for(const RunConfig& cfg) {
  return cfg.expectations_path ? load_expectations(*cfg.expectations_path) : load_expectations();
}

std::vector<IntVector> load_roots(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open roots file " + path);
  const auto j = nlohmann::json::parse(in);
  return j.get<std::vector<IntVector>>();
}

std::vector<OrbitRecord> records_for(const RunConfig& cfg) {
  if (cfg.n_filter) {
    auto recs = enumerate_up_to(weyl_e6(), *cfg.n_filter, cfg.workers);
    std::erase_if(recs, [&](const OrbitRecord& r) { return r.n != *cfg.n_filter; });
    return recs;
  }
  return enumerate_all(weyl_e6(), cfg.workers);
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::ios_base::failure& ex) {
    err << "I/O error: " << ex.what() << '\n';
    return kIoError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
}

struct PairsOutcome {
  std::vector<ZariskiTuple> tuples;
  std::size_t orbit_count = 0;
  bool corollary = false;
  std::vector<std::string> diff;
};

PairsOutcome compute_pairs(const RunConfig& cfg, const Expectations& e) {
  PairsOutcome o;
  const auto records = enumerate_all(weyl_e6(), cfg.workers);
  const TypeFibers fibers = classify_types(records, cfg.workers);
  o.tuples = find_zariski_pairs(fibers);
  o.orbit_count = records.size();
  o.corollary = unseparated_orbits(fibers).empty();

  if (records.size() != e.total_orbits)
    o.diff.push_back("orbit count: expected " + std::to_string(e.total_orbits) + ", got " +
                     std::to_string(records.size()));
  if (o.tuples.size() != e.zariski_tuples.size())
    o.diff.push_back("fibers of size > 1: expected " + std::to_string(e.zariski_tuples.size()) + ", got " +
                     std::to_string(o.tuples.size()));
  for (const auto& z : o.tuples) {
    std::vector<std::vector<int>> reps;
    for (const auto& m : z.members) reps.push_back(m.min_rep.indices());
    const auto it = std::find_if(e.zariski_tuples.begin(), e.zariski_tuples.end(),
                                 [&](const ExpectedTuple& t) { return t.members == reps; });
    std::string name = "fiber " + z.certificate.str();
    if (it == e.zariski_tuples.end()) {
      o.diff.push_back("unexpected " + name);
      continue;
    }
    for (std::size_t i = 0; i < z.members.size(); ++i) {
      const std::string who = format_indices(z.members[i].min_rep);
      if (z.members[i].orbit_size != it->orbit_sizes[i])
        o.diff.push_back(who + " orbit size: expected " + std::to_string(it->orbit_sizes[i]) + ", got " +
                         std::to_string(z.members[i].orbit_size));
      if (!it->perp_parity.empty() && to_string(z.reports[i].perp_parity) != it->perp_parity[i])
        o.diff.push_back(who + " parity: expected " + it->perp_parity[i] + ", got " +
                         to_string(z.reports[i].perp_parity));
      if (!it->h1_torsion.empty() &&
          (z.reports[i].h1_torsion != it->h1_torsion[i] || z.reports[i].h1_free_rank != it->h1_free_rank[i]))
        o.diff.push_back(who + " H1: expected " + format_group(it->h1_torsion[i], it->h1_free_rank[i]) + ", got " +
                         format_group(z.reports[i].h1_torsion, z.reports[i].h1_free_rank));
    }
    if (!z.fully_separated) o.diff.push_back(name + " is not separated by the computed invariants");
  }
  if (!o.corollary) o.diff.push_back("some orbits share combinatorial type and all invariants");
  return o;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + name);
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad line index: " + item);
    out.push_back(v);
  }
  return out;
}

int default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

int cmd_group(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Expectations e = expectations_for(cfg);
    Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    const auto roots = cfg.roots_path ? load_roots(*cfg.roots_path) : e6_simple_roots();

    std::vector<std::string> cycles;
    std::size_t order = 0;
    std::string failure;
    bool dynkin = false;
    try {
      dynkin = verify_dynkin(roots);
      const auto perms = reflection_permutations(roots, cubic_lines());
      for (const auto& p : perms) cycles.push_back(p.cycle_string());
      order = generate_group(perms).order();
    } catch (const std::exception& ex) {
      failure = ex.what();
    }
    const bool pass = failure.empty() && dynkin && cycles == e.generators && order == e.group_order;

    if (cfg.format == Format::json) {
      Json j;
      j["order"] = order;
      j["generators"] = cycles;
      j["dynkin_e6"] = dynkin;
      j["matches_expected"] = pass;
      if (!failure.empty()) j["error"] = failure;
      os << j.dump(2) << '\n';
    } else if (cfg.format == Format::csv) {
      os << "generator,cycles\n";
      for (std::size_t i = 0; i < cycles.size(); ++i) os << "sigma" << i + 1 << ",\"" << cycles[i] << "\"\n";
    } else {
      os << "order " << order << '\n';
      for (std::size_t i = 0; i < cycles.size(); ++i) os << "sigma" << i + 1 << " " << cycles[i] << '\n';
      os << "E6 diagram " << (dynkin ? "ok" : "broken") << '\n';
      if (!failure.empty()) os << "error: " << failure << '\n';
      os << (pass ? "PASS" : "FAIL") << '\n';
    }
    if (!pass) err << "generator check FAILED\n";
    return pass ? 0 : 1;
  });
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto records = records_for(cfg);
    Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    const auto counts = counts_by_size(records);
    switch (cfg.format) {
      case Format::json:
        write_jsonl(os, records);
        err << "total " << records.size() << '\n';
        break;
      case Format::csv:
        write_count_csv(os, records);
        break;
      case Format::text:
        for (const auto& r : records)
          os << "n=" << r.n << ' ' << format_indices(r.min_rep) << " orbit_size=" << r.orbit_size << '\n';
        os << "n     count\n";
        for (std::size_t n = 0; n < counts.size(); ++n)
          if (!cfg.n_filter || static_cast<int>(n) == *cfg.n_filter)
            os << std::left << std::setw(6) << n << counts[n] << '\n';
        os << "total " << records.size() << '\n';
        break;
    }
    if (!sink.good()) throw std::ios_base::failure("write failed");
    return 0;
  });
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto records = records_for(cfg);
    const TypeFibers fibers = classify_types(records, cfg.workers);
    std::set<CombCertificate> separated;
    for (const auto& z : find_zariski_pairs(fibers))
      if (z.fully_separated) separated.insert(z.certificate);

    Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    switch (cfg.format) {
      case Format::json: {
        Json j = Json::array();
        for (const auto& [cert, members] : fibers) j.push_back(fiber_json(cert, members, separated.count(cert) > 0));
        os << j.dump() << '\n';
        break;
      }
      case Format::csv:
        os << "certificate,fiber_size,members\n";
        for (const auto& [cert, members] : fibers) {
          os << cert.str() << ',' << members.size() << ",\"";
          for (std::size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << format_indices(members[i].min_rep);
          os << "\"\n";
        }
        break;
      case Format::text: {
        std::size_t large = 0;
        for (const auto& [cert, members] : fibers) {
          if (members.size() < 2) continue;
          ++large;
          os << "type " << cert.str() << ":";
          for (const auto& m : members) os << ' ' << format_indices(m.min_rep);
          os << '\n';
        }
        os << records.size() << " orbits, " << fibers.size() << " combinatorial types, " << large
           << " type(s) with more than one orbit\n";
        break;
      }
    }
    if (!sink.good()) throw std::ios_base::failure("write failed");
    return 0;
  });
}

int cmd_pairs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Expectations e = expectations_for(cfg);
    const PairsOutcome o = compute_pairs(cfg, e);
    const bool pass = o.diff.empty();
    Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    switch (cfg.format) {
      case Format::json: {
        Json j;
        Json tuples = Json::array();
        for (const auto& z : o.tuples) tuples.push_back(zariski_json(z));
        j["tuples"] = std::move(tuples);
        j["orbits"] = o.orbit_count;
        j["deformation_equals_invariant_classes"] = o.corollary;
        j["matches_expected"] = pass;
        j["diff"] = o.diff;
        os << j.dump(2) << '\n';
        break;
      }
      case Format::csv:
        os << "tuple,min_rep,orbit_size,perp_parity,h1_torsion,h1_free_rank,separated_by\n";
        for (std::size_t t = 0; t < o.tuples.size(); ++t) {
          const auto& z = o.tuples[t];
          std::string sep;
          for (const auto& s : z.separated_by) sep += (sep.empty() ? "" : ";") + s;
          for (std::size_t i = 0; i < z.members.size(); ++i) {
            std::string tors;
            for (Int x : z.reports[i].h1_torsion) tors += (tors.empty() ? "" : ";") + std::to_string(x);
            os << t + 1 << ",\"" << format_indices(z.members[i].min_rep) << "\"," << z.members[i].orbit_size << ','
               << to_string(z.reports[i].perp_parity) << ",\"" << tors << "\"," << z.reports[i].h1_free_rank << ','
               << sep << '\n';
          }
        }
        break;
      case Format::text:
        for (std::size_t t = 0; t < o.tuples.size(); ++t) {
          const auto& z = o.tuples[t];
          os << "Zariski tuple " << t + 1 << " (type " << z.certificate.str() << ")\n";
          for (std::size_t i = 0; i < z.members.size(); ++i)
            os << "  " << std::left << std::setw(20) << format_indices(z.members[i].min_rep) << " orbit "
               << std::setw(5) << z.members[i].orbit_size << " perp " << std::setw(5)
               << to_string(z.reports[i].perp_parity) << " H1 "
               << format_group(z.reports[i].h1_torsion, z.reports[i].h1_free_rank) << '\n';
          os << "  separated by:";
          for (const auto& s : z.separated_by) os << ' ' << s;
          os << '\n';
        }
        os << "deformation classes coincide with (type, parity, H1) classes on all " << o.orbit_count
           << " orbits: " << (o.corollary ? "yes" : "no") << '\n';
        for (const auto& d : o.diff) os << "diff: " << d << '\n';
        os << (pass ? "PASS" : "FAIL") << '\n';
        break;
    }
    if (!pass)
      for (const auto& d : o.diff) err << "diff: " << d << '\n';
    return pass ? 0 : 1;
  });
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Arrangement> targets;
    if (!cfg.sets.empty()) {
      for (const auto& s : cfg.sets) targets.push_back(Arrangement::from_indices(s));
    } else {
      for (const auto& r : records_for(cfg)) targets.push_back(r.min_rep);
    }
    Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    if (cfg.format == Format::csv) os << "arrangement,hs_rank,perp_rank,perp_parity,h1_torsion,h1_free_rank\n";
    for (Arrangement s : targets) {
      const InvariantReport r = invariant_report(s);
      switch (cfg.format) {
        case Format::json:
          os << invariant_json(r).dump() << '\n';
          break;
        case Format::csv: {
          std::string tors;
          for (Int x : r.h1_torsion) tors += (tors.empty() ? "" : ";") + std::to_string(x);
          os << '"' << format_indices(s) << "\"," << r.hs_rank << ',' << r.perp_rank << ','
             << to_string(r.perp_parity) << ",\"" << tors << "\"," << r.h1_free_rank << '\n';
          break;
        }
        case Format::text:
          os << format_indices(s) << ": rank H(S) " << r.hs_rank << ", rank perp " << r.perp_rank << ", perp "
             << to_string(r.perp_parity) << ", H1 " << format_group(r.h1_torsion, r.h1_free_rank) << '\n';
          break;
      }
    }
    if (!sink.good()) throw std::ios_base::failure("write failed");
    return 0;
  });
}

int cmd_export_gap(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Sink sink(cfg, out);
    for (const auto& g : weyl_e6().generators()) sink.stream() << g.cycle_string() << '\n';
    if (!sink.good()) throw std::ios_base::failure("write failed");
    return 0;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Expectations e = expectations_for(cfg);
    AcceptanceOptions opt;
    opt.workers = cfg.workers;
    const auto results = run_acceptance(e, opt);
    Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    if (cfg.format == Format::json) {
      Json j = Json::array();
      for (const auto& r : results)
        j.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      os << j.dump(2) << '\n';
    } else {
      print_results(os, results);
      os << (all_passed(results) ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
    }
    return all_passed(results) ? 0 : 1;
  });
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.workers < 1) {
    err << "error: workers must be >= 1\n";
    return 1;
  }
  if (cfg.n_filter && (*cfg.n_filter < 0 || *cfg.n_filter > 27)) {
    err << "error: --n must lie in 0..27\n";
    return 1;
  }
  switch (cfg.command) {
    case Command::group: return cmd_group(cfg, out, err);
    case Command::enumerate: return cmd_enumerate(cfg, out, err);
    case Command::classify: return cmd_classify(cfg, out, err);
    case Command::pairs: return cmd_pairs(cfg, out, err);
    case Command::invariants: return cmd_invariants(cfg, out, err);
    case Command::export_gap: return cmd_export_gap(cfg, out, err);
    case Command::verify: return cmd_verify(cfg, out, err);
  }
  return 1;
}

}  // namespace weyl27::cli
