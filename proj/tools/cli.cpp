#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "grpiso/aut_oracle.hpp"
#include "grpiso/decompose.hpp"
#include "grpiso/error.hpp"
#include "grpiso/group_spec.hpp"
#include "grpiso/reductions.hpp"
#include "grpiso/table_io.hpp"

namespace grpiso::cli {

namespace {

struct Options {
  std::string left;
  std::string right;
  std::string via;
  std::string format = "text";
  std::string verify_path;
  bool stats = false;

  bool tsv() const { return format == "tsv"; }
  char sep() const { return tsv() ? '\t' : ' '; }
};

// Counts direct oracle use the same way the reductions do.
class CountingOracle {
public:
  explicit CountingOracle(OracleStats &stats) : stats_(stats) {}

  PermGroup agen(const Group &G) {
    record(G);
    ++stats_.agen_calls;
    return oracle_.agen(G);
  }
  Count acount(const Group &G) {
    record(G);
    ++stats_.acount_calls;
    return oracle_.acount(G);
  }
  Partition apart(const Group &G) {
    record(G);
    ++stats_.apart_calls;
    return oracle_.apart(G);
  }

private:
  void record(const Group &G) { stats_.input_orders.push_back(G.order()); }

  BacktrackOracle oracle_;
  OracleStats &stats_;
};

std::string join(std::span<const Element> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void print_partition(std::ostream &out, const Partition &blocks, char sep) {
  for (const auto &b : blocks)
    out << join(b, sep) << '\n';
}

void print_report(std::ostream &out, const Options &opt, const PairLog &log,
                  const OracleStats &stats) {
  if (!opt.stats)
    return;
  out << format_pair_log(log, opt.tsv());
  out << format_stats(stats, opt.tsv());
}

std::string decomposition_report(const Decomposition &dec) {
  std::string out = std::to_string(dec.size()) + "\n";
  for (std::size_t i = 0; i < dec.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(dec.external_factors[i].order());
  }
  out += '\n';
  for (std::size_t i = 0; i < dec.size(); ++i) {
    out += "# factor " + std::to_string(i) + "\n";
    out += format_cayley_table(dec.external_factors[i]);
  }
  return out;
}

bool reduction_route(const Options &opt, bool default_reduction) {
  if (opt.via.empty())
    return default_reduction;
  return opt.via == "reduction";
}

int cmd_iso(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  const Group H = parse_group_spec(opt.right);
  OracleStats stats;
  PairLog log;
  bool iso;
  if (reduction_route(opt, true)) {
    BacktrackOracle oracle;
    iso = iso_via_acount(G, H, oracle, stats, &log);
  } else {
    iso = brute_iso(G, H).has_value();
  }
  out << (iso ? "isomorphic" : "not-isomorphic") << '\n';
  print_report(out, opt, log, stats);
  return iso ? kOk : kNegative;
}

int cmd_imap(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  const Group H = parse_group_spec(opt.right);

  if (!opt.verify_path.empty()) {
    std::ifstream in(opt.verify_path, std::ios::binary);
    if (!in)
      throw Error(Errc::ParseError, "cannot open '" + opt.verify_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      const Homomorphism phi = parse_pair_list(text.str(), G, H);
      if (!is_isomorphism(phi)) {
        out << "invalid: not a bijection\n";
        return kNegative;
      }
    } catch (const Error &e) {
      if (e.code() != Errc::NotHomomorphism)
        throw;
      out << "invalid: " << e.what() << '\n';
      return kNegative;
    }
    out << "valid\n";
    return kOk;
  }

  OracleStats stats;
  PairLog log;
  std::optional<Homomorphism> phi;
  if (reduction_route(opt, true)) {
    BacktrackOracle oracle;
    phi = imap_via_agen(G, H, oracle, stats, &log);
  } else {
    phi = brute_iso(G, H);
  }
  if (phi)
    out << format_pair_list(*phi);
  else
    out << "none\n";
  print_report(out, opt, log, stats);
  return phi ? kOk : kNegative;
}

int cmd_icount(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  const Group H = parse_group_spec(opt.right);
  OracleStats stats;
  PairLog log;
  Count count;
  if (reduction_route(opt, true)) {
    BacktrackOracle oracle;
    count = icount_via_acount(G, H, oracle, stats, &log);
  } else {
    count = brute_iso_count(G, H);
  }
  out << count << '\n';
  print_report(out, opt, log, stats);
  return kOk;
}

int cmd_acount(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  OracleStats stats;
  Count count;
  if (reduction_route(opt, false)) {
    BacktrackOracle oracle;
    count = acount_via_agen(G, oracle, stats);
  } else {
    count = CountingOracle(stats).acount(G);
  }
  out << count << '\n';
  print_report(out, opt, {}, stats);
  return kOk;
}

int cmd_agen(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  OracleStats stats;
  // agen is the oracle itself; both routes make the same single call.
  const PermGroup aut = CountingOracle(stats).agen(G);
  for (const auto &p : aut.generators())
    out << join(p.images(), opt.sep()) << '\n';
  print_report(out, opt, {}, stats);
  return kOk;
}

int cmd_apart(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  OracleStats stats;
  Partition blocks;
  if (reduction_route(opt, false)) {
    BacktrackOracle oracle;
    blocks = apart_via_agen(G, oracle, stats);
  } else {
    blocks = CountingOracle(stats).apart(G);
  }
  print_partition(out, blocks, opt.sep());
  print_report(out, opt, {}, stats);
  return kOk;
}

int cmd_decompose(const Options &opt, std::ostream &out) {
  const Group G = parse_group_spec(opt.left);
  out << decomposition_report(decompose_indecomposable(G));
  return kOk;
}

// Reduction routes against the brute-force oracle on every catalog pair of
// equal order up to 24 (counts up to 12).
int cmd_selftest(const Options &opt, std::ostream &out) {
  struct Named {
    std::string name;
    Group group;
  };
  std::vector<Named> groups;
  for (const auto &e : standard_catalog()) {
    Group g = parse_group_spec(e.spec);
    if (g.order() <= 24)
      groups.push_back({e.name, std::move(g)});
  }

  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  std::vector<std::string> failures;
  auto check = [&](const std::string &what, bool ok, const std::string &ctx) {
    auto &t = tally[what];
    ++t.second;
    if (ok)
      ++t.first;
    else
      failures.push_back(what + " " + ctx);
  };

  BacktrackOracle oracle;
  for (const auto &a : groups) {
    OracleStats s;
    check("acount-via-agen",
          acount_via_agen(a.group, oracle, s) == acount(a.group), a.name);
    check("apart-via-agen", apart_via_agen(a.group, oracle, s) == apart(a.group),
          a.name);
    for (const auto &b : groups) {
      if (a.group.order() != b.group.order())
        continue;
      const std::string ctx = a.name + " " + b.name;
      const bool truth = brute_iso(a.group, b.group).has_value();
      check("iso-via-acount",
            iso_via_acount(a.group, b.group, oracle, s) == truth, ctx);
      check("iso-via-apart",
            iso_via_apart(a.group, b.group, oracle, s) == truth, ctx);
      const auto phi = imap_via_agen(a.group, b.group, oracle, s);
      check("imap-via-agen", phi ? truth && is_isomorphism(*phi) : !truth,
            ctx);
      if (a.group.order() <= 12)
        check("icount-via-acount",
              icount_via_acount(a.group, b.group, oracle, s) ==
                  brute_iso_count(a.group, b.group),
              ctx);
    }
  }

  for (const auto &[what, t] : tally)
    out << what << opt.sep() << t.first << '/' << t.second << '\n';
  for (const auto &f : failures)
    out << "FAIL " << f << '\n';
  out << (failures.empty() ? "selftest passed" : "selftest failed") << '\n';
  return failures.empty() ? kOk : kNegative;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) {
  CLI::App app{"Finite group isomorphism through automorphism oracles",
               "grpiso"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App *sub, int groups) {
    sub->add_option("G", opt.left, "group spec")->required();
    if (groups == 2)
      sub->add_option("H", opt.right, "group spec")->required();
    sub->add_option("--via", opt.via, "direct or reduction")
        ->check(CLI::IsMember({"direct", "reduction"}));
    sub->add_flag("--stats", opt.stats,
                  "append pair verdicts and the oracle-call table");
    sub->add_option("--format", opt.format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
  };

  std::map<CLI::App *, int (*)(const Options &, std::ostream &)> handlers;
  auto add = [&](const char *name, const char *desc, int groups,
                 int (*fn)(const Options &, std::ostream &)) {
    CLI::App *sub = app.add_subcommand(name, desc);
    if (groups > 0)
      common(sub, groups);
    handlers[sub] = fn;
    return sub;
  };
  add("iso", "decide whether G and H are isomorphic", 2, cmd_iso);
  CLI::App *imap = add("imap", "print an isomorphism G -> H", 2, cmd_imap);
  imap->add_option("--verify", opt.verify_path,
                   "check a pair-list file as an isomorphism G -> H instead");
  add("icount", "count isomorphisms G -> H", 2, cmd_icount);
  add("acount", "count automorphisms of G", 1, cmd_acount);
  add("agen", "print generators of Aut(G)", 1, cmd_agen);
  add("apart", "print the orbits of Aut(G) on G", 1, cmd_apart);
  add("decompose", "split G into directly indecomposable factors", 1,
      cmd_decompose);
  CLI::App *selftest =
      add("selftest", "check the reductions against brute force", 0,
          cmd_selftest);
  selftest->add_option("--format", opt.format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::vector<std::string> argv_store{"grpiso"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "grpiso: " << e.what() << '\n';
    return kInputError;
  }

  try {
    for (const auto &[sub, fn] : handlers)
      if (sub->parsed())
        return fn(opt, out);
  } catch (const Error &e) {
    err << "grpiso: " << e.what() << '\n';
    return is_input_error(e.code()) ? kInputError : kInconsistency;
  }
  return kInputError;
}

} // namespace grpiso::cli
