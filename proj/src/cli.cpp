#include "intpos/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "intpos/checks.hpp"
#include "intpos/dot.hpp"
#include "intpos/enumerate.hpp"
#include "intpos/projections.hpp"

namespace intpos {

namespace {

using nlohmann::json;

std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::uint16_t parse_element_list(const std::string& text, int n) {
  std::uint16_t mask = 0;
  if (text.empty() || text == "-") return mask;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 1 || v > n) throw parse_error("orientation element outside [n]");
    mask |= std::uint16_t(1) << (v - 1);
  }
  return mask;
}

struct FamilyOptions {
  std::string family;
  std::string up, down;
  std::string eps = "none";
  int n = 0;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "family name (woep, woip, iwoip, dwoip, wofp, pep, pip, "
                    "pfp, ipip, dpip, toep, toip, tofp, boep, boip, bofp)");
    cmd->add_option("--up", up, "orientation up set, e.g. 2,3");
    cmd->add_option("--down", down, "orientation down set, e.g. 2,5");
    cmd->add_option("--eps", eps, "epsilon variant for ipip/dpip: none|-|+|pm");
    cmd->add_option("--n", n, "ground set size");
  }

  Epsilon parse_eps() const {
    if (eps == "none" || eps.empty()) return Epsilon::None;
    if (eps == "-") return Epsilon::Minus;
    if (eps == "+") return Epsilon::Plus;
    if (eps == "pm" || eps == "+-") return Epsilon::PlusMinus;
    throw parse_error("unknown epsilon '" + eps + "'");
  }

  Orientation orientation(int size) const {
    return Orientation(size, parse_element_list(up, size),
                       parse_element_list(down, size));
  }

  bool has_family() const { return !family.empty(); }

  FamilyId resolve(int size) const {
    if (family == "woep") return FamilyId::woep();
    if (family == "woip") return FamilyId::woip();
    if (family == "iwoip") return FamilyId::iwoip();
    if (family == "dwoip") return FamilyId::dwoip();
    if (family == "wofp") return FamilyId::wofp();
    if (family == "toep") return FamilyId::pep(Orientation::tamari(size));
    if (family == "toip") return FamilyId::pip(Orientation::tamari(size));
    if (family == "tofp") return FamilyId::pfp(Orientation::tamari(size));
    if (family == "boep") return FamilyId::pep(Orientation::boolean(size));
    if (family == "boip") return FamilyId::pip(Orientation::boolean(size));
    if (family == "bofp") return FamilyId::pfp(Orientation::boolean(size));
    if (family == "pep") return FamilyId::pep(orientation(size));
    if (family == "pip") return FamilyId::pip(orientation(size));
    if (family == "pfp") return FamilyId::pfp(orientation(size));
    if (family == "ipip") return FamilyId::ipip(orientation(size), parse_eps());
    if (family == "dpip") return FamilyId::dpip(orientation(size), parse_eps());
    throw parse_error("unknown family '" + family + "'");
  }
};

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text << '\n';
}

int cmd_classify(const FamilyOptions& opts, bool as_json,
                 const std::vector<std::string>& inputs) {
  for (const auto& text : gather_inputs(inputs)) {
    const IntRelation r = parse_relation(text);
    const RelationClass c = classify(r);
    std::vector<std::string> tags;
    if (c.symmetric) tags.push_back("symmetric");
    if (c.antisymmetric) tags.push_back("antisymmetric");
    if (c.transitive) tags.push_back("transitive");
    if (c.semitransitive) tags.push_back("semitransitive");
    if (c.poset) tags.push_back("poset");
    if (c.increasing) tags.push_back("increasing");
    if (c.decreasing) tags.push_back("decreasing");
    std::vector<std::string> fams;
    if (c.poset) {
      for (const FamilyId& f :
           {FamilyId::woep(), FamilyId::woip(), FamilyId::iwoip(),
            FamilyId::dwoip(), FamilyId::wofp()})
        if (is_member(f, r)) fams.push_back(family_name(f));
      if (!opts.up.empty() || !opts.down.empty()) {
        const Orientation o = opts.orientation(r.n());
        for (const FamilyId& f :
             {FamilyId::pep(o), FamilyId::pip(o), FamilyId::pfp(o),
              FamilyId::ipip(o), FamilyId::dpip(o)})
          if (is_member(f, r)) fams.push_back(family_name(f));
      }
    }
    std::string line;
    for (const auto& t : tags) line += (line.empty() ? "" : ", ") + t;
    for (const auto& f : fams) line += (line.empty() ? "" : ", ") + f;
    json j{{"relation", to_text(r)}, {"classes", tags}, {"families", fams}};
    emit(as_json, j, line);
  }
  return 0;
}

int cmd_meet_join(bool meet_side, const std::string& level_name_,
                  const FamilyOptions& opts, bool as_json,
                  const std::vector<std::string>& inputs) {
  const auto lines = gather_inputs(inputs);
  if (lines.size() != 2)
    throw parse_error("meet/join expects exactly two relations");
  const IntRelation r = parse_relation(lines[0]);
  const IntRelation s = parse_relation(lines[1]);
  IntRelation result(r.n());
  if (opts.has_family()) {
    const FamilyId f = opts.resolve(r.n());
    result = meet_side ? family_meet(f, r, s) : family_join(f, r, s);
  } else {
    const Level level =
        level_name_.empty() ? Level::Poset : parse_level(level_name_);
    result = meet_side ? meet(level, r, s) : join(level, r, s);
  }
  emit(as_json, json{{"result", to_text(result)}}, to_text(result));
  return 0;
}

int cmd_project(const std::string& map, const FamilyOptions& opts, bool as_json,
                const std::vector<std::string>& inputs) {
  for (const auto& text : gather_inputs(inputs)) {
    const IntRelation r = parse_relation(text);
    IntRelation out(r.n());
    if (map == "tdd")
      out = tdd(r);
    else if (map == "tid")
      out = tid(r);
    else if (map == "iwoip-id")
      out = iwoip_id(r);
    else if (map == "dwoip-dd")
      out = dwoip_dd(r);
    else if (map == "woip-d")
      out = woip_d(r);
    else if (map == "ipip-id")
      out = ipip_id(opts.parse_eps(), opts.orientation(r.n()), r);
    else if (map == "dpip-dd")
      out = dpip_dd(opts.parse_eps(), opts.orientation(r.n()), r);
    else if (map == "pip-d")
      out = pip_d(opts.orientation(r.n()), r);
    else
      throw parse_error("unknown projection map '" + map + "'");
    emit(as_json, json{{"result", to_text(out)}}, to_text(out));
  }
  return 0;
}

// The orientation for a command, from --up/--down or a family shorthand
// (orientation-free families insert at the empty orientation).
Orientation resolve_orientation(const FamilyOptions& opts, int size) {
  if (opts.has_family()) {
    const FamilyId f = opts.resolve(size);
    if (f.orientation) return *f.orientation;
    return Orientation::weak(size);
  }
  return opts.orientation(size);
}

int cmd_insert(const std::string& type, const FamilyOptions& opts, bool as_json,
               const std::vector<std::string>& inputs) {
  for (const auto& text : gather_inputs(inputs)) {
    IntRelation out(1);
    if (type == "perm") {
      const Permutation s = parse_permutation(text);
      out = insert_permutree(resolve_orientation(opts, s.n()), s);
    } else if (type == "interval") {
      const auto dash = text.find("..");
      if (dash == std::string::npos)
        throw parse_error("interval input must be written lo..hi");
      const WOInterval iv(parse_permutation(text.substr(0, dash)),
                          parse_permutation(text.substr(dash + 2)));
      out = insert_interval(resolve_orientation(opts, iv.lo.n()), iv);
    } else if (type == "partition") {
      const OrderedPartition p = parse_partition(text);
      out = insert_schroder(resolve_orientation(opts, p.n()), p);
    } else {
      throw parse_error("unknown insert type '" + type + "'");
    }
    emit(as_json, json{{"result", to_text(out)}}, to_text(out));
  }
  return 0;
}

int cmd_enumerate(const std::string& level_name_, const FamilyOptions& opts,
                  bool count_only, bool as_json) {
  if (opts.n <= 0) throw parse_error("enumerate requires --n");
  std::vector<IntRelation> universe;
  if (opts.has_family())
    universe = enumerate_family(opts.resolve(opts.n), opts.n);
  else if (!level_name_.empty())
    universe = enumerate_level(parse_level(level_name_), opts.n);
  else
    throw parse_error("enumerate requires --level or --family");
  if (count_only) {
    emit(as_json, json{{"count", universe.size()}},
         std::to_string(universe.size()));
    return 0;
  }
  if (as_json) {
    json j = json::array();
    for (const auto& r : universe) j.push_back(to_text(r));
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& r : universe) std::cout << to_text(r) << '\n';
  }
  return 0;
}

int cmd_count(int n_max, bool as_json) {
  const CountTable table = count_table(n_max);
  if (as_json) {
    json j;
    for (const auto& [name, counts] : table.rows) j[name] = counts;
    std::cout << j.dump() << '\n';
    return 0;
  }
  for (const auto& [name, counts] : table.rows) {
    std::cout << name << ":";
    for (auto v : counts) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

int cmd_check(bool as_json) {
  const auto claims = run_acceptance();
  const auto sums = summarize(claims);
  bool all_pass = true;
  if (as_json) {
    json j = json::array();
    for (const auto& c : claims) {
      json item{{"claim", c.claim},
                {"criterion", c.criterion},
                {"status", c.pass ? "pass" : "fail"}};
      if (!c.detail.empty()) item["counterexample"] = c.detail;
      j.push_back(item);
      all_pass = all_pass && c.pass;
    }
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& c : claims) {
      std::cout << (c.pass ? "PASS" : "FAIL") << " [C" << c.criterion << "] "
                << c.claim;
      if (!c.detail.empty()) std::cout << "  -- " << c.detail;
      std::cout << '\n';
      all_pass = all_pass && c.pass;
    }
    for (const auto& s : sums)
      std::cout << "criterion " << s.criterion << ": "
                << (s.pass ? "PASS" : "FAIL") << " (" << (s.claims - s.failed)
                << "/" << s.claims << " claims)\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_hasse(const std::string& level_name_, const FamilyOptions& opts,
              const std::vector<std::string>& inputs) {
  if (!opts.has_family() && level_name_.empty()) {
    const auto lines = gather_inputs(inputs);
    if (lines.size() != 1)
      throw parse_error("hasse expects one relation or --level/--family");
    std::cout << hasse_dot(parse_relation(lines[0]));
    return 0;
  }
  if (opts.n <= 0) throw parse_error("hasse over a universe requires --n");
  std::vector<IntRelation> universe;
  std::string name;
  if (opts.has_family()) {
    universe = enumerate_family(opts.resolve(opts.n), opts.n);
    name = opts.family;
  } else {
    universe = enumerate_level(parse_level(level_name_), opts.n);
    name = level_name_;
  }
  std::cout << hasse_dot(
      universe, [](const IntRelation& a, const IntRelation& b) {
        return wo_leq(a, b);
      },
      name + " n=" + std::to_string(opts.n));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"weak order on integer binary relations and integer posets"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  FamilyOptions opts;
  std::string level;
  std::string map;
  std::string insert_type = "perm";
  std::vector<std::string> inputs;
  bool count_only = false;
  bool check_all = false;
  int count_n = 5;

  auto* classify_cmd = app.add_subcommand("classify", "relation classes and family memberships");
  opts.add_options(classify_cmd);
  classify_cmd->add_option("inputs", inputs, "relations (or stdin)");

  auto* meet_cmd = app.add_subcommand("meet", "meet of two relations");
  meet_cmd->add_option("--level", level, "rel|antisym|semitrans|trans|poset");
  opts.add_options(meet_cmd);
  meet_cmd->add_option("inputs", inputs, "two relations");

  auto* join_cmd = app.add_subcommand("join", "join of two relations");
  join_cmd->add_option("--level", level, "rel|antisym|semitrans|trans|poset");
  opts.add_options(join_cmd);
  join_cmd->add_option("inputs", inputs, "two relations");

  auto* project_cmd = app.add_subcommand("project", "deletion/projection maps");
  project_cmd->add_option("--map", map,
                          "tdd|tid|iwoip-id|dwoip-dd|woip-d|ipip-id|dpip-dd|pip-d")
      ->required();
  opts.add_options(project_cmd);
  project_cmd->add_option("inputs", inputs, "relations (or stdin)");

  auto* insert_cmd = app.add_subcommand("insert", "permutree insertion maps");
  insert_cmd->add_option("--type", insert_type, "perm|interval|partition");
  opts.add_options(insert_cmd);
  insert_cmd->add_option("inputs", inputs,
                         "permutations, lo..hi intervals, or partitions");

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate a universe");
  enum_cmd->add_option("--level", level, "rel|antisym|semitrans|trans|poset");
  opts.add_options(enum_cmd);
  enum_cmd->add_flag("--count-only", count_only, "print only the count");

  auto* count_cmd = app.add_subcommand("count", "family enumeration grid");
  count_cmd->add_option("--n", count_n, "largest ground set size (<= 5)");
  count_cmd->add_option("--families", level, "accepted for symmetry: all");

  auto* check_cmd = app.add_subcommand("check", "run the acceptance suite");
  check_cmd->add_flag("--all", check_all, "run every claim (always on)");
  check_cmd
      ->add_option("--n", count_n,
                   "accepted for symmetry; claims run at their pinned sizes")
      ->expected(1);

  auto* hasse_cmd = app.add_subcommand("hasse", "DOT export of Hasse diagrams");
  hasse_cmd->add_option("--level", level, "rel|antisym|semitrans|trans|poset");
  opts.add_options(hasse_cmd);
  hasse_cmd->add_option("inputs", inputs, "a single poset (or stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(opts, as_json, inputs);
    if (meet_cmd->parsed())
      return cmd_meet_join(true, level, opts, as_json, inputs);
    if (join_cmd->parsed())
      return cmd_meet_join(false, level, opts, as_json, inputs);
    if (project_cmd->parsed()) return cmd_project(map, opts, as_json, inputs);
    if (insert_cmd->parsed())
      return cmd_insert(insert_type, opts, as_json, inputs);
    if (enum_cmd->parsed())
      return cmd_enumerate(level, opts, count_only, as_json);
    if (count_cmd->parsed()) return cmd_count(count_n, as_json);
    if (check_cmd->parsed()) return cmd_check(as_json);
    if (hasse_cmd->parsed()) return cmd_hasse(level, opts, inputs);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("intpos");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace intpos
