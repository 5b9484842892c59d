// agm: explore AGM dynamics over small finite fields.
//
//   agm verify   --field p,t | --range LO..HI [--class C]
//   agm count    --field p,t | --range LO..HI [--class C] [--format csv|text]
//   agm classify --field p,t --node a,b
//   agm export   --field p,t [--dir adv|back|both] [--format dot|json] [--out PATH]
//   agm scan     --range LO..HI [--class C] [--format csv|text]
//
// Exit status is zero iff every requested check passed.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agm/curve_counting.hpp"
#include "agm/errors.hpp"
#include "agm/field.hpp"
#include "agm/node_dynamics.hpp"
#include "agm/ratio_dynamics.hpp"
#include "agm/swarm_graph.hpp"
#include "agm/verify.hpp"

namespace {

struct Options {
  std::string field;   // "p,t" or "p"
  std::string range;   // "LO..HI"
  std::string cls = "all";
  std::string dir = "adv";
  std::string format;
  std::string out;
  std::string node;    // "a,b" for classify
  bool quiet = false;
};

bool parse_pair(const std::string& s, std::uint64_t& x, std::uint64_t& y, char sep,
                std::uint64_t default_y) {
  std::size_t pos = s.find(sep);
  try {
    if (pos == std::string::npos) {
      x = std::stoull(s);
      y = default_y;
      return true;
    }
    std::size_t skip = sep == '.' ? 2 : 1;  // ".." vs ","
    x = std::stoull(s.substr(0, pos));
    y = std::stoull(s.substr(pos + skip));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> selected_fields(const Options& opt) {
  if (!opt.field.empty()) {
    std::uint64_t p = 0, t = 1;
    if (!parse_pair(opt.field, p, t, ',', 1))
      throw CLI::ValidationError("--field expects p or p,t");
    return {{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(t)}};
  }
  std::uint64_t lo = 0, hi = 0;
  if (opt.range.empty() || !parse_pair(opt.range, lo, hi, '.', 0) || hi < lo)
    throw CLI::ValidationError("need --field p,t or --range LO..HI");
  agm::CongruenceFilter filter;
  if (!agm::parse_congruence(opt.cls, filter))
    throw CLI::ValidationError("--class must be one of all, 3mod4, 5mod8, 1mod8");
  return agm::odd_prime_powers(lo, hi, filter);
}

std::ostream& open_out(const Options& opt, std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

const char* class_label(std::uint32_t q_mod8) {
  if (q_mod8 % 4 == 3) return "3mod4";
  return q_mod8 == 5 ? "5mod8" : "1mod8";
}

int cmd_verify(const Options& opt) {
  bool all_pass = true;
  for (auto [p, t] : selected_fields(opt)) {
    agm::FieldCtx f = agm::FieldCtx::make(p, t);
    if (!opt.quiet) std::cerr << "verifying q=" << f.q() << "...\n";
    auto results = agm::verify_field(f);
    std::uint64_t pred_t = 0, pred_s = 0;
    if (f.q_mod8() != 1) agm::predicted_population(p, t, pred_t, pred_s);
    std::cout << "q=" << f.q() << " (" << class_label(f.q_mod8()) << ")";
    if (f.q_mod8() != 1 && pred_s == 0) std::cout << " [empty swarm]";
    std::cout << "\n";
    for (const auto& r : results) {
      std::cout << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.pass) std::cout << "  [" << r.witness << "]";
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

std::string cycles_string(const std::vector<std::size_t>& cycles) {
  std::string s = "{";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(cycles[i]);
  }
  return s + "}";
}

int cmd_count(const Options& opt) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file, opt.out);
  bool csv = opt.format.empty() || opt.format == "csv";
  if (!csv && opt.format != "text") throw agm::UnsupportedFormatError(opt.format);

  const char* cols[] = {"q", "p", "t", "class", "a_cm", "a_brute", "t_adv", "s_adv",
                        "s_cyc", "cycles", "tentacle_max", "colon_max"};
  if (csv) {
    for (std::size_t i = 0; i < 12; ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
  } else {
    for (std::size_t i = 0; i < 12; ++i) os << std::setw(13) << cols[i];
    os << "\n";
  }
  for (auto [p, t] : selected_fields(opt)) {
    agm::FieldCtx f = agm::FieldCtx::make(p, t);
    if (!opt.quiet) std::cerr << "counting q=" << f.q() << "...\n";
    std::vector<std::string> cells(12);
    cells[0] = std::to_string(f.q());
    cells[1] = std::to_string(p);
    cells[2] = std::to_string(t);
    cells[3] = class_label(f.q_mod8());
    try {
      agm::CountRow r = agm::count_row(f);
      cells[4] = std::to_string(r.a_cm);
      cells[5] = std::to_string(r.a_brute);
      cells[6] = std::to_string(r.t_adv);
      cells[7] = std::to_string(r.s_adv);
      cells[8] = std::to_string(r.s_cyc);
      cells[9] = r.structure_known ? cycles_string(r.cycles) : "-";
      cells[10] = std::to_string(r.tentacle_max);
      cells[11] = std::to_string(r.colon_max);
    } catch (const agm::FieldTooLargeError&) {
      for (std::size_t i = 4; i < 12; ++i) cells[i] = "toolarge";
    }
    if (csv) {
      for (std::size_t i = 0; i < 12; ++i) os << (i ? "," : "") << cells[i];
    } else {
      for (std::size_t i = 0; i < 12; ++i) os << std::setw(13) << cells[i];
    }
    os << "\n";
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  if (opt.field.empty() || opt.node.empty())
    throw CLI::ValidationError("classify needs --field p,t and --node a,b");
  std::uint64_t p = 0, t = 1, a = 0, b = 0;
  if (!parse_pair(opt.field, p, t, ',', 1) || !parse_pair(opt.node, a, b, ',', 0))
    throw CLI::ValidationError("classify needs --field p,t and --node a,b");
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(p),
                                        static_cast<std::uint32_t>(t));
  agm::Node n{static_cast<agm::Elem>(a), static_cast<agm::Elem>(b)};
  std::cout << "field: q=" << f.q() << " (" << class_label(f.q_mod8()) << ")\n";
  std::cout << "node: " << agm::to_string(f, n) << "\n";
  if (!agm::is_nontrivial(f, n)) {
    std::cout << "trivial: yes (outside S_K)\n";
    return 0;
  }
  std::cout << "trivial: no\n";
  std::cout << "k = b/a: " << f.to_string(agm::k_of(f, n)) << "\n";
  std::cout << "ab residue class: " << agm::to_string(f.residue_class(f.mul(n.a, n.b)))
            << "\n";
  std::uint32_t da = agm::adv_depth(f, n), db = agm::back_depth(f, n);
  bool ai = da == agm::kDepthInf, bi = db == agm::kDepthInf;
  std::cout << "adv depth: " << (ai ? "inf" : std::to_string(da)) << "\n";
  std::cout << "back depth: " << (bi ? "inf" : std::to_string(db)) << "\n";
  if (agm::has_closed_criterion(f)) {
    std::cout << "adv criterion: "
              << (agm::is_adv_infinite_criterion(f, n) ? "true" : "false") << "\n";
    std::cout << "back criterion: "
              << (agm::is_back_infinite_criterion(f, n) ? "true" : "false") << "\n";
  }
  const char* role = ai && bi   ? "cyclic (bell-head)"
                     : ai && !bi ? "tentacle"
                     : bi && !ai ? "colon"
                                 : "transient";
  std::cout << "role: " << role << "\n";
  return 0;
}

void write_doc(const Options& opt, const std::string& path, const std::string& doc) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file, path);
  os << doc;
}

std::string suffixed(const std::string& path, const std::string& tag) {
  if (path.empty()) return path;
  std::size_t dot = path.rfind('.');
  std::size_t slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "." + tag;
  return path.substr(0, dot) + "." + tag + path.substr(dot);
}

int cmd_export(const Options& opt) {
  if (opt.field.empty()) throw CLI::ValidationError("export needs --field p,t");
  std::uint64_t p = 0, t = 1;
  if (!parse_pair(opt.field, p, t, ',', 1))
    throw CLI::ValidationError("--field expects p or p,t");
  agm::FieldCtx f = agm::FieldCtx::make(static_cast<std::uint32_t>(p),
                                        static_cast<std::uint32_t>(t));
  std::string fmt = opt.format.empty() ? "dot" : opt.format;
  if (fmt != "dot" && fmt != "json") throw agm::UnsupportedFormatError(fmt);
  bool both = opt.dir == "both";
  if (!both && opt.dir != "adv" && opt.dir != "back")
    throw CLI::ValidationError("--dir must be adv, back, or both");

  std::vector<agm::Direction> dirs;
  if (both || opt.dir == "adv") dirs.push_back(agm::Direction::Advance);
  if (both || opt.dir == "back") dirs.push_back(agm::Direction::Backtrack);
  for (agm::Direction d : dirs) {
    if (!opt.quiet)
      std::cerr << "exporting q=" << f.q() << " " << agm::to_string(d) << "...\n";
    agm::SwarmGraph g = d == agm::Direction::Advance ? agm::build_adv_graph(f)
                                                     : agm::build_back_graph(f);
    std::string doc;
    if (fmt == "dot") {
      doc = agm::export_dot(g);
    } else if (f.q_mod8() == 1) {
      doc = agm::export_json(g);  // edge list: no proven component structure
    } else {
      doc = agm::export_json(g, agm::decompose(g));
    }
    std::string path = opt.out;
    if (both && !path.empty()) path = suffixed(path, agm::to_string(d));
    write_doc(opt, path, doc);
  }
  return 0;
}

int cmd_scan(const Options& opt) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file, opt.out);
  bool csv = opt.format == "csv";
  if (!csv && !opt.format.empty() && opt.format != "text")
    throw agm::UnsupportedFormatError(opt.format);

  const char* cols[] = {"q", "p", "t", "class", "tentacle_max", "colon_max",
                        "lengths_equal", "adv_single_valued", "back_single_valued"};
  if (csv) {
    for (std::size_t i = 0; i < 9; ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
  } else {
    for (std::size_t i = 0; i < 9; ++i) os << std::setw(19) << cols[i];
    os << "\n";
  }
  bool all_equal = true;
  for (auto [p, t] : selected_fields(opt)) {
    agm::FieldCtx f = agm::FieldCtx::make(p, t);
    if (!opt.quiet) std::cerr << "scanning q=" << f.q() << "...\n";
    agm::ScanRow r = agm::scan_row(f);
    all_equal = all_equal && r.lengths_equal;
    std::string cells[] = {std::to_string(r.q),
                           std::to_string(r.p),
                           std::to_string(r.t),
                           class_label(r.q_mod8),
                           std::to_string(r.tentacle_max),
                           std::to_string(r.colon_max),
                           r.lengths_equal ? "true" : "false",
                           r.adv_single_valued ? "true" : "false",
                           r.back_single_valued ? "true" : "false"};
    if (csv) {
      for (std::size_t i = 0; i < 9; ++i) os << (i ? "," : "") << cells[i];
    } else {
      for (std::size_t i = 0; i < 9; ++i) os << std::setw(19) << cells[i];
    }
    os << "\n";
  }
  if (!all_equal)
    std::cerr << "WARNING: tentacle/colon maxima differ for some q -- this contradicts "
                 "the expected equality and signals a bug\n";
  return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AGM dynamics over finite fields"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--field", opt.field, "field as p,t (t defaults to 1)");
    sub->add_option("--range", opt.range, "prime-power range LO..HI");
    sub->add_option("--class", opt.cls, "congruence filter: all|3mod4|5mod8|1mod8");
    sub->add_option("--format", opt.format, "output format");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_flag("--quiet", opt.quiet, "suppress progress on stderr");
    return sub;
  };

  auto* verify = add_common(app.add_subcommand("verify", "run structural checks"));
  auto* count = add_common(app.add_subcommand("count", "population/trace table"));
  auto* classify = add_common(app.add_subcommand("classify", "classify one node"));
  classify->add_option("--node", opt.node, "node as a,b");
  auto* exp = add_common(app.add_subcommand("export", "export a swarm graph"));
  exp->add_option("--dir", opt.dir, "adv|back|both");
  auto* scan = add_common(app.add_subcommand("scan", "tentacle/colon range scan"));

  CLI11_PARSE(app, argc, argv);
  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (count->parsed()) return cmd_count(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (exp->parsed()) return cmd_export(opt);
    if (scan->parsed()) return cmd_scan(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
