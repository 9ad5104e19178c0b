// Command-line front end. TSV on stdout by default, JSON with --format json;
// diagnostics go to stderr. Exit codes: classify returns 0 for an integer
// value and 1 otherwise; sweep and identities return 0 only when clean;
// argument and context errors return 2.

#include "pellgf/pellgf.hpp"
#include "pellgf/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using pellgf::CFExpansion;
using pellgf::Classification;
using pellgf::FundamentalSolution;
using pellgf::GFValue;
using pellgf::Integer;
using pellgf::PellContext;
using pellgf::Rational;
using pellgf::SeqKind;
using pellgf::SweepReport;

struct Options {
  std::string format = "tsv";
  std::optional<std::string> out;
  bool radius_only = false;
  int jobs = 1;
  std::optional<std::int64_t> partial;
};

const char* kUsage =
    "usage: pellgf <command> [options]\n"
    "\n"
    "commands:\n"
    "  solve <m>                       fundamental solution of x^2 - m y^2 = +-1\n"
    "  seq <m> <F|L> <N>               terms 0..N of the F or L sequence\n"
    "  classify <m|classic> <F|L> <x>  integrality verdict with witnesses at x = p/q\n"
    "  sweep <m|classic> <F|L> <B>     classify every reduced |p|, q <= B\n"
    "  identities <m> <n_max>          verify the identity catalog over the full grid\n"
    "  level-set <m> <F|L> <k>         all rational x with GF(x) = k\n"
    "  eval <m> <F|L> <x>              exact GF value at x\n"
    "\n"
    "options:\n"
    "  --format tsv|json   output format (default tsv)\n"
    "  --out FILE          also write the output to FILE\n"
    "  --radius-only       sweep only inside the radius of convergence\n"
    "  --jobs N            parallel sweep workers (default 1)\n"
    "  --partial N         eval: also print the N-term partial sum and difference\n"
    "\n"
    "exit codes: 0 success (classify: integer value), 1 classify non-integer or\n"
    "sweep/identities violations, 2 usage or argument errors\n";

Integer parse_natural(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("expected a natural number");
  for (char c : s)
    if (c < '0' || c > '9') throw std::invalid_argument("expected a natural number: " + s);
  return Integer(s);
}

std::int64_t parse_count(const std::string& s, const char* what) {
  const Integer v = parse_natural(s);
  if (v > Integer(1) << 40) throw std::invalid_argument(std::string(what) + " too large");
  return static_cast<std::int64_t>(v);
}

SeqKind parse_kind(const std::string& s) {
  if (s == "F") return SeqKind::F;
  if (s == "L") return SeqKind::L;
  throw std::invalid_argument("kind must be F or L");
}

Integer parse_signed_integer(const std::string& s) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer()) throw std::invalid_argument("expected an integer: " + s);
  return r.num();
}

void emit(const std::string& text, const Options& opt) {
  std::cout << text;
  if (opt.out) {
    std::ofstream f(*opt.out);
    if (!f) throw std::invalid_argument("cannot write to " + *opt.out);
    f << text;
  }
}

int cmd_solve(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 2) throw std::invalid_argument("usage: solve <m>");
  const CFExpansion cf = pellgf::continued_fraction_sqrt(parse_natural(pos[1]));
  const FundamentalSolution sol = pellgf::fundamental_solution(cf);
  std::string text;
  if (opt.format == "json") {
    text = pellgf::to_json(sol, cf).dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << sol.m.str() << '\t' << sol.a.str() << '\t' << sol.b.str() << '\t' << sol.epsilon << '\t'
       << cf.str() << '\n';
    text = os.str();
  }
  emit(text, opt);
  return 0;
}

int cmd_seq(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 4) throw std::invalid_argument("usage: seq <m> <F|L> <N>");
  const PellContext ctx = PellContext::from_m(parse_natural(pos[1]));
  const SeqKind kind = parse_kind(pos[2]);
  const std::int64_t last = parse_count(pos[3], "N");
  const std::vector<Integer> terms = pellgf::terms_upto(ctx, kind, last);
  std::string text;
  if (opt.format == "json") {
    nlohmann::json j{{"m", ctx.m().str()}, {"kind", pellgf::to_string(kind)}};
    j["terms"] = nlohmann::json::array();
    for (const Integer& t : terms) j["terms"].push_back(t.str());
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (std::size_t n = 0; n < terms.size(); ++n) os << n << '\t' << terms[n].str() << '\n';
    text = os.str();
  }
  emit(text, opt);
  return 0;
}

int cmd_classify(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 4) throw std::invalid_argument("usage: classify <m|classic> <F|L> <x>");
  const SeqKind kind = parse_kind(pos[2]);
  const Rational x = Rational::parse(pos[3]);
  Classification c;
  if (pos[1] == "classic")
    c = pellgf::classify_classic(kind, x);
  else
    c = pellgf::classify(PellContext::from_m(parse_natural(pos[1])), kind, x);
  std::string text;
  if (opt.format == "json") {
    nlohmann::json j = pellgf::to_json(c);
    j["target"] = pos[1];
    j["kind"] = pellgf::to_string(kind);
    j["x"] = x.str();
    text = j.dump(2) + "\n";
  } else {
    text = pellgf::to_tsv(c);
  }
  emit(text, opt);
  if (c.theorem_violation()) std::cerr << "THEOREM_VIOLATION at x = " << x.str() << "\n";
  return c.is_integer ? 0 : 1;
}

int cmd_sweep(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 4) throw std::invalid_argument("usage: sweep <m|classic> <F|L> <B>");
  const SeqKind kind = parse_kind(pos[2]);
  const std::int64_t bound = parse_count(pos[3], "B");
  SweepReport rep;
  if (pos[1] == "classic") {
    if (opt.radius_only)
      throw std::invalid_argument("--radius-only needs a numeric m");
    rep = pellgf::sweep_classic(kind, bound, opt.jobs);
  } else {
    rep = pellgf::sweep(PellContext::from_m(parse_natural(pos[1])), kind, bound, opt.radius_only,
                        opt.jobs);
  }
  emit(opt.format == "json" ? pellgf::to_json(rep).dump(2) + "\n" : pellgf::to_tsv(rep), opt);
  return rep.clean() ? 0 : 1;
}

int cmd_identities(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 3) throw std::invalid_argument("usage: identities <m> <n_max>");
  const PellContext ctx = PellContext::from_m(parse_natural(pos[1]));
  const std::int64_t n_max = parse_count(pos[2], "n_max");
  const pellgf::IdentityGridReport rep = pellgf::identity_grid(ctx, n_max);
  std::string text;
  if (opt.format == "json") {
    nlohmann::json j = pellgf::to_json(rep, n_max);
    j["m"] = ctx.m().str();
    text = j.dump(2) + "\n";
  } else {
    text = pellgf::to_tsv(rep, n_max);
  }
  emit(text, opt);
  return rep.all_pass() ? 0 : 1;
}

int cmd_level_set(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 4) throw std::invalid_argument("usage: level-set <m> <F|L> <k>");
  const PellContext ctx = PellContext::from_m(parse_natural(pos[1]));
  const SeqKind kind = parse_kind(pos[2]);
  const Integer k = parse_signed_integer(pos[3]);
  const std::vector<Rational> roots = pellgf::integer_level_set(ctx, kind, k);
  std::string text;
  if (opt.format == "json") {
    nlohmann::json j{{"m", ctx.m().str()}, {"kind", pellgf::to_string(kind)}, {"k", k.str()}};
    j["roots"] = nlohmann::json::array();
    for (const Rational& r : roots) j["roots"].push_back(r.str());
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i) os << ", ";
      os << roots[i].str();
    }
    os << '\n';
    text = os.str();
  }
  emit(text, opt);
  return 0;
}

int cmd_eval(const std::vector<std::string>& pos, const Options& opt) {
  if (pos.size() != 4) throw std::invalid_argument("usage: eval <m> <F|L> <x>");
  const PellContext ctx = PellContext::from_m(parse_natural(pos[1]));
  const SeqKind kind = parse_kind(pos[2]);
  const Rational x = Rational::parse(pos[3]);
  const GFValue gv = pellgf::eval_gf(ctx, kind, x);
  const bool inside = pellgf::within_radius(ctx, x);
  std::optional<Rational> partial, difference;
  if (opt.partial) {
    partial = pellgf::partial_sum(ctx, kind, x, *opt.partial);
    difference = gv.value - *partial;
  }
  std::string text;
  if (opt.format == "json") {
    nlohmann::json j{{"m", ctx.m().str()},
                     {"kind", pellgf::to_string(kind)},
                     {"x", x.str()},
                     {"value", gv.value.str()},
                     {"is_integer", gv.is_integer},
                     {"within_radius", inside}};
    if (partial)
      j["partial"] = {{"last", std::to_string(*opt.partial)},
                      {"sum", partial->str()},
                      {"difference", difference->str()}};
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "value\t" << gv.value.str() << '\n';
    os << "integer\t" << (gv.is_integer ? 1 : 0) << '\n';
    os << "within_radius\t" << (inside ? 1 : 0) << '\n';
    if (partial) {
      os << "partial_sum\t" << partial->str() << '\n';
      os << "difference\t" << difference->str() << '\n';
    }
    text = os.str();
  }
  emit(text, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> pos;
  Options opt;
  try {
    const auto take_value = [&args](std::size_t& i, const std::string& name) -> std::string {
      if (i + 1 >= args.size()) throw std::invalid_argument(name + " needs a value");
      return args[++i];
    };
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--help" || a == "-h") {
        std::cout << kUsage;
        return 0;
      } else if (a == "--format") {
        opt.format = take_value(i, a);
      } else if (a == "--out") {
        opt.out = take_value(i, a);
      } else if (a == "--jobs") {
        opt.jobs = static_cast<int>(parse_count(take_value(i, a), "--jobs"));
        if (opt.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
      } else if (a == "--partial") {
        opt.partial = parse_count(take_value(i, a), "--partial");
      } else if (a == "--radius-only") {
        opt.radius_only = true;
      } else if (a.rfind("--", 0) == 0) {
        throw std::invalid_argument("unknown option: " + a);
      } else {
        pos.push_back(a);
      }
    }
    if (opt.format != "tsv" && opt.format != "json")
      throw std::invalid_argument("--format must be tsv or json");
    if (pos.empty()) {
      std::cerr << kUsage;
      return 2;
    }
    const std::string& cmd = pos[0];
    if (cmd == "solve") return cmd_solve(pos, opt);
    if (cmd == "seq") return cmd_seq(pos, opt);
    if (cmd == "classify") return cmd_classify(pos, opt);
    if (cmd == "sweep") return cmd_sweep(pos, opt);
    if (cmd == "identities") return cmd_identities(pos, opt);
    if (cmd == "level-set") return cmd_level_set(pos, opt);
    if (cmd == "eval") return cmd_eval(pos, opt);
    throw std::invalid_argument("unknown command: " + cmd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
