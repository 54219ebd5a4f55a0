// Command-line front end: classification, normal forms, the matrix
// exponential, gradient-flow trajectories, ruling lines, orbit samples and
// symplectic form evaluations, emitted as text, JSON or CSV.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "sl2/sl2.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Args {
  std::map<std::string, std::string> values;
  std::set<std::string> flags;
};

std::string strip_dashes(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && s[i] == '-') ++i;
  return s.substr(i);
}

Args parse_args(int argc, char** argv, int first, const std::set<std::string>& valued,
                const std::set<std::string>& boolean) {
  Args args;
  for (int i = first; i < argc; ++i) {
    const std::string tok = argv[i];
    if (tok.empty() || tok[0] != '-')
      throw UsageError("unexpected argument '" + tok + "'");
    const std::string key = strip_dashes(tok);
    if (boolean.count(key)) {
      args.flags.insert(key);
      continue;
    }
    if (!valued.count(key)) throw UsageError("unknown option '" + tok + "'");
    if (i + 1 >= argc) throw UsageError("option '" + tok + "' needs a value");
    args.values[key] = argv[++i];
  }
  return args;
}

double parse_double(const Args& args, const std::string& key) {
  const auto it = args.values.find(key);
  if (it == args.values.end()) throw UsageError("missing option '-" + key + "'");
  const char* s = it->second.c_str();
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0') throw UsageError("option '-" + key + "': bad number '" + it->second + "'");
  return v;
}

double parse_double_or(const Args& args, const std::string& key, double fallback) {
  return args.values.count(key) ? parse_double(args, key) : fallback;
}

long long parse_int(const Args& args, const std::string& key) {
  const auto it = args.values.find(key);
  if (it == args.values.end()) throw UsageError("missing option '-" + key + "'");
  const char* s = it->second.c_str();
  char* end = nullptr;
  const long long v = std::strtoll(s, &end, 10);
  if (end == s || *end != '\0') throw UsageError("option '-" + key + "': bad integer '" + it->second + "'");
  return v;
}

long long parse_int_or(const Args& args, const std::string& key, long long fallback) {
  return args.values.count(key) ? parse_int(args, key) : fallback;
}

sl2::Vec3 parse_triple(const Args& args, const std::string& key) {
  const auto it = args.values.find(key);
  if (it == args.values.end()) throw UsageError("missing option '--" + key + "'");
  double c[3];
  std::string rest = it->second;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = rest.find(',');
    const std::string part = k < 2 ? rest.substr(0, comma) : rest;
    if (k < 2 && comma == std::string::npos)
      throw UsageError("option '--" + key + "': expected X,Y,Z");
    char* end = nullptr;
    c[k] = std::strtod(part.c_str(), &end);
    if (end == part.c_str() || *end != '\0')
      throw UsageError("option '--" + key + "': bad number '" + part + "'");
    if (k < 2) rest = rest.substr(comma + 1);
  }
  return {c[0], c[1], c[2]};
}

sl2::LieVector parse_xyz(const Args& args) {
  return {parse_double(args, "x"), parse_double(args, "y"), parse_double(args, "z")};
}

int emit_domain_error(const sl2::domain_error& e, bool json) {
  if (json)
    std::cout << "{\"error\":\"" << sl2::to_string(e.code()) << "\"}\n";
  else
    std::cout << "error: " << sl2::to_string(e.code()) << "\n";
  return 2;
}

std::string class_json(const sl2::OrbitClass& c) {
  std::string s = "{\"class\":\"";
  s += sl2::to_string(c.tag);
  s += "\"";
  if (sl2::has_lambda(c.tag)) {
    s += ",\"lambda\":";
    s += fmt(c.lambda);
  }
  s += "}";
  return s;
}

std::string limit_text(const sl2::LimitTag& tag) {
  if (tag.kind == sl2::LimitKind::escapes) return "escapes";
  return "converges_to " + fmt(tag.point.x) + " " + fmt(tag.point.y) + " " + fmt(tag.point.z);
}

int cmd_classify(int argc, char** argv) {
  const Args args = parse_args(argc, argv, 2, {"x", "y", "z", "tol"}, {"json"});
  const bool json = args.flags.count("json") > 0;
  const sl2::LieVector h = parse_xyz(args);
  const double tol = parse_double_or(args, "tol", sl2::kClassifyTol);
  try {
    const sl2::OrbitClass c = sl2::classify(h, tol);
    if (json) {
      std::cout << class_json(c) << "\n";
    } else {
      std::cout << "class: " << sl2::to_string(c.tag) << "\n";
      if (sl2::has_lambda(c.tag)) std::cout << "lambda: " << fmt(c.lambda) << "\n";
    }
    return 0;
  } catch (const sl2::domain_error& e) {
    return emit_domain_error(e, json);
  }
}

int cmd_normal_form(int argc, char** argv) {
  const Args args = parse_args(argc, argv, 2, {"x", "y", "z"}, {"json"});
  const bool json = args.flags.count("json") > 0;
  const sl2::LieVector h = parse_xyz(args);
  try {
    const sl2::NormalFormResult nf = sl2::normal_form(h);
    const sl2::Mat2& g = nf.conjugator.mat;
    if (json) {
      std::string s = class_json(nf.orbit_class);
      s.pop_back();  // strip '}'
      s += ",\"representative\":[" + fmt(nf.representative.x) + "," + fmt(nf.representative.y) +
           "," + fmt(nf.representative.z) + "]";
      s += ",\"conjugator\":[[" + fmt(g.m11) + "," + fmt(g.m12) + "],[" + fmt(g.m21) + "," +
           fmt(g.m22) + "]]}";
      std::cout << s << "\n";
    } else {
      std::cout << "class: " << sl2::to_string(nf.orbit_class.tag) << "\n";
      if (sl2::has_lambda(nf.orbit_class.tag))
        std::cout << "lambda: " << fmt(nf.orbit_class.lambda) << "\n";
      std::cout << "representative: " << fmt(nf.representative.x) << " "
                << fmt(nf.representative.y) << " " << fmt(nf.representative.z) << "\n";
      std::cout << "conjugator: " << fmt(g.m11) << " " << fmt(g.m12) << " " << fmt(g.m21) << " "
                << fmt(g.m22) << "\n";
    }
    return 0;
  } catch (const sl2::domain_error& e) {
    return emit_domain_error(e, json);
  }
}

int cmd_exp(int argc, char** argv) {
  const Args args = parse_args(argc, argv, 2, {"x", "y", "z"}, {"json"});
  const bool json = args.flags.count("json") > 0;
  const sl2::Mat2 m = sl2::exp(parse_xyz(args)).mat;
  if (json)
    std::cout << "{\"matrix\":[[" << fmt(m.m11) << "," << fmt(m.m12) << "],[" << fmt(m.m21) << ","
              << fmt(m.m22) << "]]}\n";
  else
    std::cout << fmt(m.m11) << " " << fmt(m.m12) << "\n" << fmt(m.m21) << " " << fmt(m.m22) << "\n";
  return 0;
}

int cmd_flow(int argc, char** argv) {
  const Args args =
      parse_args(argc, argv, 2, {"x", "y", "z", "t-end", "step", "method", "out"}, {});
  const sl2::LieVector h = parse_xyz(args);
  const sl2::Vec3 p0 = sl2::coords(h);
  const double t_end = parse_double(args, "t-end");
  const double step = parse_double_or(args, "step", 1e-3);
  const std::string method =
      args.values.count("method") ? args.values.at("method") : std::string("rk4");
  if (method != "rk4" && method != "exact")
    throw UsageError("--method must be 'exact' or 'rk4'");

  std::ofstream file;
  if (args.values.count("out")) {
    file.open(args.values.at("out"));
    if (!file) throw UsageError("cannot open output file '" + args.values.at("out") + "'");
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

  try {
    sl2::Trajectory tr;
    if (method == "rk4") {
      tr = sl2::flow_numeric(p0, t_end, step);
    } else {
      if (!(step > 0.0)) throw std::invalid_argument("flow: step must be > 0");
      std::tie(tr.limit_forward, tr.limit_backward) = sl2::flow_limits(p0);
      const double dir = t_end >= 0.0 ? 1.0 : -1.0;
      const double total = std::abs(t_end);
      const auto nsteps =
          static_cast<std::size_t>(std::max(0.0, std::ceil(total / step - 1e-9)));
      tr.samples.push_back({0.0, p0});
      for (std::size_t k = 1; k <= nsteps; ++k) {
        const double t = dir * std::min(step * static_cast<double>(k), total);
        const sl2::Vec3 p = sl2::flow_exact(p0, t);
        tr.samples.push_back({t, p});
        if (sl2::norm(p) > sl2::kEscapeRadius) break;
      }
    }
    out << "t,x,y,z\n";
    for (const sl2::TrajectorySample& s : tr.samples)
      out << fmt(s.t) << "," << fmt(s.p.x) << "," << fmt(s.p.y) << "," << fmt(s.p.z) << "\n";
    out << "# limit_forward: " << limit_text(tr.limit_forward) << "\n";
    out << "# limit_backward: " << limit_text(tr.limit_backward) << "\n";
    return 0;
  } catch (const sl2::domain_error& e) {
    return emit_domain_error(e, false);
  }
}

int cmd_ruling(int argc, char** argv) {
  const Args args = parse_args(
      argc, argv, 2, {"lambda", "theta", "px", "py", "pz", "t-min", "t-max", "samples", "out"}, {});
  const double lambda = parse_double(args, "lambda");
  const double t_min = parse_double(args, "t-min");
  const double t_max = parse_double(args, "t-max");
  const long long n = parse_int(args, "samples");
  if (n < 1) throw UsageError("--samples must be >= 1");
  if (t_max < t_min) throw UsageError("--t-max must be >= --t-min");
  const bool have_theta = args.values.count("theta") > 0;
  const bool have_point =
      args.values.count("px") || args.values.count("py") || args.values.count("pz");
  if (have_theta == have_point)
    throw UsageError("give either --theta or all of --px --py --pz");

  std::ofstream file;
  if (args.values.count("out")) {
    file.open(args.values.at("out"));
    if (!file) throw UsageError("cannot open output file '" + args.values.at("out") + "'");
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

  try {
    std::pair<sl2::RulingLine, sl2::RulingLine> lines;
    if (have_theta) {
      const double theta = parse_double(args, "theta");
      const auto [l1, l2] = sl2::base_lines(lambda);
      lines = {sl2::rotate_line(l1, theta), sl2::rotate_line(l2, theta)};
    } else {
      const sl2::Vec3 p{parse_double(args, "px"), parse_double(args, "py"),
                        parse_double(args, "pz")};
      lines = sl2::lines_through_point(p, lambda);
    }
    out << "family,t,x,y,z\n";
    for (const sl2::RulingLine* line : {&lines.first, &lines.second}) {
      for (long long i = 0; i < n; ++i) {
        const double t =
            n == 1 ? t_min : t_min + (t_max - t_min) * static_cast<double>(i) / (n - 1);
        const sl2::Vec3 p = sl2::point_at(*line, t);
        out << sl2::to_string(line->family) << "," << fmt(t) << "," << fmt(p.x) << ","
            << fmt(p.y) << "," << fmt(p.z) << "\n";
      }
    }
    return 0;
  } catch (const sl2::domain_error& e) {
    return emit_domain_error(e, false);
  }
}

int cmd_sample(int argc, char** argv) {
  const Args args = parse_args(argc, argv, 2, {"class", "lambda", "n", "seed", "out"}, {});
  const auto it = args.values.find("class");
  if (it == args.values.end()) throw UsageError("missing option '--class'");
  sl2::OrbitClass cls;
  bool known = false;
  for (const sl2::OrbitTag tag :
       {sl2::OrbitTag::one_sheeted, sl2::OrbitTag::two_sheeted_upper,
        sl2::OrbitTag::two_sheeted_lower, sl2::OrbitTag::cone_upper, sl2::OrbitTag::cone_lower,
        sl2::OrbitTag::zero}) {
    if (it->second == sl2::to_string(tag)) {
      cls.tag = tag;
      known = true;
      break;
    }
  }
  if (!known) throw UsageError("unknown class '" + it->second + "'");
  cls.lambda = sl2::has_lambda(cls.tag) ? parse_double_or(args, "lambda", 1.0) : 0.0;
  const long long n = parse_int(args, "n");
  if (n < 1) throw UsageError("-n must be >= 1");
  const long long seed = parse_int_or(args, "seed", 0);

  std::ofstream file;
  if (args.values.count("out")) {
    file.open(args.values.at("out"));
    if (!file) throw UsageError("cannot open output file '" + args.values.at("out") + "'");
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

  try {
    const auto pts =
        sl2::orbit_sample(cls, static_cast<std::size_t>(n), static_cast<std::uint64_t>(seed));
    out << "x,y,z\n";
    for (const sl2::LieVector& p : pts)
      out << fmt(p.x) << "," << fmt(p.y) << "," << fmt(p.z) << "\n";
    return 0;
  } catch (const sl2::domain_error& e) {
    return emit_domain_error(e, false);
  }
}

int cmd_kks(int argc, char** argv) {
  const Args args = parse_args(argc, argv, 2, {"px", "py", "pz", "v", "w"}, {"json"});
  const bool json = args.flags.count("json") > 0;
  const sl2::LieVector p{parse_double(args, "px"), parse_double(args, "py"),
                         parse_double(args, "pz")};
  const sl2::Vec3 v = parse_triple(args, "v");
  const sl2::Vec3 w = parse_triple(args, "w");
  try {
    const double value = sl2::kks(p, v, w);
    if (json)
      std::cout << "{\"value\":" << fmt(value) << "}\n";
    else
      std::cout << fmt(value) << "\n";
    return 0;
  } catch (const sl2::domain_error& e) {
    return emit_domain_error(e, json);
  }
}

const char* kUsage =
    "usage: sl2orbits <command> [options]\n"
    "\n"
    "commands:\n"
    "  classify    -x F -y F -z F [--tol F] [--json]\n"
    "  normal-form -x F -y F -z F [--json]\n"
    "  exp         -x F -y F -z F [--json]\n"
    "  flow        -x F -y F -z F --t-end F [--step F=1e-3] [--method exact|rk4] [--out PATH]\n"
    "  ruling      --lambda F (--theta F | --px F --py F --pz F) --t-min F --t-max F --samples N\n"
    "              [--out PATH]\n"
    "  sample      --class NAME --lambda F -n N --seed N [--out PATH]\n"
    "  kks         -px F -py F -pz F --v X,Y,Z --w X,Y,Z [--json]\n";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 1;
  }
  const std::string cmd = argv[1];
  try {
    if (cmd == "classify") return cmd_classify(argc, argv);
    if (cmd == "normal-form") return cmd_normal_form(argc, argv);
    if (cmd == "exp") return cmd_exp(argc, argv);
    if (cmd == "flow") return cmd_flow(argc, argv);
    if (cmd == "ruling") return cmd_ruling(argc, argv);
    if (cmd == "sample") return cmd_sample(argc, argv);
    if (cmd == "kks") return cmd_kks(argc, argv);
    std::cerr << "unknown command '" << cmd << "'\n" << kUsage;
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsage;
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
