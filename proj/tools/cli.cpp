#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vecdil/ehrhart.hpp"
#include "vecdil/io_json.hpp"
#include "vecdil/lattice.hpp"

namespace vecdil::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string input = "-";
  std::string output = "-";
  uint64_t max_points = kDefaultMaxPoints;
  uint64_t seed = 0;
};

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(opt.input);
  if (!f) throw ParseError("cannot open input file: " + opt.input);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw ParseError("cannot open output file: " + opt.output);
  f << text << "\n";
}

std::vector<VRep> parse_parts(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
    throw ParseError("expected an object with a nonempty \"parts\" array");
  std::vector<VRep> parts;
  for (const auto& p : j["parts"]) parts.push_back(parse_polytope(p.dump()));
  return parts;
}

std::string expo_key(const MPoly::Expo& e) {
  std::ostringstream os;
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

json signature_json(const Chamber& ch) {
  json sig = json::array();
  for (const auto& active : ch.fan_signature) sig.push_back(active);
  return sig;
}

int cmd_count(const Options& opt, std::istream& in, std::ostream& out, bool interior) {
  HRep h = parse_hrep(read_input(opt, in));
  uint64_t c = interior ? count_interior(h, opt.max_points) : count(h, opt.max_points);
  write_output(opt, out, std::to_string(c));
  return 0;
}

int cmd_vertices(const Options& opt, std::istream& in, std::ostream& out) {
  HRep h = parse_hrep(read_input(opt, in));
  write_output(opt, out, vrep_json(vertices(h)));
  return 0;
}

int cmd_chamber(const Options& opt, std::istream& in, std::ostream& out) {
  HRep h = parse_hrep(read_input(opt, in));
  write_output(opt, out, chamber_json(chamber_of(h.A, h.b)));
  return 0;
}

int cmd_ehrhart(const Options& opt, std::istream& in, std::ostream& out) {
  VRep p = parse_polytope(read_input(opt, in));
  write_output(opt, out, quasipoly_json(reconstruct_univariate(p, opt.max_points)));
  return 0;
}

int cmd_mink_ehrhart(const Options& opt, std::istream& in, std::ostream& out) {
  std::vector<VRep> parts = parse_parts(read_input(opt, in));
  write_output(opt, out, quasipoly_json(reconstruct_minkowski(parts, opt.max_points)));
  return 0;
}

int cmd_rhs_ehrhart(const Options& opt, std::istream& in, std::ostream& out) {
  HRep h = parse_hrep(read_input(opt, in));
  Chamber ch = chamber_of(h.A, h.b);
  RhsQuasiPoly rqp = reconstruct_rhs(h.A, ch);
  json j;
  j["fan_signature"] = signature_json(ch);
  json gens = json::array();
  for (const RatVec& g : rqp.generators) {
    json gv = json::array();
    for (const Rat& x : g) gv.push_back(rat_str(x));
    gens.push_back(std::move(gv));
  }
  j["generators"] = std::move(gens);
  json periods = json::array();
  for (const Rat& d : rqp.periods) periods.push_back(rat_str(d));
  j["periods"] = std::move(periods);
  json phi;
  for (const auto& [expo, val] : rqp.phi_at(h.b, opt.max_points)) phi[expo_key(expo)] = rat_str(val);
  j["phi"] = std::move(phi);
  j["value"] = rat_str(rqp.evaluate(h.b, opt.max_points));
  write_output(opt, out, j.dump());
  return 0;
}

int cmd_reciprocity(const Options& opt, std::istream& in, std::ostream& out) {
  HRep h = parse_hrep(read_input(opt, in));
  ReciprocityReport rep = reciprocity_check(h, opt.max_points);
  json j;
  j["phi_reflected"] = rat_str(rep.phi_reflected);
  j["interior_count"] = rep.interior_count;
  j["equal"] = rep.equal;
  write_output(opt, out, j.dump());
  return 0;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  std::string text = read_input(opt, in);
  json fixture = json::parse(text, nullptr, false);
  if (fixture.is_discarded()) throw ParseError("malformed JSON");
  std::vector<VRep> parts = parse_parts(text);
  size_t k = parts.size();

  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass) {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    checks.push_back(std::move(c));
    if (!pass) all_pass = false;
  };

  MultiQuasiPoly qp = reconstruct_minkowski(parts, opt.max_points);

  if (fixture.contains("golden")) {
    for (const auto& g : fixture["golden"]) {
      RatVec point;
      for (const auto& x : g["point"]) {
        auto r = parse_rat(x.get<std::string>());
        if (!r) throw ParseError("bad golden point");
        point.push_back(*r);
      }
      CoeffVector cv = qp.coefficients(point);
      bool pass = true;
      for (const auto& [key, val] : g["coeffs"].items()) {
        auto expect = parse_rat(val.get<std::string>());
        if (!expect) throw ParseError("bad golden coefficient");
        bool found = false;
        for (const auto& [expo, actual] : cv.values)
          if (expo_key(expo) == key) {
            found = true;
            if (actual != *expect) pass = false;
          }
        if (!found) pass = false;
      }
      std::string label = "coeffs@(";
      for (size_t i = 0; i < point.size(); ++i) label += (i ? "," : "") + rat_str(point[i]);
      record(label + ")", pass);
    }
  }

  record("derivative-ladder", derivative_check_all(qp));

  RatVec zero(k, Rat(0));
  CoeffVector at0 = qp.coefficients(zero);
  MPoly::Expo zexpo(k, 0);
  record("constant-term-at-origin", at0.values.at(zexpo) == 1 && qp.evaluate(zero) == 1);

  std::mt19937 rng(uint32_t(opt.seed));
  std::uniform_int_distribution<int> den_pick(1, 8);
  bool periodic_ok = true;
  for (int t = 0; t < 10; ++t) {
    RatVec r(k);
    for (size_t j = 0; j < k; ++j) {
      int q = den_pick(rng);
      int p = int(rng() % uint32_t(q));
      r[j] = rat(p, q) * qp.periods[j];
    }
    CoeffVector base = qp.coefficients(r);
    for (size_t j = 0; j < k; ++j) {
      RatVec shifted = r;
      shifted[j] += qp.periods[j];
      if (qp.coefficients(shifted).values != base.values) periodic_ok = false;
    }
  }
  record("coefficient-periodicity", periodic_ok);

  json j;
  j["checks"] = std::move(checks);
  j["pass"] = all_pass;
  write_output(opt, out, j.dump());
  return all_pass ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact lattice-point counting and quasi-polynomial reconstruction for "
               "vector-dilated polytopes"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> names = {"count",       "interior",    "vertices",
                                          "chamber",     "ehrhart",     "mink-ehrhart",
                                          "rhs-ehrhart", "reciprocity", "verify"};
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input, "Input JSON path, or - for stdin");
    sub->add_option("--output", opt.output, "Output path, or - for stdout");
    sub->add_option("--max-points", opt.max_points, "Enumeration budget guard");
    sub->add_option("--seed", opt.seed, "Seed for randomized property checks");
    sub->callback([&opt, name] { opt.command = name; });
  }

  try {
    // CLI11 parses back-to-front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (opt.command == "count") return cmd_count(opt, in, out, false);
    if (opt.command == "interior") return cmd_count(opt, in, out, true);
    if (opt.command == "vertices") return cmd_vertices(opt, in, out);
    if (opt.command == "chamber") return cmd_chamber(opt, in, out);
    if (opt.command == "ehrhart") return cmd_ehrhart(opt, in, out);
    if (opt.command == "mink-ehrhart") return cmd_mink_ehrhart(opt, in, out);
    if (opt.command == "rhs-ehrhart") return cmd_rhs_ehrhart(opt, in, out);
    if (opt.command == "reciprocity") return cmd_reciprocity(opt, in, out);
    if (opt.command == "verify") return cmd_verify(opt, in, out);
    err << "error: unknown command\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace vecdil::cli
