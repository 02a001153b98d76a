// Command-line front end: parse ring/ideal files, compute invariants, run
// experiments, emit CSV.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "staircase/counting.hpp"
#include "staircase/experiments.hpp"
#include "staircase/ideal_file.hpp"
#include "staircase/ideal_ops.hpp"
#include "staircase/multiplicity.hpp"
#include "staircase/newton.hpp"

namespace {

using namespace staircase;

int usage(std::ostream& out, int code) {
  out << "usage:\n"
         "  staircase compute <file> <invariant>\n"
         "      invariant: colength | mu | ord | socle | closure | e | ehk\n"
         "                 | hs-seq:<n> | hk-seq:<p>:<e>\n"
         "  staircase experiment <name> [--seed <u64>] [--samples <n>]\n"
         "      [--out <path.csv>] [--param k=v | --k v]...\n"
         "      names:";
  for (const auto& n : experiment_names()) out << ' ' << n;
  out << "\n";
  return code;
}

int cmd_compute(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open file: " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ParsedIdealFile f = parse_ideal_file(buf.str());

  if (flag == "colength") {
    std::cout << "colength = " << colength(f.ring, f.ideal) << "\n";
  } else if (flag == "mu") {
    std::cout << "mu = " << min_gens(f.ring, f.ideal) << "\n";
  } else if (flag == "ord") {
    std::cout << "ord = " << ord(f.ring, f.ideal) << "\n";
  } else if (flag == "socle") {
    std::cout << "socle = " << socle_length(f.ring, f.ideal) << "\n";
  } else if (flag == "closure") {
    if (f.ring.is_polynomial()) {
      std::cout << "closure = "
                << format_ideal(integral_closure(f.ideal), f.var_names) << "\n";
    } else {
      MonomialIdeal ambient = sum(f.ideal, f.ring.defining);
      std::cout << "closure (computed in ambient ring) = "
                << format_ideal(integral_closure(ambient), f.var_names) << "\n";
    }
  } else if (flag == "e") {
    MultiplicityResult r = hs_multiplicity(f.ring, f.ideal);
    std::cout << "e = " << to_string(r.value) << " (" << method_name(r.method) << ")\n";
  } else if (flag == "ehk") {
    MultiplicityResult r = hk_multiplicity(f.ring, f.ideal);
    std::cout << "e_HK = " << to_string(r.value) << " (" << method_name(r.method) << ")\n";
  } else if (flag.rfind("hs-seq:", 0) == 0) {
    Count n = parse_count_list(flag.substr(7)).at(0);
    std::cout << "hs-seq =";
    for (Count l : hs_sequence(f.ring, f.ideal, n)) std::cout << ' ' << l;
    std::cout << "\n";
  } else if (flag.rfind("hk-seq:", 0) == 0) {
    std::string rest = flag.substr(7);
    std::size_t colon_pos = rest.find(':');
    if (colon_pos == std::string::npos)
      throw malformed_input("hk-seq wants hk-seq:<p>:<e>");
    Count p = parse_count_list(rest.substr(0, colon_pos)).at(0);
    Count e = parse_count_list(rest.substr(colon_pos + 1)).at(0);
    std::cout << "hk-seq =";
    for (const Rational& v : hk_sequence(f.ring, f.ideal, p, e))
      std::cout << ' ' << to_string(v);
    std::cout << "\n";
  } else {
    std::cerr << "unknown invariant: " << flag << "\n";
    return usage(std::cerr, 2);
  }
  return 0;
}

int cmd_experiment(const std::string& name, const std::vector<std::string>& args) {
  std::map<std::string, std::string> params;
  std::string out_path = name + ".csv";
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) throw malformed_input("expected a --flag, got: " + a);
    std::string key = a.substr(2);
    if (key == "param") {
      if (i + 1 >= args.size()) throw malformed_input("--param wants k=v");
      std::string kv = args[++i];
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos) throw malformed_input("--param wants k=v, got: " + kv);
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    } else {
      if (i + 1 >= args.size()) throw malformed_input("--" + key + " wants a value");
      std::string value = args[++i];
      if (key == "out")
        out_path = value;
      else
        params[key] = value;
    }
  }
  ExperimentReport report = run_experiment(name, params);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write: " << out_path << "\n";
    return 2;
  }
  out << to_csv(report);
  for (const auto& row : report.rows)
    if (!row.pass)
      std::cerr << "FAIL sample " << row.sample << " [" << row.note
                << "] ideal: " << row.ideal << "\n";
  std::cout << (report.pass ? "PASS" : "FAIL")
            << " max_dev=" << to_string(report.max_dev) << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage(std::cerr, 2);
  try {
    if (args[0] == "--help" || args[0] == "help") return usage(std::cout, 0);
    if (args[0] == "compute") {
      if (args.size() != 3) return usage(std::cerr, 2);
      return cmd_compute(args[1], args[2]);
    }
    if (args[0] == "experiment") {
      if (args.size() < 2) return usage(std::cerr, 2);
      return cmd_experiment(args[1], {args.begin() + 2, args.end()});
    }
    std::cerr << "unknown command: " << args[0] << "\n";
    return usage(std::cerr, 2);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const malformed_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const invalid_ring& e) {
    std::cerr << "invalid ring: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
