// Exit-code and output coverage for the command-line tool. Takes the CLI
// binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed\n";
    std::exit(1);
  }
  std::string out;
  char buf[512];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: test_cli_exit <staircase-binary>\n";
    return 1;
  }
  std::string cli = argv[1];
  std::string dir = "cli_exit_tmp";
  std::system(("mkdir -p " + dir).c_str());

  write_file(dir + "/staircase.ideal", "vars: x y\nideal: x^2, x*y, y^3\n");
  write_file(dir + "/not_primary.ideal", "vars: x y\nideal: x*y\n");
  write_file(dir + "/broken.ideal", "vars: x y\nideal: x^0\n");
  write_file(dir + "/quotient.ideal", "vars: x y\nquotient: x^2\nideal: y^4, x*y^2\n");

  RunResult r = run(cli + " compute " + dir + "/staircase.ideal e");
  expect(r.exit_code == 0 && r.out == "e = 5 (exact-volume)\n", "compute e");

  r = run(cli + " compute " + dir + "/staircase.ideal ehk");
  expect(r.exit_code == 0 && r.out == "e_HK = 4 (exact-regular-colength)\n",
         "compute ehk");

  r = run(cli + " compute " + dir + "/staircase.ideal colength");
  expect(r.exit_code == 0 && r.out == "colength = 4\n", "compute colength");

  r = run(cli + " compute " + dir + "/staircase.ideal socle");
  expect(r.exit_code == 0 && r.out == "socle = 2\n", "compute socle");

  r = run(cli + " compute " + dir + "/staircase.ideal closure");
  expect(r.exit_code == 0 && r.out == "closure = x^2, x*y, y^3\n", "compute closure");

  r = run(cli + " compute " + dir + "/staircase.ideal hs-seq:2");
  expect(r.exit_code == 0 && r.out == "hs-seq = 4 13\n", "compute hs-seq");

  r = run(cli + " compute " + dir + "/staircase.ideal hk-seq:2:3");
  expect(r.exit_code == 0 && r.out == "hk-seq = 4 4 4\n", "compute hk-seq");

  r = run(cli + " compute " + dir + "/quotient.ideal colength");
  expect(r.exit_code == 0 && r.out == "colength = 6\n", "quotient colength");

  r = run(cli + " compute " + dir + "/not_primary.ideal socle");
  expect(r.exit_code == 3, "not m-primary exits 3");

  r = run(cli + " compute " + dir + "/broken.ideal colength");
  expect(r.exit_code == 2, "parse error exits 2");

  r = run(cli + " compute " + dir + "/staircase.ideal no-such-invariant");
  expect(r.exit_code == 2, "unknown invariant exits 2");

  r = run(cli + " compute " + dir + "/missing.ideal colength");
  expect(r.exit_code == 2, "missing file exits 2");

  r = run(cli + " experiment dim-one-limit --N 1..5 --out " + dir + "/a.csv");
  expect(r.exit_code == 0 && r.out.rfind("PASS max_dev=1", 0) == 0,
         "experiment pass exits 0");

  // The n = 3 boundary case makes the strict margin fail.
  r = run(cli + " experiment nonreduced --n 3 --out " + dir + "/b.csv");
  expect(r.exit_code == 1 && r.out.rfind("FAIL", 0) == 0, "experiment fail exits 1");

  r = run(cli + " experiment nonreduced --n 4..6 --out " + dir + "/c.csv");
  expect(r.exit_code == 0, "nonreduced margin holds away from the boundary");

  r = run(cli + " experiment no-such-family --out " + dir + "/d.csv");
  expect(r.exit_code == 2, "unknown experiment exits 2");

  r = run(cli + " experiment fuzz --samples not-a-number");
  expect(r.exit_code == 2, "bad params exit 2");

  r = run(cli + " experiment fuzz --dim 2 --samples 25 --seed 42 --out " + dir +
          "/e.csv");
  expect(r.exit_code == 0, "small fuzz run passes");
  {
    std::ifstream csv(dir + "/e.csv");
    std::string header;
    std::getline(csv, header);
    expect(header ==
               "sample,param_n,colength,mu,ord,socle_len,e_num,e_den,ehk_num,"
               "ehk_den,ratio_num,ratio_den,verdict",
           "csv header schema");
    int lines = 0;
    std::string row;
    while (std::getline(csv, row))
      if (!row.empty()) ++lines;
    expect(lines == 25, "one csv row per sample");
  }

  r = run(cli + " --help");
  expect(r.exit_code == 0, "help exits 0");

  r = run(cli);
  expect(r.exit_code == 2, "no arguments exits 2");

  if (failures == 0) std::cout << "test_cli_exit: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
