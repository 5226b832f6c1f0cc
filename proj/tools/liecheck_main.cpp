// Command-line front end: batch verification of the rigid-orbit case file
// plus small exact calculators (Robinson-Schensted, Barbasch-Vogan, integral
// root systems, graded root sets).

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "liecheck/ledger.hpp"

using namespace liecheck;

namespace {

RatVec parseRatList(const std::string& s) {
  RatVec out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(parseRat(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

int runVerify(const std::string& casesPath, const std::string& onlyCase, bool detail,
              bool tableMode) {
  std::vector<CaseRecord> records;
  try {
    records = parseCasesFile(casesPath);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!onlyCase.empty()) {
    std::vector<CaseRecord> filtered;
    for (auto& r : records)
      if (r.id() == onlyCase) filtered.push_back(r);
    if (filtered.empty()) {
      std::cerr << "error: no case '" << onlyCase << "' in " << casesPath << "\n";
      return 2;
    }
    records = filtered;
  }
  SystemRegistry reg;
  std::vector<CheckReport> reports;
  bool allPass = true;
  for (const CaseRecord& rec : records) {
    reports.push_back(verifyCase(reg, rec));
    allPass = allPass && reports.back().pass();
  }
  std::cout << emitReport(records, reports, detail && !tableMode);
  if (tableMode) return 0;
  return allPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of rigid-orbit data in exceptional Lie algebras"};
  app.require_subcommand(1);

  std::string casesPath = "data/cases.txt";
  std::string onlyCase;
  bool detail = false;

  auto* verify = app.add_subcommand("verify", "replay every stored check");
  verify->add_option("--cases", casesPath, "case data file");
  verify->add_option("--case", onlyCase, "restrict to one SYSTEM/LABEL");
  verify->add_flag("--detail", detail, "print every sub-check");

  auto* table = app.add_subcommand("table", "summary table of all cases");
  table->add_option("--cases", casesPath, "case data file");

  std::string seqArg;
  auto* rs = app.add_subcommand("rs", "Robinson-Schensted shape of a sequence");
  rs->add_option("seq", seqArg, "comma-separated rationals")->required();

  std::string epsArg;
  auto* bv = app.add_subcommand("bv", "Barbasch-Vogan type-D partition");
  bv->add_option("eps", epsArg, "comma-separated epsilon coordinates")->required();

  std::string sysArg, weightArg;
  auto* itype = app.add_subcommand("integral-type", "Cartan type of the integral root system");
  itype->add_option("system", sysArg, "E6|E7|E8|F4|G2|Dn")->required();
  itype->add_option("weight", weightArg, "lambda+rho in fundamental-weight coordinates")
      ->required();

  std::string tauArg;
  long gradeK = 0;
  auto* grade = app.add_subcommand("grade", "positive roots of a given tau-degree");
  grade->add_option("system", sysArg, "E6|E7|E8|F4|G2|Dn")->required();
  grade->add_option("tau", tauArg, "comma-separated alpha_i(tau)")->required();
  grade->add_option("k", gradeK, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return runVerify(casesPath, onlyCase, detail, false);
    if (table->parsed()) return runVerify(casesPath, "", false, true);
    if (rs->parsed()) {
      std::cout << rsShape(parseRatList(seqArg)).str() << "\n";
      return 0;
    }
    if (bv->parsed()) {
      std::cout << bvTypeD(parseRatList(epsArg)).str() << "\n";
      return 0;
    }
    if (itype->parsed()) {
      int rank = 0;
      RootSystemData sys = buildRootSystem(parseSeries(sysArg, rank), rank);
      RatVec w = parseRatList(weightArg);
      if (int(w.size()) != sys.rank) {
        std::cerr << "error: weight needs " << sys.rank << " coordinates\n";
        return 2;
      }
      std::cout << integralRootSystem(sys, Weight{w}).cartanType << "\n";
      return 0;
    }
    if (grade->parsed()) {
      int rank = 0;
      RootSystemData sys = buildRootSystem(parseSeries(sysArg, rank), rank);
      RatVec t = parseRatList(tauArg);
      CocharacterTau tau;
      for (const Rat& v : t) {
        if (!isInteger(v)) throw std::invalid_argument("tau must be integral");
        tau.values.push_back(long(numerator(v)));
      }
      if (int(tau.values.size()) != sys.rank) {
        std::cerr << "error: tau needs " << sys.rank << " entries\n";
        return 2;
      }
      for (const Root& r : gradedPositiveRoots(sys, tau, gradeK))
        std::cout << "(" << r.str() << ")\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
