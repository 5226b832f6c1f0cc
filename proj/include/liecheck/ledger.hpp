#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liecheck/bv.hpp"
#include "liecheck/grading.hpp"
#include "liecheck/losev.hpp"
#include "liecheck/root_system.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck {

enum class Route { JOSEPH, BV_SPECIAL, LO2, RECORDED };

inline std::string routeName(Route r) {
  switch (r) {
    case Route::JOSEPH: return "JOSEPH";
    case Route::BV_SPECIAL: return "BV_SPECIAL";
    case Route::LO2: return "LO2";
    case Route::RECORDED: return "RECORDED";
  }
  return "?";
}

struct Lo2Data {
  long dimGLambda = 0;
  long dimOrbit = 0;
};

struct CandidateWeight {
  Weight lambdaPlusRho;
  Route route = Route::RECORDED;
  std::string claimedIntegralType;  // empty = no claim recorded
  std::optional<Lo2Data> lo2;
  std::vector<Root> bvSubsystem;  // D_n simple system for the BV replay
  WeylWord conjWord;              // BV_SPECIAL: lambda+rho = conjWord(h^vee/2)
};

// One stored Weyl-group fact. Kind "apply": word(source) == expect.
// Kind "pizero": with w the product of reflections about basis roots
// (word indexes into basis), mu+rho := w^{-1}(candidate weight) must pair to
// zero exactly on `zeros`, non-negatively on the rest of the basis, and
// `zeros` must lie in {beta in basis : w(beta) < 0}.
struct WeylIdentity {
  std::string kind;  // "apply" | "pizero"
  WeylWord word;
  std::string source;  // "half_hvee" | "cand.K" | explicit vector
  RatVec sourceVec;
  RatVec expectVec;
  int candidate = 1;
  std::vector<Root> basis;
  std::set<int> zeros;  // 1-based positions into basis
  bool equalRelation = false;
  std::string raw;
};

// One stored descent/star fact from the cell tables.
struct StarTableEntry {
  std::string kind;  // "L" (descent set) | "star"
  WeylWord word;
  std::set<int> expectSet;   // for "L"
  WeylWord expectWord;       // for "star"
  int s = 0, t = 0;
  std::string raw;
};

struct CaseRecord {
  std::string system;       // "E8", ..., "G2"
  std::string dynkinLabel;  // e.g. "A3+A1"
  Pinning pinning;
  CocharacterTau tau;
  long dimCentralizer = 0;
  std::string componentGroup;
  long claimedCount0 = 0, claimedCount1 = 0;
  std::vector<long> claimedTwoRhoE;
  bool standardLevi = true;
  bool perfectCentralizer = true;  // g_e = [g_e, g_e]
  std::optional<Weight> halfHvee;
  std::vector<CandidateWeight> candidates;
  std::vector<WeylIdentity> weylIdentities;
  std::vector<StarTableEntry> starTables;
  std::string notes;

  std::string id() const { return system + "/" + dynkinLabel; }
  bool special() const { return halfHvee.has_value(); }
};

enum class CheckStatus { PASS, FAIL, RECORDED };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::PASS;
  std::string detail;
};

struct CheckReport {
  std::string caseId;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::FAIL) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Case file parser
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> splitList(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

inline std::vector<long> parseLongs(const std::string& s, int line) {
  std::vector<long> out;
  for (const std::string& tok : splitList(s, ',')) {
    try {
      out.push_back(std::stol(tok));
    } catch (...) {
      throw std::runtime_error("line " + std::to_string(line) + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

inline RatVec parseRats(const std::string& s, int line) {
  RatVec out;
  for (const std::string& tok : splitList(s, ',')) {
    try {
      out.push_back(parseRat(tok));
    } catch (...) {
      throw std::runtime_error("line " + std::to_string(line) + ": bad rational '" + tok + "'");
    }
  }
  return out;
}

inline std::vector<Root> parseRootList(const std::string& s, int line) {
  std::vector<Root> out;
  for (const std::string& part : splitList(s, ';')) {
    std::vector<long> c = parseLongs(part, line);
    Root r;
    for (long x : c) r.coeffs.push_back(int(x));
    out.push_back(r);
  }
  return out;
}

// key=value tokens inside a structured field, separated by spaces.
inline std::map<std::string, std::string> parseKV(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::istringstream is(s);
  std::string tok;
  std::string head;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      head += (head.empty() ? "" : " ") + tok;
    } else {
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  kv["_head"] = head;
  return kv;
}

}  // namespace detail

inline std::vector<CaseRecord> parseCases(std::istream& in) {
  std::vector<CaseRecord> records;
  CaseRecord* cur = nullptr;
  std::string line;
  int lineNo = 0;
  std::map<std::string, int> ranks = {{"E6", 6}, {"E7", 7}, {"E8", 8}, {"F4", 4}, {"G2", 2}};

  auto finalize = [&](CaseRecord& rec, int atLine) {
    int rank = ranks.at(rec.system);
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("case " + rec.id() + " (near line " + std::to_string(atLine) +
                               "): " + what);
    };
    if (int(rec.tau.values.size()) != rank) fail("tau has wrong length");
    if (int(rec.claimedTwoRhoE.size()) != rank) fail("two_rho_e has wrong length");
    if ((2 * (rec.claimedCount0 + rec.claimedCount1) + rank) != rec.dimCentralizer)
      fail("counts violate |Phi+(0)|+|Phi+(1)| = (dim g_e - rk)/2");
    for (int i : rec.pinning.I)
      if (i < 1 || i > rank) fail("pinning index out of range");
    for (const auto& cand : rec.candidates) {
      if (int(cand.lambdaPlusRho.coeffs.size()) != rank) fail("candidate weight length");
      if (cand.route == Route::BV_SPECIAL && !rec.halfHvee) fail("BV_SPECIAL without half_hvee");
      if (cand.route == Route::LO2 && !cand.lo2) fail("LO2 route without lo2 data");
    }
    if (rec.halfHvee && int(rec.halfHvee->coeffs.size()) != rank) fail("half_hvee length");
  };

  while (std::getline(in, line)) {
    ++lineNo;
    std::string text = detail::trim(line);
    if (text.empty() || text[0] == '#') continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.substr(1, 5) != "case ")
        throw std::runtime_error("line " + std::to_string(lineNo) + ": malformed case header");
      std::string id = detail::trim(text.substr(6, text.size() - 7));
      auto slash = id.find('/');
      if (slash == std::string::npos)
        throw std::runtime_error("line " + std::to_string(lineNo) + ": case id needs SYSTEM/LABEL");
      if (cur) finalize(*cur, lineNo);
      records.emplace_back();
      cur = &records.back();
      cur->system = id.substr(0, slash);
      cur->dynkinLabel = id.substr(slash + 1);
      if (!ranks.count(cur->system))
        throw std::runtime_error("line " + std::to_string(lineNo) + ": unknown system '" +
                                 cur->system + "'");
      continue;
    }
    auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineNo) + ": expected key = value");
    if (!cur)
      throw std::runtime_error("line " + std::to_string(lineNo) + ": key outside of any case");
    std::string key = detail::trim(text.substr(0, eq));
    std::string val = detail::trim(text.substr(eq + 1));

    auto wants = [&](const std::string& prefix, int& idx) {
      if (key.rfind(prefix, 0) != 0) return false;
      std::string rest = key.substr(prefix.size());
      auto dot = rest.find('.');
      std::string num = dot == std::string::npos ? rest : rest.substr(0, dot);
      try {
        idx = std::stoi(num);
      } catch (...) {
        throw std::runtime_error("line " + std::to_string(lineNo) + ": bad index in '" + key + "'");
      }
      return true;
    };

    if (key == "pinning") {
      for (long v : detail::parseLongs(val, lineNo)) cur->pinning.I.insert(int(v));
    } else if (key == "tau") {
      cur->tau.values = detail::parseLongs(val, lineNo);
    } else if (key == "dim_centralizer") {
      cur->dimCentralizer = std::stol(val);
    } else if (key == "component_group") {
      cur->componentGroup = val;
    } else if (key == "counts") {
      auto c = detail::parseLongs(val, lineNo);
      if (c.size() != 2)
        throw std::runtime_error("line " + std::to_string(lineNo) + ": counts needs two entries");
      cur->claimedCount0 = c[0];
      cur->claimedCount1 = c[1];
    } else if (key == "two_rho_e") {
      cur->claimedTwoRhoE = detail::parseLongs(val, lineNo);
    } else if (key == "standard_levi") {
      cur->standardLevi = (val == "true");
    } else if (key == "perfect_centralizer") {
      cur->perfectCentralizer = (val == "true");
    } else if (key == "half_hvee") {
      cur->halfHvee = Weight{detail::parseRats(val, lineNo)};
    } else if (key == "notes") {
      cur->notes = val;
    } else if (int idx; wants("candidate.", idx)) {
      while (int(cur->candidates.size()) < idx) cur->candidates.emplace_back();
      CandidateWeight& cand = cur->candidates[idx - 1];
      std::string field = key.substr(key.find('.', 10) + 1);
      if (field == "weight") {
        cand.lambdaPlusRho.coeffs = detail::parseRats(val, lineNo);
      } else if (field == "route") {
        if (val == "JOSEPH") cand.route = Route::JOSEPH;
        else if (val == "BV_SPECIAL") cand.route = Route::BV_SPECIAL;
        else if (val == "LO2") cand.route = Route::LO2;
        else if (val == "RECORDED") cand.route = Route::RECORDED;
        else throw std::runtime_error("line " + std::to_string(lineNo) + ": unknown route");
      } else if (field == "integral_type") {
        cand.claimedIntegralType = val;
      } else if (field == "lo2") {
        auto v = detail::parseLongs(val, lineNo);
        if (v.size() != 2)
          throw std::runtime_error("line " + std::to_string(lineNo) + ": lo2 needs two entries");
        cand.lo2 = Lo2Data{v[0], v[1]};
      } else if (field == "bv_basis") {
        cand.bvSubsystem = detail::parseRootList(val, lineNo);
      } else if (field == "conj_word") {
        for (long v : detail::parseLongs(val, lineNo)) cand.conjWord.letters.push_back(int(v));
      } else {
        throw std::runtime_error("line " + std::to_string(lineNo) + ": unknown candidate field '" +
                                 field + "'");
      }
    } else if (int idx; wants("weyl_identity.", idx)) {
      (void)idx;
      auto kv = detail::parseKV(val);
      WeylIdentity wi;
      wi.raw = val;
      wi.kind = kv["_head"];
      if (wi.kind == "apply") {
        for (long v : detail::parseLongs(kv["word"], lineNo)) wi.word.letters.push_back(int(v));
        wi.source = kv["to"];
        if (wi.source != "half_hvee" && wi.source.rfind("cand.", 0) != 0)
          wi.sourceVec = detail::parseRats(kv["to"], lineNo);
        wi.expectVec = detail::parseRats(kv["expect"], lineNo);
      } else if (wi.kind == "pizero") {
        wi.candidate = std::stoi(kv["cand"]);
        wi.basis = detail::parseRootList(kv["basis"], lineNo);
        for (long v : detail::parseLongs(kv["word"], lineNo)) wi.word.letters.push_back(int(v));
        for (long v : detail::parseLongs(kv["zeros"], lineNo)) wi.zeros.insert(int(v));
        wi.equalRelation = (kv["rel"] == "equal");
      } else {
        throw std::runtime_error("line " + std::to_string(lineNo) + ": unknown weyl_identity kind");
      }
      cur->weylIdentities.push_back(std::move(wi));
    } else if (int idx; wants("star_table.", idx)) {
      (void)idx;
      auto kv = detail::parseKV(val);
      StarTableEntry st;
      st.raw = val;
      st.kind = kv["_head"];
      if (st.kind == "L") {
        for (long v : detail::parseLongs(kv["word"], lineNo)) st.word.letters.push_back(int(v));
        for (long v : detail::parseLongs(kv["expect"], lineNo)) st.expectSet.insert(int(v));
      } else if (st.kind == "star") {
        st.s = std::stoi(kv["s"]);
        st.t = std::stoi(kv["t"]);
        for (long v : detail::parseLongs(kv["word"], lineNo)) st.word.letters.push_back(int(v));
        for (long v : detail::parseLongs(kv["expect"], lineNo))
          st.expectWord.letters.push_back(int(v));
      } else {
        throw std::runtime_error("line " + std::to_string(lineNo) + ": unknown star_table kind");
      }
      cur->starTables.push_back(std::move(st));
    } else {
      throw std::runtime_error("line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
    }
  }
  if (cur) finalize(*cur, lineNo);
  return records;
}

inline std::vector<CaseRecord> parseCasesFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open case file '" + path + "'");
  return parseCases(in);
}

// ---------------------------------------------------------------------------
// Verification engine
// ---------------------------------------------------------------------------

class SystemRegistry {
 public:
  const RootSystemData& get(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    int rank = 0;
    Series s = parseSeries(name, rank);
    return cache_.emplace(name, buildRootSystem(s, rank)).first->second;
  }

 private:
  std::map<std::string, RootSystemData> cache_;
};

inline long dimOfAlgebra(const RootSystemData& sys) {
  return 2 * long(sys.positiveRoots.size()) + sys.rank;
}

inline CheckReport verifyCase(SystemRegistry& reg, const CaseRecord& rec) {
  const RootSystemData& sys = reg.get(rec.system);
  CheckReport report;
  report.caseId = rec.id();

  auto add = [&](const std::string& name, CheckStatus st, const std::string& detail) {
    report.checks.push_back({name, st, detail});
  };
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    add(name, ok ? CheckStatus::PASS : CheckStatus::FAIL, detail);
  };

  long dimG = dimOfAlgebra(sys);

  // 1. graded counts and the count identity
  {
    long n0 = long(gradedPositiveRoots(sys, rec.tau, 0).size());
    long n1 = long(gradedPositiveRoots(sys, rec.tau, 1).size());
    bool formula = checkCountFormula(sys, rec.tau, rec.dimCentralizer);
    std::string msg = "computed (" + std::to_string(n0) + "," + std::to_string(n1) +
                      ") claimed (" + std::to_string(rec.claimedCount0) + "," +
                      std::to_string(rec.claimedCount1) + ")";
    bool ok = formula && n0 == rec.claimedCount0 && n1 == rec.claimedCount1;
    if (!formula) msg += "; count identity fails";
    else if (n0 != rec.claimedCount0) msg += "; |Phi+(0)| mismatch";
    else if (n1 != rec.claimedCount1) msg += "; |Phi+(1)| mismatch";
    check("count-formula", ok, msg);
  }

  // 2. 2 rho_e
  {
    std::vector<long> tr = twoRhoE(sys, rec.tau);
    bool ok = true;
    std::string msg;
    for (int i = 0; i < sys.rank; ++i) {
      if (tr[i] != rec.claimedTwoRhoE[i]) {
        ok = false;
        msg = "alpha_" + std::to_string(i + 1) + " coordinate: computed " +
              std::to_string(tr[i]) + " vs claimed " + std::to_string(rec.claimedTwoRhoE[i]);
        break;
      }
    }
    if (ok) {
      msg = "(";
      for (int i = 0; i < sys.rank; ++i) msg += (i ? "," : "") + std::to_string(tr[i]);
      msg += ")";
    }
    check("two-rho-e", ok, msg);
  }

  // 3. candidates
  for (size_t k = 0; k < rec.candidates.size(); ++k) {
    const CandidateWeight& cand = rec.candidates[k];
    std::string pfx = "cand." + std::to_string(k + 1) + ".";

    {
      ConditionCResult c = conditionC_check(sys, rec.pinning, rec.tau, cand.lambdaPlusRho);
      std::string msg;
      if (!c.ok) {
        for (int i = 0; i < sys.rank; ++i)
          if (c.residual[i] != 0) {
            msg = "alpha_" + std::to_string(i + 1) + " coefficient off by " + ratStr(c.residual[i]);
            break;
          }
      } else {
        msg = "alpha-coefficients match rho_e off the pinning";
      }
      check(pfx + "condition-C", c.ok, msg);
    }

    if (rec.standardLevi) {
      ConditionAResult a = conditionA_check(sys, rec.pinning, cand.lambdaPlusRho);
      check(pfx + "condition-A", a.ok,
            a.ok ? "no positive-integral pairing on the Levi"
                 : "violated at root (" + a.witness->str() + ")");
    } else {
      add(pfx + "condition-A", CheckStatus::RECORDED, "non-standard Levi; holds per the source");
    }

    IntegralSubsystem sub = integralRootSystem(sys, cand.lambdaPlusRho);
    if (!cand.claimedIntegralType.empty()) {
      check(pfx + "integral-type", sub.cartanType == cand.claimedIntegralType,
            "computed " + sub.cartanType + " claimed " + cand.claimedIntegralType);
    }

    switch (cand.route) {
      case Route::JOSEPH: {
        std::string msg;
        bool ok = false;
        try {
          long d = josephDimension(sys, cand.lambdaPlusRho);
          ok = (d == dimG - rec.dimCentralizer);
          msg = "2(|Phi+|-|Phi_lambda+|) = " + std::to_string(d) + ", dim O(e) = " +
                std::to_string(dimG - rec.dimCentralizer);
        } catch (const std::exception& e) {
          msg = e.what();
        }
        check(pfx + "dimension", ok, msg);
        break;
      }
      case Route::BV_SPECIAL: {
        if (!rec.halfHvee) {
          check(pfx + "dimension", false, "BV_SPECIAL route without a stored h^vee/2");
          break;
        }
        bool okHalf = specialHalfCheck(*rec.halfHvee);
        Weight image = applyWord(sys, cand.conjWord, *rec.halfHvee);
        bool okConj = image == cand.lambdaPlusRho;
        std::string msg = std::string("h^vee/2 pairings in {0,1}: ") + (okHalf ? "yes" : "NO") +
                          "; " + cand.conjWord.str() + "(h^vee/2) " +
                          (okConj ? "reproduces the weight" : "= " + image.str() + " mismatch");
        check(pfx + "dimension", okHalf && okConj, msg);
        break;
      }
      case Route::LO2: {
        long d = lo2Dimension(dimG, cand.lo2->dimGLambda, cand.lo2->dimOrbit);
        bool ok = (d == dimG - rec.dimCentralizer);
        long lamDim = long(sub.size()) + long(sub.simpleBasis.size());
        bool okLam = (lamDim == cand.lo2->dimGLambda);
        std::string msg = std::to_string(dimG) + " - " + std::to_string(cand.lo2->dimGLambda) +
                          " + " + std::to_string(cand.lo2->dimOrbit) + " = " + std::to_string(d) +
                          ", dim O(e) = " + std::to_string(dimG - rec.dimCentralizer);
        if (!okLam)
          msg += "; dim g(lambda) recomputed as " + std::to_string(lamDim);
        check(pfx + "dimension", ok && okLam, msg);
        if (!cand.bvSubsystem.empty()) {
          std::string bmsg;
          bool bok = false;
          try {
            RatVec eps = subsystemEpsilonCoords(sys, cand.lambdaPlusRho, cand.bvSubsystem);
            Partition out = bvTypeD(eps);
            long cdim = orthCentralizerDim(out);
            long n = long(cand.bvSubsystem.size());
            long so = n * (2 * n - 1);
            long orbit = so - cdim;
            bok = (orbit == cand.lo2->dimOrbit);
            bmsg = "BV partition " + out.str() + ", centraliser " + std::to_string(cdim) +
                   ", orbit " + std::to_string(orbit);
          } catch (const std::exception& e) {
            bmsg = e.what();
          }
          check(pfx + "bv-orbit", bok, bmsg);
        }
        break;
      }
      case Route::RECORDED:
        add(pfx + "dimension", CheckStatus::RECORDED, "dimension argument recorded from the source");
        break;
    }
  }

  if (rec.candidates.size() == 2) {
    bool distinct = !(rec.candidates[0].lambdaPlusRho == rec.candidates[1].lambdaPlusRho);
    check("candidates-distinct", distinct,
          distinct ? "two distinct highest weights" : "candidate weights coincide");
  }

  // 4. stored Weyl identities
  for (size_t n = 0; n < rec.weylIdentities.size(); ++n) {
    const WeylIdentity& wi = rec.weylIdentities[n];
    std::string name = "weyl-identity." + std::to_string(n + 1);
    if (wi.kind == "apply") {
      Weight src;
      if (wi.source == "half_hvee") src = *rec.halfHvee;
      else if (wi.source.rfind("cand.", 0) == 0)
        src = rec.candidates[std::stoul(wi.source.substr(5)) - 1].lambdaPlusRho;
      else src = Weight{wi.sourceVec};
      Weight got = applyWord(sys, wi.word, src);
      check(name, got.coeffs == wi.expectVec,
            wi.word.str() + " gives (" + got.str() + ")");
    } else if (wi.kind == "pizero") {
      const Weight& lam = rec.candidates[wi.candidate - 1].lambdaPlusRho;
      std::vector<Root> refl;
      for (int idx : wi.word.letters) refl.push_back(wi.basis[idx - 1]);
      std::vector<Root> reflInv(refl.rbegin(), refl.rend());
      Weight mu = applyReflections(sys, reflInv, lam);
      std::set<int> zeros;
      bool dominant = true;
      for (size_t i = 0; i < wi.basis.size(); ++i) {
        Rat p = pairing(sys, mu, wi.basis[i]);
        if (p == 0) zeros.insert(int(i + 1));
        if (p < 0) dominant = false;
      }
      std::set<int> tauSet;
      for (size_t i = 0; i < wi.basis.size(); ++i)
        if (sys.rootSign(applyReflectionsToRoot(sys, refl, wi.basis[i])) < 0)
          tauSet.insert(int(i + 1));
      bool zerosOk = (zeros == wi.zeros);
      bool inTau = true;
      for (int z : wi.zeros)
        if (!tauSet.count(z)) inTau = false;
      if (wi.equalRelation) inTau = (wi.zeros == tauSet);
      std::string msg = "Pi^0 = {";
      for (int z : zeros) msg += std::to_string(z) + " ";
      msg += "}, tau(w) = {";
      for (int z : tauSet) msg += std::to_string(z) + " ";
      msg += "}";
      if (!dominant) msg += ", mu+rho not dominant on the basis";
      check(name, zerosOk && inTau && dominant, msg);
    }
  }

  // 5. stored descent/star table rows
  for (size_t n = 0; n < rec.starTables.size(); ++n) {
    const StarTableEntry& st = rec.starTables[n];
    std::string name = "star-table." + std::to_string(n + 1);
    if (st.kind == "L") {
      DescentSet d = descentSet(sys, st.word);
      check(name, d.indices == st.expectSet, "L(" + st.word.str() + ") = " + d.str());
    } else {
      std::string msg;
      bool ok = false;
      try {
        WeylWord got = starOp(sys, st.word, st.s, st.t);
        ok = sameElement(sys, got, st.expectWord);
        msg = "*(" + st.word.str() + ") = " + got.str() +
              (ok ? "" : " != " + st.expectWord.str());
      } catch (const std::exception& e) {
        msg = e.what();
      }
      check(name, ok, msg);
    }
  }

  return report;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace detail {

// pads to a display width; UTF-8 continuation bytes take no column
inline std::string pad(const std::string& s, size_t width) {
  size_t cols = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cols;
  return s + std::string(cols < width ? width - cols : 1, ' ');
}

}  // namespace detail

inline std::string emitReport(const std::vector<CaseRecord>& records,
                              const std::vector<CheckReport>& reports, bool detail) {
  std::ostringstream os;
  if (!detail) {
    os << detail::pad("system", 8) << detail::pad("label", 17) << detail::pad("Gamma", 7)
       << detail::pad("|Phi+(0)|", 11) << detail::pad("|Phi+(1)|", 11)
       << detail::pad("2rho_e", 40) << "result\n";
    for (size_t i = 0; i < reports.size(); ++i) {
      const CaseRecord& rec = records[i];
      std::string tr = "(";
      for (size_t k = 0; k < rec.claimedTwoRhoE.size(); ++k)
        tr += (k ? "," : "") + std::to_string(rec.claimedTwoRhoE[k]);
      tr += ")";
      os << detail::pad(rec.system, 8) << detail::pad(rec.dynkinLabel, 17)
         << detail::pad(rec.componentGroup, 7)
         << detail::pad(std::to_string(rec.claimedCount0), 11)
         << detail::pad(std::to_string(rec.claimedCount1), 11) << detail::pad(tr, 40)
         << (reports[i].pass() ? "PASS" : "FAIL") << "\n";
    }
  } else {
    for (size_t i = 0; i < reports.size(); ++i) {
      const CheckReport& rep = reports[i];
      os << "== " << rep.caseId << " ==\n";
      if (!records[i].notes.empty()) os << "  note: " << records[i].notes << "\n";
      for (const CheckResult& c : rep.checks) {
        std::string st = c.status == CheckStatus::PASS ? "PASS"
                         : c.status == CheckStatus::FAIL ? "FAIL" : "RECORDED";
        os << "  [" << st << "] " << c.name << ": " << c.detail << "\n";
      }
      os << "  overall: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    }
  }
  return os.str();
}

}  // namespace liecheck
