// hyperop: command-line driver for the operator algebra, the random models,
// the pushforward checks and the sparse generators.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hyperop/distribution.hpp"
#include "hyperop/enumerate.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/expression.hpp"
#include "hyperop/io.hpp"
#include "hyperop/metric.hpp"
#include "hyperop/models.hpp"
#include "hyperop/normalize.hpp"
#include "hyperop/operators.hpp"
#include "hyperop/pushforward.hpp"
#include "hyperop/sparse.hpp"
#include "hyperop/stats.hpp"
#include "hyperop/suites.hpp"
#include "hyperop/transforms.hpp"
#include "hyperop/triangulated.hpp"

namespace fs = std::filesystem;
using namespace hyperop;

namespace {

struct Common {
  std::optional<std::uint64_t> seed;
  unsigned streams = 1;
  std::uint64_t samples = 0;
  std::string out;
  std::string ambient;
  std::string prob;
  std::string expr;
  std::string file;
  bool exact = false;
  bool exhaustive = false;
};

struct BadInput : Error {
  using Error::Error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    writeFileAtomic(c.out, text);
  }
}

std::uint64_t requireSeed(const Common& c) {
  if (!c.seed) throw BadInput("--seed is required for sampling");
  return *c.seed;
}

Ambient loadAmbient(const Common& c) {
  if (c.ambient.empty()) throw BadInput("--ambient is required");
  return readComplexFile(c.ambient);
}

// A .hg file may name its ambient in a leading "# ambient: <path>" comment,
// resolved relative to the file.
Hypergraph loadHypergraph(const std::string& path, const Common& c) {
  const std::string text = readTextFile(path);
  if (!c.ambient.empty()) return parseHypergraph(text, readComplexFile(c.ambient));
  const std::string key = "# ambient: ";
  if (text.rfind(key, 0) == 0) {
    const std::string name = text.substr(key.size(), text.find('\n') - key.size());
    return parseHypergraph(text, readComplexFile(fs::path(path).parent_path() / name));
  }
  throw BadInput("--ambient is required for " + path);
}

FaceValues loadProbability(const Common& c, const AmbientComplex& L) {
  if (c.prob.empty()) throw BadInput("--prob is required");
  return readProbabilityFile(c.prob).resolve(L);
}

// Sample i always uses stream i; --streams only sets the worker count.
template <typename Draw>
std::vector<std::string> sampleAll(const Common& c, Draw&& draw) {
  const std::uint64_t seed = requireSeed(c);
  std::vector<std::string> out(c.samples);
  const unsigned workers = std::max(1u, c.streams);
  auto work = [&](unsigned w) {
    for (std::uint64_t i = w; i < c.samples; i += workers) {
      CounterRng rng(seed, i);
      out[i] = draw(rng);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  return out;
}

std::string joinSamples(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += "# sample " + std::to_string(i) + "\n" + parts[i];
  return s;
}

int cmdGen(const Common& c, bool complex) {
  const Ambient L = loadAmbient(c);
  const FaceValues p = loadProbability(c, *L);
  Common one = c;
  if (one.samples == 0) one.samples = 1;
  emit(one, joinSamples(sampleAll(one, [&](CounterRng& rng) {
         return complex ? formatHypergraph(sampleComplex(L, p, rng))
                        : formatHypergraph(sampleHypergraph(L, p, rng));
       })));
  return 0;
}

std::string table(const ExactDistribution& f) {
  std::string s = "index\tprobability\thypergraph\n";
  for (std::uint64_t i = 0; i < f.size(); ++i)
    if (f.at(i) != 0.0)
      s += std::to_string(i) + "\t" + num(f.at(i)) + "\t" + Hypergraph::fromIndex(f.ambient(), i).toString() + "\n";
  return s;
}

int cmdPush(const Common& c, const std::string& model) {
  const Ambient L = loadAmbient(c);
  if (c.expr.empty()) throw BadInput("--expr is required");
  const OperatorWord w = parseExpression(c.expr).word;
  const std::size_t t = w.arity();
  std::optional<FaceValues> p;
  std::optional<Hypergraph> fixed;
  if (model == "phyper" || model == "pcomplex") {
    p = loadProbability(c, *L);
  } else if (model == "file") {
    if (c.file.empty()) throw BadInput("--model file needs --file");
    fixed = loadHypergraph(c.file, c);
  } else {
    throw BadInput("unknown model '" + model + "' (phyper, pcomplex, file)");
  }

  if (c.exact) {
    ExactDistribution f = fixed ? ExactDistribution::pointMass(*fixed)
                          : model == "phyper" ? ExactDistribution::productLaw(L, *p)
                                              : ExactDistribution::complexLaw(L, *p);
    const std::vector<ExactDistribution> fs(t, f);
    const ExactDistribution g = pushWord(w, fs);
    std::string s = "# push " + w.toString() + " exact\n" + table(g);
    s += "total " + num(g.total()) + "\n";
    // Closed forms exist for single atoms applied to the product law.
    if (model == "phyper" && w.isChain() && w.atoms()->size() == 1) {
      const Atom a = w.atoms()->front();
      std::optional<ExactDistribution> target;
      FaceValues param;
      if (a == Atom::gamma) {
        param = transformGamma(*p);
        target = ExactDistribution::productLaw(L, param);
      } else if (a == Atom::Delta) {
        param = transformDeltaUpper(*L, *p);
        target = ExactDistribution::complexLaw(L, param);
      } else if (a == Atom::delta) {
        param = transformDeltaLower(*L, *p);
        target = ExactDistribution::complexLaw(L, param);
      }
      if (target) {
        const ExactDistribution tagged(L, g.mass(), target->domain());
        s += "TV-to-closed-form " + num(totalVariation(tagged, *target)) + "\n";
        s += "marginal-error " + num((marginals(g) - param).cwiseAbs().maxCoeff()) + "\n";
      }
    }
    emit(c, s);
    return 0;
  }

  if (c.samples == 0) throw BadInput("Monte Carlo push needs --samples (or use --exact)");
  const auto lines = sampleAll(c, [&](CounterRng& rng) {
    std::vector<Hypergraph> args;
    for (std::size_t j = 0; j < t; ++j)
      args.push_back(fixed ? *fixed : model == "phyper" ? sampleHypergraph(L, *p, rng) : Hypergraph(sampleComplex(L, *p, rng)));
    return formatHypergraph(evalWord(w, args));
  });
  std::map<std::string, std::uint64_t> counts;
  for (const auto& l : lines) ++counts[l];
  std::string s = "# push " + w.toString() + " samples " + std::to_string(c.samples) + "\ncount\thypergraph\n";
  for (const auto& [faces, n] : counts) {
    std::string flat = faces;
    for (auto& ch : flat)
      if (ch == '\n') ch = ';';
    s += std::to_string(n) + "\t" + (flat.empty() ? "{}" : flat) + "\n";
  }
  emit(c, s);
  return 0;
}

int cmdVerify(const Common& c, const std::string& suite) {
  SuiteOptions o;
  if (!c.ambient.empty()) o.ambient = readComplexFile(c.ambient);
  o.exhaustive = c.exhaustive;
  o.seed = c.seed.value_or(1);
  o.samples = c.samples ? c.samples : 100000;
  if (!c.prob.empty()) o.probability = readProbabilityFile(c.prob);
  std::vector<std::string> names;
  if (suite == "all") {
    names = suiteNames();
  } else {
    names = {suite};
  }
  bool ok = true;
  std::string s;
  for (const auto& n : names) {
    const auto r = runSuite(n, o);
    s += summaryLine(r) + "\n";
    for (const auto& f : r.failures) s += "  fail: " + f + "\n";
    ok = ok && r.pass();
  }
  emit(c, s);
  return ok ? 0 : 1;
}

std::vector<double> perDimension(const Common& c) {
  if (c.prob.empty()) throw BadInput("--prob (per-dim JSON) is required");
  const auto a = readProbabilityFile(c.prob);
  if (a.mode() != ProbabilityAssignment::Mode::PerDimension)
    throw BadInput("sparse generation needs a per-dim probability file");
  return a.byDimension();
}

int cmdSparse(const Common& c, int n, int r, int algorithm) {
  const auto p = perDimension(c);
  if (algorithm != 1 && algorithm != 2) throw BadInput("--algorithm must be 1 or 2");
  const std::uint64_t samples = c.samples ? c.samples : 1;
  Common cc = c;
  cc.samples = samples;
  const auto d = derivedDims(n, p);
  std::string s = "# n " + std::to_string(n) + " r " + std::to_string(r) + " algorithm " +
                  std::to_string(algorithm) + "\n# p'";
  for (double v : d.pPrime) s += " " + num(v);
  s += "\n# p''";
  for (double v : d.pDoublePrime) s += " " + num(v);
  s += "\n";
  s += joinSamples(sampleAll(cc, [&](CounterRng& rng) {
    if (algorithm == 1) {
      const auto out = algorithm1Truncated(n, p, r, rng);
      return "# hypergraph\n" + formatFaces(out.hypergraph) + "# complex\n" + formatFaces(out.complex);
    }
    return formatFaces(algorithm2Truncated(n, p, r, rng));
  }));
  emit(c, s);
  return 0;
}

int cmdStats(const Common& c, const Schedule& sched, const std::vector<int>& ns) {
  const std::uint64_t seed = requireSeed(c);
  const std::uint64_t samples = c.samples ? c.samples : 1000;
  const auto rows = dimensionStats(sched, ns, samples, seed);
  for (const auto& row : rows)
    if (row.clamped) std::cerr << "warning: p1 clamped to 1 at n=" << row.n << "\n";
  std::ostringstream os;
  writeStatsCsv(os, rows);
  emit(c, os.str());
  return 0;
}

int cmdFigure1(const Common& c, int m) {
  const TriangulatedTriangle t(m);
  const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
  fs::create_directories(dir);
  writeFileAtomic(dir / "L.cx", formatComplex(*t.ambient()));
  const std::pair<const char*, Hypergraph> hs[] = {{"H1.hg", t.closedRegion(1, 2, 2)},
                                                   {"H2.hg", t.closedRegion(1, 1, 3)},
                                                   {"H3.hg", t.openRegion(1, 1, 3)}};
  std::cout << "L.cx vertices " << t.ambient()->vertexCount() << " faces " << t.ambient()->faceCount() << "\n";
  for (const auto& [name, h] : hs) {
    writeFileAtomic(dir / name, "# ambient: L.cx\n" + formatHypergraph(h));
    const auto pw = minimalPowers(h);
    std::cout << name << " r=" << pw.r << " t=" << pw.t << "\n";
  }
  return 0;
}

int cmdPowers(const Common& c) {
  if (c.file.empty()) throw BadInput("--file is required");
  const Hypergraph h = loadHypergraph(c.file, c);
  const auto pw = minimalPowers(h);
  std::string s = "r=" + (pw.rDefined ? std::to_string(pw.r) : std::string("undefined")) +
                  " t=" + (pw.tDefined ? std::to_string(pw.t) : std::string("undefined")) + "\n";
  emit(c, s);
  return 0;
}

int cmdNormalize(const Common& c, bool check) {
  if (c.expr.empty()) throw BadInput("--expr is required");
  const OperatorWord w = parseExpression(c.expr).word;
  const OperatorWord n = normalizeWord(w);
  std::string s = n.toString() + "\n";
  if (check) {
    const Ambient L = c.ambient.empty() ? fixture("delta2") : readComplexFile(c.ambient);
    std::uint64_t agree = 0, total = 0;
    const auto hs = enumerateSubHypergraphs(L);
    const std::size_t t = w.arity();
    if (t == 1) {
      for (const auto& h : hs) agree += evalWord(w, h) == evalWord(n, h), ++total;
    } else {
      CounterRng rng(c.seed.value_or(1), 0);
      for (int i = 0; i < 4096; ++i) {
        std::vector<Hypergraph> args;
        for (std::size_t j = 0; j < t; ++j) args.push_back(hs[rng.next() % hs.size()]);
        agree += evalWord(w, args) == evalWord(n, args), ++total;
      }
    }
    s += "extensional " + std::string(agree == total ? "PASS " : "FAIL ") + std::to_string(agree) + "/" +
         std::to_string(total) + "\n";
    emit(c, s);
    return agree == total ? 0 : 1;
  }
  emit(c, s);
  return 0;
}

void addCommon(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "64-bit seed (required for sampling)");
  sub->add_option("--streams", c.streams, "worker threads; outputs do not depend on it")->check(CLI::PositiveNumber);
  sub->add_option("--samples", c.samples, "number of samples");
  sub->add_option("--out", c.out, "output file (directory for figure1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperop: operators, random models and pushforwards on sub-hypergraphs"};
  app.require_subcommand(1);
  Common c;

  auto* genHyper = app.add_subcommand("gen-hyper", "sample sub-hypergraphs from the product law");
  auto* genComplex = app.add_subcommand("gen-complex", "sample sub-complexes by clique filling");
  for (auto* s : {genHyper, genComplex}) {
    addCommon(s, c);
    s->add_option("--ambient", c.ambient, ".cx file")->required();
    s->add_option("--prob", c.prob, "probability JSON")->required();
  }

  std::string model = "phyper";
  auto* push = app.add_subcommand("push", "push a model or file through an expression");
  addCommon(push, c);
  push->add_option("--model", model, "phyper, pcomplex or file");
  push->add_option("--ambient", c.ambient, ".cx file")->required();
  push->add_option("--prob", c.prob, "probability JSON");
  push->add_option("--expr", c.expr, "operator expression")->required();
  push->add_option("--file", c.file, ".hg file for --model file");
  push->add_flag("--exact", c.exact, "exact pushforward over all sub-hypergraphs");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  addCommon(verify, c);
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--ambient", c.ambient, ".cx file (default: built-in fixtures)");
  verify->add_option("--prob", c.prob, "probability JSON");
  verify->add_flag("--exhaustive", c.exhaustive, "all 2^|L| sub-hypergraphs");

  int n = 10, r = 2, algorithm = 1;
  auto* sparse = app.add_subcommand("sparse", "truncated sparse generation");
  addCommon(sparse, c);
  sparse->add_option("--n", n, "vertices")->check(CLI::PositiveNumber);
  sparse->add_option("--r", r, "truncation dimension")->check(CLI::PositiveNumber);
  sparse->add_option("--algorithm", algorithm, "1 (closure) or 2 (interior)");
  sparse->add_option("--prob", c.prob, "per-dim probability JSON")->required();

  Schedule sched;
  std::vector<int> ns{20, 40, 80};
  auto* stats = app.add_subcommand("stats", "dimension statistics of clique complexes of G(n, p1)");
  addCommon(stats, c);
  stats->add_option("--r", sched.r, "target dimension");
  stats->add_option("--c", sched.c, "coefficient of p1");
  stats->add_option("--alpha", sched.alpha, "p1 = c n^(-2/(r+alpha))");
  stats->add_option("--n", ns, "ascending vertex counts")->delimiter(',');

  int m = 6;
  auto* figure = app.add_subcommand("figure1", "write the triangulated triangle and its three examples");
  addCommon(figure, c);
  figure->add_option("--m", m, "side length")->check(CLI::PositiveNumber);

  auto* powers = app.add_subcommand("powers", "minimal powers r and t of a hypergraph");
  addCommon(powers, c);
  powers->add_option("--file", c.file, ".hg file")->required();
  powers->add_option("--ambient", c.ambient, ".cx file (default: from the .hg header)");

  bool check = false;
  auto* normalize = app.add_subcommand("normalize", "rewrite a word with the seven relations");
  addCommon(normalize, c);
  normalize->add_option("--expr", c.expr, "operator expression")->required();
  normalize->add_flag("--check", check, "compare with the source word on every H");
  normalize->add_option("--ambient", c.ambient, ".cx file for --check (default delta2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*genHyper) return cmdGen(c, false);
    if (*genComplex) return cmdGen(c, true);
    if (*push) return cmdPush(c, model);
    if (*verify) return cmdVerify(c, suite);
    if (*sparse) return cmdSparse(c, n, r, algorithm);
    if (*stats) return cmdStats(c, sched, ns);
    if (*figure) return cmdFigure1(c, m);
    if (*powers) return cmdPowers(c);
    if (*normalize) return cmdNormalize(c, check);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
