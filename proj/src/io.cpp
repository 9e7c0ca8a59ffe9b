#include "hyperop/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperop/errors.hpp"

namespace hyperop {

namespace {

std::vector<Simplex> parseFaces(std::string_view text) {
  std::vector<Simplex> faces;
  std::size_t lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Vertex> verts;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      Vertex v = 0;
      const auto token = line.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("bad vertex '" + std::string(token) + "'", lineNo);
      verts.push_back(v);
      i = j;
    }
    if (verts.empty()) continue;
    try {
      faces.emplace_back(std::move(verts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineNo);
    }
  }
  return faces;
}

std::string formatList(std::span<const Simplex> faces) {
  std::string out;
  for (const auto& s : faces) {
    bool first = true;
    for (Vertex v : s.vertices()) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string formatNumber(double x) {
  // Shortest representation that reads back exactly.
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, ptr};
}

}  // namespace

Ambient parseComplex(std::string_view text) { return AmbientComplex::fromGenerators(parseFaces(text)); }

std::string formatComplex(const AmbientComplex& L) { return formatList(L.maximalSimplices()); }

Hypergraph parseHypergraph(std::string_view text, const Ambient& L) {
  return {L, parseFaces(text)};
}

std::string formatHypergraph(const Hypergraph& h) { return formatList(h.simplices()); }

std::string formatFaces(const SparseFaces& faces) {
  std::string out;
  for (const auto& level : faces.byDimension) out += formatList(level);
  return out;
}

ProbabilityAssignment parseProbability(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "per-dim") return ProbabilityAssignment::perDimension(j.at("p").get<std::vector<double>>());
    if (mode == "per-simplex") {
      std::vector<std::pair<Simplex, double>> entries;
      if (j.contains("entries"))
        for (const auto& e : j.at("entries"))
          entries.emplace_back(Simplex(e.at("simplex").get<std::vector<Vertex>>()),
                               e.at("p").get<double>());
      return ProbabilityAssignment::perSimplex(j.value("default", 0.0), std::move(entries));
    }
    throw ParseError("unknown probability mode '" + mode + "'", 0);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("probability JSON: ") + e.what(), e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("probability JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("probability JSON: ") + e.what(), 0);
  }
}

std::string formatProbability(const ProbabilityAssignment& p) {
  std::string out;
  if (p.mode() == ProbabilityAssignment::Mode::PerDimension) {
    out = "{\"mode\":\"per-dim\",\"p\":[";
    for (std::size_t i = 0; i < p.byDimension().size(); ++i)
      out += (i ? "," : "") + formatNumber(p.byDimension()[i]);
    return out + "]}\n";
  }
  out = "{\"mode\":\"per-simplex\",\"default\":" + formatNumber(p.fallback()) + ",\"entries\":[";
  bool first = true;
  for (const auto& [s, v] : p.entries()) {
    out += first ? "" : ",";
    out += "{\"simplex\":[";
    for (std::size_t i = 0; i < s.vertices().size(); ++i)
      out += (i ? "," : "") + std::to_string(s.vertices()[i]);
    out += "],\"p\":" + formatNumber(v) + "}";
    first = false;
  }
  return out + "]}\n";
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFileAtomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Ambient readComplexFile(const std::filesystem::path& path) { return parseComplex(readTextFile(path)); }

Hypergraph readHypergraphFile(const std::filesystem::path& path, const Ambient& L) {
  return parseHypergraph(readTextFile(path), L);
}

ProbabilityAssignment readProbabilityFile(const std::filesystem::path& path) {
  return parseProbability(readTextFile(path));
}

}  // namespace hyperop
