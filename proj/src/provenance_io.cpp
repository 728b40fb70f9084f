// Text formats for packings and transformation provenance.
//
// star-provenance 1
//   input N DIGEST / output N DIGEST
//   star C L1 L2 L3 ring V1..V6 cross P2 P4 P6
//   vertex OUT kept IN | vertex OUT star-new C K
//   pentagon IDS... / hexagon0 IDS... / cross-edge A B
//   end
//
// semistar-provenance 1
//   input N DIGEST / output N DIGEST
//   star C L1 L2 L3 subdivision S1 S2 S3
//   vertex OUT kept IN | vertex OUT subdivision C L
//   hexagon FACE choice X chord A B
//   end

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fullerene/transforms.hpp"

namespace fullerene {

namespace {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

struct LineReader {
  std::istream& in;
  int number = 0;

  bool next(std::istringstream& fields, std::string& keyword) {
    std::string line;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty() || line[0] == '#') continue;
      fields = std::istringstream(line);
      fields >> keyword;
      return true;
    }
    return false;
  }
};

Vertex read_id(std::istringstream& fields, int line) {
  long long id = 0;
  if (!(fields >> id) || id <= 0) throw ParseError(line, "expected a positive vertex id");
  return static_cast<Vertex>(id - 1);
}

std::uint64_t read_digest(std::istringstream& fields, int line) {
  std::string hex;
  if (!(fields >> hex)) throw ParseError(line, "expected a digest");
  try {
    return std::stoull(hex, nullptr, 16);
  } catch (const std::exception&) {
    throw ParseError(line, "bad digest '" + hex + "'");
  }
}

void expect(std::istringstream& fields, const std::string& word, int line) {
  std::string got;
  if (!(fields >> got) || got != word) throw ParseError(line, "expected '" + word + "'");
}

std::vector<Vertex> read_ids(std::istringstream& fields) {
  std::vector<Vertex> out;
  long long id = 0;
  while (fields >> id) out.push_back(static_cast<Vertex>(id - 1));
  return out;
}

void write_header(std::ostream& out, const char* kind, int in_n, std::uint64_t in_d, int out_n,
                  std::uint64_t out_d) {
  out << kind << " 1\n";
  out << "input " << in_n << ' ' << digest_hex(in_d) << '\n';
  out << "output " << out_n << ' ' << digest_hex(out_d) << '\n';
}

void read_header(LineReader& reader, const std::string& kind, int& in_n, std::uint64_t& in_d,
                 int& out_n, std::uint64_t& out_d) {
  std::istringstream fields;
  std::string keyword;
  int version = 0;
  if (!reader.next(fields, keyword) || keyword != kind || !(fields >> version) || version != 1) {
    throw ParseError(reader.number, "expected '" + kind + " 1'");
  }
  if (!reader.next(fields, keyword) || keyword != "input" || !(fields >> in_n)) {
    throw ParseError(reader.number, "expected 'input N DIGEST'");
  }
  in_d = read_digest(fields, reader.number);
  if (!reader.next(fields, keyword) || keyword != "output" || !(fields >> out_n)) {
    throw ParseError(reader.number, "expected 'output N DIGEST'");
  }
  out_d = read_digest(fields, reader.number);
}

}  // namespace

void write_provenance(std::ostream& out, const StarTransformProvenance& prov) {
  write_header(out, "star-provenance", prov.input_vertices, prov.input_digest,
               prov.output_vertices, prov.output_digest);
  for (const auto& img : prov.stars) {
    out << "star " << img.center + 1;
    for (Vertex l : img.leaves) out << ' ' << l + 1;
    out << " ring";
    for (Vertex v : img.ring) out << ' ' << v + 1;
    out << " cross";
    for (Vertex v : img.cross) out << ' ' << v + 1;
    out << '\n';
  }
  for (Vertex v = 0; v < static_cast<Vertex>(prov.renumber.size()); ++v) {
    if (prov.renumber[v] >= 0) out << "vertex " << prov.renumber[v] + 1 << " kept " << v + 1 << '\n';
  }
  for (const auto& img : prov.stars) {
    for (int k = 0; k < 6; ++k) {
      out << "vertex " << img.ring[k] + 1 << " star-new " << img.center + 1 << ' ' << k + 1 << '\n';
    }
  }
  for (const auto& p : prov.pentagons) {
    out << "pentagon";
    for (Vertex v : p) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& h : prov.empty_hexagons) {
    out << "hexagon0";
    for (Vertex v : h) out << ' ' << v + 1;
    out << '\n';
  }
  for (const Edge& e : prov.cross_edges) out << "cross-edge " << e.first + 1 << ' ' << e.second + 1 << '\n';
  out << "end\n";
}

StarTransformProvenance read_star_provenance(std::istream& in) {
  LineReader reader{in};
  StarTransformProvenance prov;
  read_header(reader, "star-provenance", prov.input_vertices, prov.input_digest,
              prov.output_vertices, prov.output_digest);
  prov.renumber.assign(prov.input_vertices, -1);
  std::istringstream fields;
  std::string keyword;
  bool ended = false;
  while (reader.next(fields, keyword)) {
    const int line = reader.number;
    if (keyword == "end") {
      ended = true;
      break;
    }
    if (keyword == "star") {
      StarTransformProvenance::StarImage img;
      img.center = read_id(fields, line);
      for (auto& l : img.leaves) l = read_id(fields, line);
      expect(fields, "ring", line);
      for (auto& v : img.ring) v = read_id(fields, line);
      expect(fields, "cross", line);
      for (auto& v : img.cross) v = read_id(fields, line);
      prov.packing.stars.push_back(Star{img.center, img.leaves});
      prov.stars.push_back(img);
    } else if (keyword == "vertex") {
      const Vertex out_id = read_id(fields, line);
      std::string role;
      fields >> role;
      if (role == "kept") {
        const Vertex in_id = read_id(fields, line);
        if (in_id >= prov.input_vertices) throw ParseError(line, "input id out of range");
        prov.renumber[in_id] = out_id;
      } else if (role != "star-new") {
        throw ParseError(line, "unknown vertex role '" + role + "'");
      }
    } else if (keyword == "pentagon") {
      prov.pentagons.push_back(read_ids(fields));
    } else if (keyword == "hexagon0") {
      prov.empty_hexagons.push_back(read_ids(fields));
    } else if (keyword == "cross-edge") {
      const Vertex a = read_id(fields, line);
      const Vertex b = read_id(fields, line);
      prov.cross_edges.emplace_back(a, b);
    } else {
      throw ParseError(line, "unknown record '" + keyword + "'");
    }
  }
  if (!ended) throw ParseError(reader.number, "missing 'end'");
  return prov;
}

void write_provenance(std::ostream& out, const SemiStarProvenance& prov) {
  write_header(out, "semistar-provenance", prov.input_vertices, prov.input_digest,
               prov.output_vertices, prov.output_digest);
  std::size_t next = 0;
  for (const Star& s : prov.packing.stars) {
    out << "star " << s.center + 1;
    for (Vertex l : s.leaves) out << ' ' << l + 1;
    out << " subdivision";
    for (int k = 0; k < 3 && next < prov.subdivisions.size(); ++k) out << ' ' << prov.subdivisions[next++].vertex + 1;
    out << '\n';
  }
  for (Vertex v = 0; v < prov.input_vertices; ++v) out << "vertex " << v + 1 << " kept " << v + 1 << '\n';
  for (const auto& s : prov.subdivisions) {
    out << "vertex " << s.vertex + 1 << " subdivision " << s.edge.center + 1 << ' ' << s.edge.leaf + 1 << '\n';
  }
  for (const auto& c : prov.choices) {
    out << "hexagon " << c.face + 1 << " choice " << c.choice << " chord " << c.chord.first + 1 << ' '
        << c.chord.second + 1 << '\n';
  }
  out << "end\n";
}

SemiStarProvenance read_semistar_provenance(std::istream& in) {
  LineReader reader{in};
  SemiStarProvenance prov;
  read_header(reader, "semistar-provenance", prov.input_vertices, prov.input_digest,
              prov.output_vertices, prov.output_digest);
  std::istringstream fields;
  std::string keyword;
  bool ended = false;
  while (reader.next(fields, keyword)) {
    const int line = reader.number;
    if (keyword == "end") {
      ended = true;
      break;
    }
    if (keyword == "star") {
      Star s;
      s.center = read_id(fields, line);
      for (auto& l : s.leaves) l = read_id(fields, line);
      expect(fields, "subdivision", line);
      for (int k = 0; k < 3; ++k) {
        const Vertex sub = read_id(fields, line);
        prov.subdivisions.push_back({sub, StarEdge{s.center, s.leaves[k]}});
      }
      prov.packing.stars.push_back(s);
    } else if (keyword == "vertex") {
      read_id(fields, line);
      std::string role;
      fields >> role;
      if (role != "kept" && role != "subdivision") throw ParseError(line, "unknown vertex role '" + role + "'");
    } else if (keyword == "hexagon") {
      SemiStarProvenance::Choice c;
      if (!(fields >> c.face)) throw ParseError(line, "expected a face index");
      c.face -= 1;
      expect(fields, "choice", line);
      if (!(fields >> c.choice) || (c.choice != 0 && c.choice != 1)) throw ParseError(line, "choice must be 0 or 1");
      expect(fields, "chord", line);
      const Vertex a = read_id(fields, line);
      const Vertex b = read_id(fields, line);
      c.chord = Edge(a, b);
      prov.choices.push_back(c);
    } else {
      throw ParseError(line, "unknown record '" + keyword + "'");
    }
  }
  if (!ended) throw ParseError(reader.number, "missing 'end'");
  return prov;
}

void write_packing(std::ostream& out, const EmbeddedCubicGraph& g, const StarPacking& packing) {
  out << "star-packing 1\n";
  out << "vertices " << g.vertex_count() << '\n';
  for (const Star& s : packing.stars) {
    out << "star " << s.center + 1;
    for (Vertex l : s.leaves) out << ' ' << l + 1;
    out << '\n';
  }
}

StarPacking read_packing(std::istream& in) {
  LineReader reader{in};
  std::istringstream fields;
  std::string keyword;
  int version = 0;
  if (!reader.next(fields, keyword) || keyword != "star-packing" || !(fields >> version) || version != 1) {
    throw ParseError(reader.number, "expected 'star-packing 1'");
  }
  StarPacking packing;
  while (reader.next(fields, keyword)) {
    const int line = reader.number;
    if (keyword == "vertices") continue;
    if (keyword != "star") throw ParseError(line, "unknown record '" + keyword + "'");
    Star s;
    s.center = read_id(fields, line);
    for (auto& l : s.leaves) l = read_id(fields, line);
    packing.stars.push_back(s);
  }
  return packing;
}

}  // namespace fullerene
