// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include "hodge/mesh.hpp"

namespace hodge
{

namespace
{

// Linear triangle and tetrahedron element type ids.
constexpr int kTriangle = 2;
constexpr int kTetrahedron = 4;

const std::set<std::string> kSkippedSections = {
    "PhysicalNames",       "Entities",         "PartitionedEntities", "Periodic",
    "GhostElements",       "Parametrizations", "NodeData",            "ElementData",
    "ElementNodeData",     "InterpolationScheme", "Comments"};

class LineReader
{
public:
  explicit LineReader(std::istream &in)
  {
    std::string line;
    while (std::getline(in, line))
    {
      if (!line.empty() && line.back() == '\r')
      {
        line.pop_back();
      }
      lines.push_back(std::move(line));
    }
  }

  bool AtEnd()
  {
    while (pos < lines.size() && IsBlank(lines[pos]))
    {
      ++pos;
    }
    return pos >= lines.size();
  }

  // Next non-blank line; `lineno` receives its 1-based number.
  const std::string &Next()
  {
    if (AtEnd())
    {
      throw ParseError("gmsh: unexpected end of file after line " + std::to_string(lines.size()));
    }
    lineno = pos + 1;
    return lines[pos++];
  }

  std::istringstream NextTokens() { return std::istringstream(Next()); }

  [[noreturn]] void Fail(const std::string &what) const
  {
    throw ParseError("gmsh: line " + std::to_string(lineno) + ": " + what);
  }

  std::size_t lineno = 0;

private:
  static bool IsBlank(const std::string &s)
  {
    return s.find_first_not_of(" \t\r") == std::string::npos;
  }

  std::vector<std::string> lines;
  std::size_t pos = 0;
};

template <typename T>
T Read(std::istringstream &ss, LineReader &reader, const char *what)
{
  T value;
  if (!(ss >> value))
  {
    reader.Fail(std::string("expected ") + what);
  }
  return value;
}

void ExpectEnd(LineReader &reader, const std::string &section)
{
  std::string line = reader.Next();
  line.erase(line.find_last_not_of(" \t\r") + 1);
  if (line != "$End" + section)
  {
    reader.Fail("expected $End" + section + ", found '" + line + "'");
  }
}

struct RawMesh
{
  std::map<long, Point> nodes;
  std::vector<std::vector<long>> triangles, tetrahedra;
};

void AddElement(RawMesh &raw, int type, std::vector<long> nodes)
{
  if (type == kTriangle)
  {
    raw.triangles.push_back(std::move(nodes));
  }
  else if (type == kTetrahedron)
  {
    raw.tetrahedra.push_back(std::move(nodes));
  }
}

int ElementNodeCount(int type)
{
  return type == kTriangle ? 3 : type == kTetrahedron ? 4 : -1;
}

void ReadNodesV2(LineReader &reader, RawMesh &raw)
{
  auto header = reader.NextTokens();
  const long count = Read<long>(header, reader, "node count");
  for (long i = 0; i < count; ++i)
  {
    auto ss = reader.NextTokens();
    const long tag = Read<long>(ss, reader, "node tag");
    Point p;
    for (double &x : p)
    {
      x = Read<double>(ss, reader, "node coordinate");
    }
    raw.nodes[tag] = p;
  }
  ExpectEnd(reader, "Nodes");
}

void ReadElementsV2(LineReader &reader, RawMesh &raw)
{
  auto header = reader.NextTokens();
  const long count = Read<long>(header, reader, "element count");
  for (long i = 0; i < count; ++i)
  {
    auto ss = reader.NextTokens();
    Read<long>(ss, reader, "element tag");
    const int type = Read<int>(ss, reader, "element type");
    const int ntags = Read<int>(ss, reader, "tag count");
    for (int t = 0; t < ntags; ++t)
    {
      Read<long>(ss, reader, "element tag value");
    }
    const int nn = ElementNodeCount(type);
    if (nn < 0)
    {
      continue;
    }
    std::vector<long> nodes(nn);
    for (long &n : nodes)
    {
      n = Read<long>(ss, reader, "element node");
    }
    AddElement(raw, type, std::move(nodes));
  }
  ExpectEnd(reader, "Elements");
}

void ReadNodesV4(LineReader &reader, RawMesh &raw)
{
  auto header = reader.NextTokens();
  const long blocks = Read<long>(header, reader, "entity block count");
  for (long b = 0; b < blocks; ++b)
  {
    auto bh = reader.NextTokens();
    const int entity_dim = Read<int>(bh, reader, "entity dimension");
    Read<int>(bh, reader, "entity tag");
    const int parametric = Read<int>(bh, reader, "parametric flag");
    const long count = Read<long>(bh, reader, "nodes in block");
    std::vector<long> tags(count);
    for (long &t : tags)
    {
      auto ss = reader.NextTokens();
      t = Read<long>(ss, reader, "node tag");
    }
    const int extra = parametric ? entity_dim : 0;
    for (long i = 0; i < count; ++i)
    {
      auto ss = reader.NextTokens();
      Point p;
      for (double &x : p)
      {
        x = Read<double>(ss, reader, "node coordinate");
      }
      for (int e = 0; e < extra; ++e)
      {
        Read<double>(ss, reader, "parametric coordinate");
      }
      raw.nodes[tags[i]] = p;
    }
  }
  ExpectEnd(reader, "Nodes");
}

void ReadElementsV4(LineReader &reader, RawMesh &raw)
{
  auto header = reader.NextTokens();
  const long blocks = Read<long>(header, reader, "entity block count");
  for (long b = 0; b < blocks; ++b)
  {
    auto bh = reader.NextTokens();
    Read<int>(bh, reader, "entity dimension");
    Read<int>(bh, reader, "entity tag");
    const int type = Read<int>(bh, reader, "element type");
    const long count = Read<long>(bh, reader, "elements in block");
    const int nn = ElementNodeCount(type);
    for (long i = 0; i < count; ++i)
    {
      auto ss = reader.NextTokens();
      if (nn < 0)
      {
        continue;
      }
      Read<long>(ss, reader, "element tag");
      std::vector<long> nodes(nn);
      for (long &n : nodes)
      {
        n = Read<long>(ss, reader, "element node");
      }
      AddElement(raw, type, std::move(nodes));
    }
  }
  ExpectEnd(reader, "Elements");
}

}  // namespace

SimplicialMesh read_gmsh(std::istream &in)
{
  LineReader reader(in);
  if (reader.AtEnd())
  {
    throw ParseError("gmsh: empty input");
  }
  RawMesh raw;
  int major = 0;
  while (!reader.AtEnd())
  {
    std::string line = reader.Next();
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty() || line[0] != '$')
    {
      reader.Fail("expected a section header, found '" + line + "'");
    }
    const std::string section = line.substr(1);
    if (section == "MeshFormat")
    {
      auto ss = reader.NextTokens();
      const auto version = Read<std::string>(ss, reader, "format version");
      const int file_type = Read<int>(ss, reader, "file type");
      Read<int>(ss, reader, "data size");
      if (file_type != 0)
      {
        reader.Fail("binary MSH files are not supported");
      }
      if (version.starts_with("2."))
      {
        major = 2;
      }
      else if (version == "4.1")
      {
        major = 4;
      }
      else
      {
        reader.Fail("unsupported MSH version " + version);
      }
      ExpectEnd(reader, "MeshFormat");
    }
    else if (section == "Nodes" || section == "Elements")
    {
      if (major == 0)
      {
        reader.Fail("$" + section + " before $MeshFormat");
      }
      if (section == "Nodes")
      {
        major == 2 ? ReadNodesV2(reader, raw) : ReadNodesV4(reader, raw);
      }
      else
      {
        major == 2 ? ReadElementsV2(reader, raw) : ReadElementsV4(reader, raw);
      }
    }
    else if (kSkippedSections.contains(section))
    {
      while (true)
      {
        std::string body = reader.Next();
        body.erase(body.find_last_not_of(" \t\r") + 1);
        if (body == "$End" + section)
        {
          break;
        }
      }
    }
    else
    {
      reader.Fail("unknown section header '" + line + "'");
    }
  }
  if (major == 0)
  {
    throw ParseError("gmsh: missing $MeshFormat section");
  }

  const int dim = raw.tetrahedra.empty() ? 2 : 3;
  const auto &elements = dim == 3 ? raw.tetrahedra : raw.triangles;
  if (elements.empty())
  {
    throw ParseError("gmsh: no triangle or tetrahedron elements at line " +
                     std::to_string(reader.lineno));
  }
  std::map<long, Index> dense;
  for (const auto &e : elements)
  {
    for (long tag : e)
    {
      if (!raw.nodes.contains(tag))
      {
        throw ParseError("gmsh: element references undefined node " + std::to_string(tag));
      }
      dense.emplace(tag, 0);
    }
  }
  std::vector<Point> vertices;
  vertices.reserve(dense.size());
  for (auto &[tag, idx] : dense)
  {
    idx = static_cast<Index>(vertices.size());
    vertices.push_back(raw.nodes.at(tag));
  }
  std::vector<Index> cells;
  cells.reserve(elements.size() * (dim + 1));
  for (const auto &e : elements)
  {
    for (long tag : e)
    {
      cells.push_back(dense.at(tag));
    }
  }
  return SimplicialMesh(dim, std::move(vertices), std::move(cells));
}

SimplicialMesh read_gmsh_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError("gmsh: cannot open " + path);
  }
  return read_gmsh(in);
}

}  // namespace hodge
