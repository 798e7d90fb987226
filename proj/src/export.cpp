#include "cubicloop/export.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cubicloop/error.hpp"
#include "cubicloop/lambda.hpp"

namespace cubicloop {

namespace {

using Json = nlohmann::ordered_json;

Json table_rows(const CayleyTable& t) {
  Json rows = Json::array();
  for (Element x = 0; x < t.order(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < t.order(); ++y) row.push_back(t(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

CayleyTable rows_to_table(const Json& rows, const char* name) {
  if (!rows.is_array()) throw Error(ErrorKind::Parse, std::string(name) + " is not an array");
  const int n = static_cast<int>(rows.size());
  CayleyTable t(n);
  for (int x = 0; x < n; ++x) {
    const Json& row = rows[static_cast<std::size_t>(x)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::InvalidTable, std::string(name) + " row " + std::to_string(x) + " has the wrong length");
    }
    for (int y = 0; y < n; ++y) {
      const Json& v = row[static_cast<std::size_t>(y)];
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n) {
        throw Error(ErrorKind::InvalidTable, std::string(name) + " cell out of range");
      }
      t.set(x, y, v.get<int>());
    }
  }
  return t;
}

Element find_unit(const CayleyTable& mul) {
  for (Element u = 0; u < mul.order(); ++u) {
    bool ok = true;
    for (Element x = 0; x < mul.order() && ok; ++x) ok = mul(u, x) == x;
    if (ok) return u;
  }
  throw Error(ErrorKind::InvalidTable, "mul has no unit");
}

/// Rebuilds the loop from circ and unit and insists it matches mul.
ExportedTables assemble(int precision, CayleyTable circ, const CayleyTable& mul, Element unit) {
  if (circ.order() != mul.order()) throw Error(ErrorKind::InvalidTable, "circ and mul differ in size");
  if (unit < 0 || unit >= circ.order()) throw Error(ErrorKind::InvalidTable, "unit out of range");
  ExportedTables out{precision, ClassTable{std::move(circ)}, {}};
  out.loop = loop_from(out.circ, unit);
  if (!(out.loop.mul == mul)) throw Error(ErrorKind::InvalidTable, "mul is not u o (x o y)");
  return out;
}

}  // namespace

void write_json(std::ostream& os, const ClassTable& t, const LoopTable& l, int precision) {
  Json doc;
  doc["modulus"] = "p^3";
  doc["precision"] = precision;
  doc["unit"] = l.unit;
  Json classes = Json::array();
  for (int id = 0; id < t.order(); ++id) {
    const LambdaParams lp = class_params(ClassId{id});
    const CanonicalForm& f = class_form(ClassId{id});
    Json c;
    c["id"] = id;
    c["family"] = std::string(1, to_char(lp.family));
    c["exp"] = lp.exp;
    c["digits"] = lp.digits;
    Json rep = Json::array();
    for (const auto& d : f.coords) rep.push_back(d.digits());
    c["rep"] = std::move(rep);
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  doc["circ"] = table_rows(t.circ);
  doc["mul"] = table_rows(l.mul);
  os << doc.dump() << '\n';
}

void write_csv(std::ostream& os, const ClassTable& t, const LoopTable& l) {
  os << "op,row,col,value\n";
  for (const auto& [name, table] : {std::pair<const char*, const CayleyTable*>{"circ", &t.circ}, {"mul", &l.mul}}) {
    for (Element x = 0; x < table->order(); ++x) {
      for (Element y = 0; y < table->order(); ++y) os << name << ',' << x << ',' << y << ',' << (*table)(x, y) << '\n';
    }
  }
}

ExportedTables read_json(std::istream& is) {
  Json doc;
  try {
    doc = Json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  try {
    if (doc.at("modulus") != "p^3") throw Error(ErrorKind::InvalidTable, "unsupported modulus");
    CayleyTable circ = rows_to_table(doc.at("circ"), "circ");
    CayleyTable mul = rows_to_table(doc.at("mul"), "mul");
    if (doc.at("classes").size() != static_cast<std::size_t>(circ.order())) {
      throw Error(ErrorKind::InvalidTable, "class list and table sizes differ");
    }
    return assemble(doc.at("precision").get<int>(), std::move(circ), mul, doc.at("unit").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

ExportedTables read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "op,row,col,value") throw Error(ErrorKind::Parse, "missing CSV header");
  std::vector<std::array<int, 3>> cells[2];
  int n = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string op, a, b, v;
    if (!std::getline(fields, op, ',') || !std::getline(fields, a, ',') || !std::getline(fields, b, ',') ||
        !std::getline(fields, v)) {
      throw Error(ErrorKind::Parse, "bad CSV row: " + line);
    }
    int which = op == "circ" ? 0 : op == "mul" ? 1 : -1;
    if (which < 0) throw Error(ErrorKind::Parse, "unknown op " + op);
    try {
      std::array<int, 3> cell{std::stoi(a), std::stoi(b), std::stoi(v)};
      n = std::max({n, cell[0] + 1, cell[1] + 1});
      cells[which].push_back(cell);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad CSV row: " + line);
    }
  }
  CayleyTable tables[2] = {CayleyTable(n), CayleyTable(n)};
  for (int w = 0; w < 2; ++w) {
    if (cells[w].size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::InvalidTable, "CSV table is incomplete");
    }
    for (const auto& [x, y, v] : cells[w]) {
      if (x < 0 || y < 0 || v < 0 || v >= n) throw Error(ErrorKind::InvalidTable, "CSV cell out of range");
      tables[w].set(x, y, v);
    }
  }
  return assemble(0, std::move(tables[0]), tables[1], find_unit(tables[1]));
}

void export_tables(const std::filesystem::path& path, ExportFormat fmt, const ClassTable& t, const LoopTable& l,
                   int precision) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  if (fmt == ExportFormat::Json) write_json(os, t, l, precision);
  else write_csv(os, t, l);
  os.flush();
  if (!os) throw Error(ErrorKind::Io, "write to " + path.string() + " failed");
}

ExportedTables import_tables(const std::filesystem::path& path, ExportFormat fmt) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return fmt == ExportFormat::Json ? read_json(is) : read_csv(is);
}

ExportFormat parse_format(const std::string& name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "csv") return ExportFormat::Csv;
  throw Error(ErrorKind::Parse, "unknown format " + name);
}

}  // namespace cubicloop
