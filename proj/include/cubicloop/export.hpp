#pragma once

// Cayley tables on disk.
//
// JSON: {"modulus":"p^3","precision":N,"unit":u,
//        "classes":[{"id":k,"family":"P","exp":e,"digits":[..],"rep":[[d0,d1,d2] x4]}],
//        "circ":[[..] x243],"mul":[[..] x243]}
// CSV:  op,row,col,value with op in {circ, mul}.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cubicloop/loop.hpp"

namespace cubicloop {

enum class ExportFormat { Json, Csv };

struct ExportedTables {
  int precision = 0;  ///< 0 when the source does not record it (CSV)
  ClassTable circ;
  LoopTable loop;
};

void write_json(std::ostream& os, const ClassTable& t, const LoopTable& l, int precision);
void write_csv(std::ostream& os, const ClassTable& t, const LoopTable& l);

/// Throw Parse or InvalidTable on malformed input.
ExportedTables read_json(std::istream& is);
ExportedTables read_csv(std::istream& is);

/// File wrappers; I/O failures throw Io.
void export_tables(const std::filesystem::path& path, ExportFormat fmt, const ClassTable& t, const LoopTable& l,
                   int precision);
ExportedTables import_tables(const std::filesystem::path& path, ExportFormat fmt);

ExportFormat parse_format(const std::string& name);

}  // namespace cubicloop
