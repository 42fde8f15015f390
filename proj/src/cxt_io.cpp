#include "rmcs/cxt_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rmcs::fca {

namespace {

std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(std::string("cxt: unexpected end of file, expected ") + what);
  return chomp(line);
}

std::string next_nonblank(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    line = chomp(line);
    if (!line.empty()) return line;
  }
  throw std::runtime_error(std::string("cxt: unexpected end of file, expected ") + what);
}

int parse_count(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("cxt: bad ") + what + " count: '" + s + "'");
  }
}

}  // namespace

FormalContext read_cxt(std::istream& in) {
  if (next_line(in, "format tag") != "B") throw std::runtime_error("cxt: missing 'B' tag on line 1");
  const std::string name = next_line(in, "context name");
  const int n_objects = parse_count(next_nonblank(in, "object count"), "object");
  const int n_attributes = parse_count(next_nonblank(in, "attribute count"), "attribute");

  std::vector<std::string> object_names, attribute_names;
  object_names.reserve(static_cast<std::size_t>(n_objects));
  attribute_names.reserve(static_cast<std::size_t>(n_attributes));
  for (int g = 0; g < n_objects; ++g) object_names.push_back(next_nonblank(in, "object name"));
  for (int m = 0; m < n_attributes; ++m) attribute_names.push_back(next_nonblank(in, "attribute name"));

  FormalContext ctx(n_objects, n_attributes, std::move(object_names), std::move(attribute_names));
  ctx.set_name(name);

  for (int g = 0; g < n_objects; ++g) {
    const std::string row = next_nonblank(in, "incidence row");
    if (static_cast<int>(row.size()) != n_attributes)
      throw std::runtime_error("cxt: row " + std::to_string(g + 1) + " has " +
                               std::to_string(row.size()) + " cells, expected " +
                               std::to_string(n_attributes));
    for (int m = 0; m < n_attributes; ++m) {
      const char c = row[static_cast<std::size_t>(m)];
      if (c == 'X')
        ctx.set_incidence(g, m);
      else if (c != '.')
        throw std::runtime_error("cxt: row " + std::to_string(g + 1) + " column " +
                                 std::to_string(m + 1) + ": expected 'X' or '.', got '" +
                                 std::string(1, c) + "'");
    }
  }
  return ctx;
}

FormalContext read_cxt_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cxt: cannot open '" + path + "'");
  return read_cxt(in);
}

void write_cxt(std::ostream& out, const FormalContext& ctx) {
  out << "B\n" << ctx.name() << "\n";
  out << ctx.object_count() << "\n" << ctx.attribute_count() << "\n";
  for (const auto& n : ctx.object_names()) out << n << "\n";
  for (const auto& n : ctx.attribute_names()) out << n << "\n";
  for (int g = 0; g < ctx.object_count(); ++g) {
    for (int m = 0; m < ctx.attribute_count(); ++m)
      out << (ctx.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
}

void write_cxt_file(const std::string& path, const FormalContext& ctx) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cxt: cannot open '" + path + "' for writing");
  write_cxt(out, ctx);
  out.flush();
  if (!out) throw std::runtime_error("cxt: write to '" + path + "' failed");
}

}  // namespace rmcs::fca
