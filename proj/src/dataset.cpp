#include "rmcs/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rmcs/rng.hpp"

namespace rmcs {

void validate(const Dataset& ds) {
  const int n = ds.object_count();
  const int d = ds.feature_count();
  if (static_cast<int>(ds.labels.size()) != n)
    throw std::invalid_argument("Dataset: label count != object count");
  if (static_cast<int>(ds.feature_names.size()) != d ||
      static_cast<int>(ds.feature_kind.size()) != d)
    throw std::invalid_argument("Dataset: feature metadata length != feature count");
  for (int j = 0; j < d; ++j) {
    if (ds.feature_kind[static_cast<std::size_t>(j)] != FeatureKind::binary) continue;
    for (int i = 0; i < n; ++i) {
      const double v = ds.features(i, j);
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument("Dataset: binary feature '" +
                                    ds.feature_names[static_cast<std::size_t>(j)] +
                                    "' holds non 0/1 value at row " + std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i)
    if (ds.labels[static_cast<std::size_t>(i)] < 0 ||
        ds.labels[static_cast<std::size_t>(i)] >= ds.class_count())
      throw std::invalid_argument("Dataset: label out of range at row " + std::to_string(i));
}

namespace {

std::string trim(std::string s) {
  const auto is_space = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !s.empty();
}

bool parse_int(const std::string& s, int& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !s.empty();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

RawTable read_table(std::istream& in, bool has_header, const std::string& name) {
  RawTable t;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (first && has_header) {
      t.header = std::move(cells);
      first = false;
      continue;
    }
    first = false;
    if (!t.rows.empty() && cells.size() != t.rows.front().size())
      throw LoadError(LoadError::Kind::ragged_row,
                      name + ": row at line " + std::to_string(line_no) + " has " +
                          std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(t.rows.front().size()));
    if (!t.header.empty() && cells.size() != t.header.size())
      throw LoadError(LoadError::Kind::ragged_row,
                      name + ": row at line " + std::to_string(line_no) + " has " +
                          std::to_string(cells.size()) + " cells, header has " +
                          std::to_string(t.header.size()));
    t.rows.push_back(std::move(cells));
  }
  if (t.rows.empty()) throw LoadError(LoadError::Kind::empty, name + ": no data rows");
  return t;
}

int resolve_label_column(const RawTable& t, const std::string& label_column,
                         const std::string& name) {
  const int n_cols = static_cast<int>(t.rows.front().size());
  if (label_column.empty()) return n_cols - 1;
  int idx = 0;
  if (parse_int(label_column, idx)) {
    if (idx < 0 || idx >= n_cols)
      throw LoadError(LoadError::Kind::bad_label_column,
                      name + ": label column index " + label_column + " out of range (0.." +
                          std::to_string(n_cols - 1) + ")");
    return idx;
  }
  for (int j = 0; j < static_cast<int>(t.header.size()); ++j)
    if (t.header[static_cast<std::size_t>(j)] == label_column) return j;
  throw LoadError(LoadError::Kind::bad_label_column,
                  name + ": no column named '" + label_column + "'" +
                      (t.header.empty() ? " (file has no header)" : ""));
}

}  // namespace

Dataset load_csv_text(const std::string& text, const std::string& label_column, bool has_header,
                      const std::string& name) {
  std::istringstream in(text);
  const RawTable t = read_table(in, has_header, name);
  const int n_cols = static_cast<int>(t.rows.front().size());
  const int n_rows = static_cast<int>(t.rows.size());
  const int label_col = resolve_label_column(t, label_column, name);

  const auto column_name = [&](int j) {
    return j < static_cast<int>(t.header.size()) ? t.header[static_cast<std::size_t>(j)]
                                                 : "c" + std::to_string(j);
  };

  // Label mapping: sorted unique values -> dense ids.
  std::set<std::string> label_values;
  for (const auto& row : t.rows) label_values.insert(row[static_cast<std::size_t>(label_col)]);
  std::vector<std::string> label_names(label_values.begin(), label_values.end());
  std::map<std::string, int> label_id;
  for (int i = 0; i < static_cast<int>(label_names.size()); ++i)
    label_id[label_names[static_cast<std::size_t>(i)]] = i;

  // Per input column: numeric if its first data value parses as a number.
  struct Column {
    int source = 0;
    bool numeric = false;
    std::vector<std::string> categories;  // sorted, categorical only
  };
  std::vector<Column> columns;
  int out_width = 0;
  for (int j = 0; j < n_cols; ++j) {
    if (j == label_col) continue;
    Column col;
    col.source = j;
    double unused = 0.0;
    col.numeric = parse_double(t.rows.front()[static_cast<std::size_t>(j)], unused);
    if (!col.numeric) {
      std::set<std::string> values;
      for (const auto& row : t.rows) values.insert(row[static_cast<std::size_t>(j)]);
      col.categories.assign(values.begin(), values.end());
    }
    out_width += col.numeric ? 1 : static_cast<int>(col.categories.size());
    columns.push_back(std::move(col));
  }

  Dataset ds;
  ds.features.resize(n_rows, out_width);
  ds.labels.resize(static_cast<std::size_t>(n_rows));
  ds.label_names = std::move(label_names);

  for (const auto& col : columns) {
    if (col.numeric) {
      ds.feature_names.push_back(column_name(col.source));
    } else {
      for (const auto& cat : col.categories)
        ds.feature_names.push_back(column_name(col.source) + "=" + cat);
    }
  }

  for (int i = 0; i < n_rows; ++i) {
    const auto& row = t.rows[static_cast<std::size_t>(i)];
    ds.labels[static_cast<std::size_t>(i)] = label_id.at(row[static_cast<std::size_t>(label_col)]);
    int out_j = 0;
    for (const auto& col : columns) {
      const std::string& cell = row[static_cast<std::size_t>(col.source)];
      if (col.numeric) {
        double v = 0.0;
        if (!parse_double(cell, v))
          throw LoadError(LoadError::Kind::bad_value,
                          name + ": non-numeric value '" + cell + "' in numeric column '" +
                              column_name(col.source) + "' at data row " + std::to_string(i));
        ds.features(i, out_j++) = v;
      } else {
        for (const auto& cat : col.categories)
          ds.features(i, out_j++) = (cell == cat) ? 1.0 : 0.0;
      }
    }
  }

  // Column kinds: one-hot columns are binary by construction; numeric
  // columns whose values all lie in {0,1} are flagged binary too.
  int out_j = 0;
  for (const auto& col : columns) {
    if (col.numeric) {
      bool binary = true;
      for (int i = 0; i < n_rows && binary; ++i) {
        const double v = ds.features(i, out_j);
        binary = (v == 0.0 || v == 1.0);
      }
      ds.feature_kind.push_back(binary ? FeatureKind::binary : FeatureKind::numeric);
      ++out_j;
    } else {
      for (std::size_t c = 0; c < col.categories.size(); ++c) {
        ds.feature_kind.push_back(FeatureKind::binary);
        ++out_j;
      }
    }
  }

  validate(ds);
  return ds;
}

Dataset load_csv(const std::string& path, const std::string& label_column, bool has_header) {
  std::ifstream in(path);
  if (!in)
    throw LoadError(LoadError::Kind::missing_file, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_csv_text(buf.str(), label_column, has_header, path);
}

Dataset take(const Dataset& ds, std::span<const int> rows) {
  Dataset out;
  out.feature_names = ds.feature_names;
  out.label_names = ds.label_names;
  out.feature_kind = ds.feature_kind;
  out.features.resize(static_cast<Eigen::Index>(rows.size()), ds.features.cols());
  out.labels.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int r = rows[i];
    if (r < 0 || r >= ds.object_count())
      throw std::invalid_argument("take: row index " + std::to_string(r) + " out of range");
    out.features.row(static_cast<Eigen::Index>(i)) = ds.features.row(r);
    out.labels[i] = ds.labels[static_cast<std::size_t>(r)];
  }
  return out;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, std::uint64_t seed) {
  const int n = ds.object_count();
  if (n < 2) throw std::invalid_argument("split: need at least 2 objects");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("split: train_fraction must lie in (0,1)");
  const int n_train = static_cast<int>(std::lround(train_fraction * n));
  if (n_train <= 0 || n_train >= n)
    throw std::invalid_argument("split: fraction " + std::to_string(train_fraction) +
                                " leaves an empty side for n=" + std::to_string(n));

  Rng rng = seeded_rng(seed);
  const std::vector<int> order = shuffled_indices(n, rng);
  std::vector<int> train_ids(order.begin(), order.begin() + n_train);
  std::vector<int> test_ids(order.begin() + n_train, order.end());
  std::sort(train_ids.begin(), train_ids.end());
  std::sort(test_ids.begin(), test_ids.end());
  return {take(ds, train_ids), take(ds, test_ids)};
}

Dataset minmax_normalize(const Dataset& ds) {
  Dataset out = ds;
  for (int j = 0; j < ds.feature_count(); ++j) {
    if (ds.feature_kind[static_cast<std::size_t>(j)] == FeatureKind::binary) continue;
    const double lo = ds.features.col(j).minCoeff();
    const double hi = ds.features.col(j).maxCoeff();
    if (hi > lo)
      out.features.col(j) = (ds.features.col(j).array() - lo) / (hi - lo);
    else
      out.features.col(j).setZero();
  }
  return out;
}

std::string to_csv(const Dataset& ds) {
  std::ostringstream out;
  for (const auto& n : ds.feature_names) out << n << ",";
  out << "label\n";
  out.precision(17);
  for (int i = 0; i < ds.object_count(); ++i) {
    for (int j = 0; j < ds.feature_count(); ++j) out << ds.features(i, j) << ",";
    out << ds.label_names[static_cast<std::size_t>(ds.labels[static_cast<std::size_t>(i)])]
        << "\n";
  }
  return out.str();
}

}  // namespace rmcs
