#include "srkit/io.hpp"

#include <fstream>
#include <sstream>

namespace srkit {

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(errc::syntax_error, "index list: " + text);
    }
  }
  return out;
}

std::string next_content_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    const auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(pos, end - pos + 1);
  }
  fail(errc::syntax_error, "unexpected end of input");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

std::string witness_line(const IndexPair& idx) {
  return "FAIL s=" + std::to_string(idx.rows.size()) + " I=" + join_ints(idx.rows) +
         " J=" + join_ints(idx.cols);
}

IndexPair parse_witness_line(const std::string& line) {
  std::stringstream ss(line);
  std::string tag, sfield, ifield, jfield;
  ss >> tag >> sfield >> ifield >> jfield;
  if (tag != "FAIL" || sfield.rfind("s=", 0) != 0 || ifield.rfind("I=", 0) != 0 ||
      jfield.rfind("J=", 0) != 0) {
    fail(errc::syntax_error, "witness line: " + line);
  }
  IndexPair idx;
  idx.rows = split_ints(ifield.substr(2));
  idx.cols = split_ints(jfield.substr(2));
  const std::size_t s = static_cast<std::size_t>(std::stoul(sfield.substr(2)));
  if (idx.rows.size() != s || idx.cols.size() != s) fail(errc::syntax_error, "witness sizes: " + line);
  return idx;
}

void write_toeplitz(std::ostream& os, const Toeplitz& t) {
  os << t.field->header() << "\n";
  os << "col:";
  for (std::size_t i = 0; i < t.col.size(); ++i) {
    os << (i ? ", " : " ") << t.field->format(t.col[i]);
  }
  os << "\n";
}

Toeplitz read_toeplitz(std::istream& is) {
  FieldPtr f = Field::parse_header(next_content_line(is));
  const std::string line = next_content_line(is);
  if (line.rfind("col:", 0) != 0) fail(errc::syntax_error, "expected a col: line, got: " + line);
  std::vector<code_t> col;
  for (const std::string& item : split_commas(line.substr(4))) col.push_back(f->parse(item));
  return {std::move(f), std::move(col)};
}

json field_to_json(const Field& f) {
  json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["modulus"] = f.modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto e = j.at("e").get<std::uint32_t>();
  if (j.contains("modulus")) return Field::create(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
  return Field::create(p, e);
}

json toeplitz_to_json(const Toeplitz& t) {
  json j;
  j["field"] = field_to_json(*t.field);
  json col = json::array();
  for (code_t v : t.col) col.push_back(t.field->format(v));
  j["col"] = col;
  return j;
}

Toeplitz toeplitz_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  std::vector<code_t> col;
  for (const auto& item : j.at("col")) col.push_back(f->parse(item.get<std::string>()));
  return {std::move(f), std::move(col)};
}

void write_poly_matrix(std::ostream& os, const PolyMatrix& p) {
  os << p.field->header() << "\n";
  os << "P " << p.rows << " " << p.cols << "\n";
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      const Poly& entry = p.at(i, j);
      if (entry.c.empty()) continue;
      os << (i + 1) << " " << (j + 1) << " :";
      for (std::size_t d = 0; d < entry.c.size(); ++d) {
        os << (d ? ", " : " ") << p.field->format(entry.c[d]);
      }
      os << "\n";
    }
  }
}

PolyMatrix read_poly_matrix(std::istream& is) {
  FieldPtr f = Field::parse_header(next_content_line(is));
  std::stringstream head(next_content_line(is));
  std::string tag;
  int rows = 0, cols = 0;
  head >> tag >> rows >> cols;
  if (tag != "P" || head.fail()) fail(errc::syntax_error, "expected a P <rows> <cols> line");
  PolyMatrix p(std::move(f), rows, cols);

  std::string line;
  while (std::getline(is, line)) {
    const auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(errc::syntax_error, "entry line needs a colon: " + line);
    std::stringstream ij(line.substr(0, colon));
    int i = 0, j = 0;
    ij >> i >> j;
    if (ij.fail() || i < 1 || i > rows || j < 1 || j > cols)
      fail(errc::syntax_error, "entry indices: " + line);
    Poly entry;
    for (const std::string& item : split_commas(line.substr(colon + 1)))
      entry.c.push_back(p.field->parse(item));
    p.at(i - 1, j - 1) = poly_trim(std::move(entry));
  }
  return p;
}

json poly_matrix_to_json(const PolyMatrix& p) {
  json j;
  j["field"] = field_to_json(*p.field);
  j["rows"] = p.rows;
  j["cols"] = p.cols;
  json entries = json::array();
  for (int i = 0; i < p.rows; ++i) {
    for (int c = 0; c < p.cols; ++c) {
      const Poly& entry = p.at(i, c);
      if (entry.c.empty()) continue;
      json e;
      e["row"] = i + 1;
      e["col"] = c + 1;
      json coeffs = json::array();
      for (code_t v : entry.c) coeffs.push_back(p.field->format(v));
      e["coeffs"] = coeffs;
      entries.push_back(e);
    }
  }
  j["entries"] = entries;
  return j;
}

PolyMatrix poly_matrix_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  PolyMatrix p(std::move(f), j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries")) {
    const int row = e.at("row").get<int>();
    const int col = e.at("col").get<int>();
    if (row < 1 || row > p.rows || col < 1 || col > p.cols)
      fail(errc::index_out_of_range, "entry indices in json");
    Poly entry;
    for (const auto& item : e.at("coeffs")) entry.c.push_back(p.field->parse(item.get<std::string>()));
    p.at(row - 1, col - 1) = poly_trim(std::move(entry));
  }
  return p;
}

void write_dense(std::ostream& os, const Mat& m) {
  os << m.field->header() << "\n";
  os << "M " << m.rows << " " << m.cols << "\n";
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) os << " ";
      os << m.field->format(m.at(i, j));
    }
    os << "\n";
  }
}

Mat read_dense(std::istream& is) {
  FieldPtr f = Field::parse_header(next_content_line(is));
  std::stringstream head(next_content_line(is));
  std::string tag;
  int rows = 0, cols = 0;
  head >> tag >> rows >> cols;
  if (tag != "M" || head.fail()) fail(errc::syntax_error, "expected an M <rows> <cols> line");
  Mat m(std::move(f), rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::stringstream row(next_content_line(is));
    for (int j = 0; j < cols; ++j) {
      std::string item;
      row >> item;
      if (item.empty()) fail(errc::syntax_error, "row " + std::to_string(i + 1) + " is short");
      m.at(i, j) = m.field->parse(item);
    }
  }
  return m;
}

json mat_to_json(const Mat& m) {
  json j;
  j["field"] = field_to_json(*m.field);
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  json data = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.field->format(m.at(i, c)));
    data.push_back(std::move(row));
  }
  j["data"] = data;
  return j;
}

Mat mat_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  Mat m(f, j.at("rows").get<int>(), j.at("cols").get<int>());
  const json& data = j.at("data");
  for (int i = 0; i < m.rows; ++i)
    for (int c = 0; c < m.cols; ++c)
      m.at(i, c) = f->parse(data.at(i).at(c).get<std::string>());
  return m;
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::usage, "cannot open " + path);
  return in;
}

}  // namespace

Toeplitz load_toeplitz(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  return read_toeplitz(in);
}

PolyMatrix load_poly_matrix(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  return read_poly_matrix(in);
}

std::string to_text(const Toeplitz& t) {
  std::ostringstream os;
  write_toeplitz(os, t);
  return os.str();
}

std::string to_text(const Mat& m) {
  std::ostringstream os;
  write_dense(os, m);
  return os.str();
}

std::string to_text(const PolyMatrix& p) {
  std::ostringstream os;
  write_poly_matrix(os, p);
  return os.str();
}

}  // namespace srkit
