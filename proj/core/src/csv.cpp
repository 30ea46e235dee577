#include "kslab/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kslab {

std::string format_double(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);  // binary: '\n' endings everywhere
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
  return is;
}

}  // namespace

void write_field_csv(const std::filesystem::path& path, const ScalarField& f) {
  std::ofstream os = open_out(path);
  const Grid& g = f.grid();
  os << "nx,ny,lx,ly\n"
     << g.nx << ',' << g.ny << ',' << format_double(g.lx) << ',' << format_double(g.ly)
     << '\n';
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i) os << ',';
      os << format_double(f(i, j));
    }
    os << '\n';
  }
}

ScalarField read_field_csv(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("field csv: missing header");
  if (!std::getline(is, line)) throw std::runtime_error("field csv: missing dimensions");
  auto dims = split_csv_line(line);
  if (dims.size() != 4) throw std::runtime_error("field csv: bad dimension line");
  const int nx = static_cast<int>(parse_double(dims[0]));
  const int ny = static_cast<int>(parse_double(dims[1]));
  Grid g(nx, ny, parse_double(dims[2]), parse_double(dims[3]));
  ScalarField f(g);
  for (int j = 0; j < ny; ++j) {
    if (!std::getline(is, line)) throw std::runtime_error("field csv: truncated rows");
    auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) != nx)
      throw std::runtime_error("field csv: bad row width");
    for (int i = 0; i < nx; ++i) f(i, j) = parse_double(cells[i]);
  }
  return f;
}

const char* const kSeriesHeader =
    "t,mass,F_ab,int_u_ln_u,int_u_ln_v,int_grad_sqrt_v_sq,int_gradu_sq_over_u,"
    "int_u2_over_v,int_gradv4_over_v3,int_u_gradv2_over_v2,int_gradv2_over_v,"
    "int_gradv_sq,int_v_pow,int_u_sq,min_v,min_u";

void write_series_csv(const std::filesystem::path& path,
                      std::span<const FunctionalRecord> series) {
  std::ofstream os = open_out(path);
  os << kSeriesHeader << '\n';
  for (const FunctionalRecord& r : series) {
    os << format_double(r.t) << ',' << format_double(r.mass) << ','
       << format_double(r.F_ab) << ',' << format_double(r.int_u_ln_u) << ','
       << format_double(r.int_u_ln_v) << ',' << format_double(r.int_grad_sqrt_v_sq) << ','
       << format_double(r.int_gradu_sq_over_u) << ',' << format_double(r.int_u2_over_v)
       << ',' << format_double(r.int_gradv4_over_v3) << ','
       << format_double(r.int_u_gradv2_over_v2) << ','
       << format_double(r.int_gradv2_over_v) << ',' << format_double(r.int_gradv_sq)
       << ',' << format_double(r.int_v_pow) << ',' << format_double(r.int_u_sq) << ','
       << format_double(r.min_v) << ',' << format_double(r.min_u) << '\n';
  }
}

std::vector<FunctionalRecord> read_series_csv(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("series csv: missing header");
  std::vector<FunctionalRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto c = split_csv_line(line);
    if (c.size() != 16) throw std::runtime_error("series csv: expected 16 columns");
    FunctionalRecord r;
    r.t = parse_double(c[0]);
    r.mass = parse_double(c[1]);
    r.F_ab = parse_double(c[2]);
    r.int_u_ln_u = parse_double(c[3]);
    r.int_u_ln_v = parse_double(c[4]);
    r.int_grad_sqrt_v_sq = parse_double(c[5]);
    r.int_gradu_sq_over_u = parse_double(c[6]);
    r.int_u2_over_v = parse_double(c[7]);
    r.int_gradv4_over_v3 = parse_double(c[8]);
    r.int_u_gradv2_over_v2 = parse_double(c[9]);
    r.int_gradv2_over_v = parse_double(c[10]);
    r.int_gradv_sq = parse_double(c[11]);
    r.int_v_pow = parse_double(c[12]);
    r.int_u_sq = parse_double(c[13]);
    r.min_v = parse_double(c[14]);
    r.min_u = parse_double(c[15]);
    out.push_back(r);
  }
  return out;
}

void write_identity_reports_csv(const std::filesystem::path& path,
                                std::span<const IdentityReport> reports) {
  std::ofstream os = open_out(path);
  os << "name,h,lhs,rhs,residual\n";
  for (const IdentityReport& r : reports) {
    os << r.name << ',' << format_double(r.grid_h) << ',' << format_double(r.lhs) << ','
       << format_double(r.rhs) << ',' << format_double(r.residual) << '\n';
  }
}

void write_admissibility_reports_csv(const std::filesystem::path& path,
                                     std::span<const AdmissibilityReport> reports) {
  std::ofstream os = open_out(path);
  os << "chi,feasible,best_a,best_b,best_phi\n";
  for (const AdmissibilityReport& r : reports) {
    os << format_double(r.chi) << ',' << (r.feasible ? "true" : "false") << ','
       << format_double(r.best_a) << ',' << format_double(r.best_b) << ','
       << format_double(r.best_phi) << '\n';
  }
}

}  // namespace kslab
