#ifndef ORBITLIFT_CSV_HPP
#define ORBITLIFT_CSV_HPP

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitlift/core.hpp"

namespace orbitlift::csv {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    auto b = field.find_first_not_of(" \t\r");
    auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline double parse_number(const std::string& s, std::size_t row, const std::string& column) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InputError,
                "row " + std::to_string(row) + ", column '" + column + "': not a number: '" + s + "'");
  }
}

/// Shortest round-trip representation of a double.
inline std::string format_number(double v) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::stod(buf) == v) break;
  }
  return buf;
}

/// Checks a header of the form prefix..., re_1, im_1, ..., re_n, im_n and
/// returns n. Errors name the first offending column.
inline std::size_t check_component_header(const std::vector<std::string>& header,
                                          const std::vector<std::string>& prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i >= header.size() || header[i] != prefix[i])
      throw Error(ErrorCode::InputError,
                  "header column " + std::to_string(i + 1) + " is '" +
                      (i < header.size() ? header[i] : std::string("<missing>")) +
                      "', expected '" + prefix[i] + "'");
  }
  std::size_t rest = header.size() - prefix.size();
  if (rest == 0 || rest % 2 != 0)
    throw Error(ErrorCode::InputError,
                "header needs re_j,im_j column pairs after '" + prefix.back() + "'");
  for (std::size_t j = 0; j < rest / 2; ++j) {
    std::string re = "re_" + std::to_string(j + 1), im = "im_" + std::to_string(j + 1);
    const auto& hr = header[prefix.size() + 2 * j];
    const auto& hi = header[prefix.size() + 2 * j + 1];
    if (hr != re)
      throw Error(ErrorCode::InputError, "header column '" + hr + "', expected '" + re + "'");
    if (hi != im)
      throw Error(ErrorCode::InputError, "header column '" + hi + "', expected '" + im + "'");
  }
  return rest / 2;
}

/// Reads `t,re_1,im_1,...,re_n,im_n`.
inline SampledCurve read_curve(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::InputError, "empty curve file");
  auto header = split_fields(line);
  std::size_t n = check_component_header(header, {"t"});
  std::vector<double> t;
  std::vector<CVec> v;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = split_fields(line);
    if (f.size() != header.size())
      throw Error(ErrorCode::InputError, "row " + std::to_string(row) + " has " +
                                             std::to_string(f.size()) + " fields, expected " +
                                             std::to_string(header.size()));
    t.push_back(parse_number(f[0], row, header[0]));
    CVec z(n);
    for (std::size_t j = 0; j < n; ++j)
      z[j] = {parse_number(f[1 + 2 * j], row, header[1 + 2 * j]),
              parse_number(f[2 + 2 * j], row, header[2 + 2 * j])};
    v.push_back(std::move(z));
  }
  try {
    return make_sampled_curve(std::move(t), std::move(v));
  } catch (const Error& e) {
    throw Error(ErrorCode::InputError, e.what());
  }
}

inline SampledCurve read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open '" + path + "'");
  return read_curve(in);
}

inline void write_curve(std::ostream& out, const SampledCurve& c) {
  out << "t";
  for (std::size_t j = 1; j <= c.components(); ++j) out << ",re_" << j << ",im_" << j;
  out << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << format_number(c.t(i));
    for (const auto& z : c[i]) out << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    out << "\n";
  }
}

/// Tuple samples in long format `t,point,re_1,im_1,...`: one row per point.
struct TupleSamples {
  std::vector<double> t;
  std::vector<AQPoint> tuples;
};

inline TupleSamples read_tuples(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::InputError, "empty tuple file");
  auto header = split_fields(line);
  std::size_t n = check_component_header(header, {"t", "point"});
  std::map<double, std::vector<CVec>> rows;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = split_fields(line);
    if (f.size() != header.size())
      throw Error(ErrorCode::InputError, "row " + std::to_string(row) + " has wrong field count");
    double t = parse_number(f[0], row, "t");
    CVec z(n);
    for (std::size_t j = 0; j < n; ++j)
      z[j] = {parse_number(f[2 + 2 * j], row, header[2 + 2 * j]),
              parse_number(f[3 + 2 * j], row, header[3 + 2 * j])};
    rows[t].push_back(std::move(z));
  }
  TupleSamples out;
  std::size_t q = 0;
  for (auto& [t, pts] : rows) {
    if (q == 0) q = pts.size();
    if (pts.size() != q)
      throw Error(ErrorCode::InputError, "t = " + format_number(t) + " has " +
                                             std::to_string(pts.size()) + " points, expected " +
                                             std::to_string(q));
    out.t.push_back(t);
    out.tuples.emplace_back(std::move(pts));
  }
  if (out.t.empty()) throw Error(ErrorCode::InputError, "no tuple rows");
  return out;
}

inline TupleSamples read_tuples_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open '" + path + "'");
  return read_tuples(in);
}

/// Grid samples `x,y,re_1,im_1,...`; (x, y) pairs absent from the file are
/// outside the domain mask.
inline SampledGrid2D read_grid2d(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::InputError, "empty grid file");
  auto header = split_fields(line);
  std::size_t n = check_component_header(header, {"x", "y"});
  std::map<std::pair<double, double>, CVec> cells;
  std::map<double, int> xs, ys;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = split_fields(line);
    if (f.size() != header.size())
      throw Error(ErrorCode::InputError, "row " + std::to_string(row) + " has wrong field count");
    double x = parse_number(f[0], row, "x"), y = parse_number(f[1], row, "y");
    CVec z(n);
    for (std::size_t j = 0; j < n; ++j)
      z[j] = {parse_number(f[2 + 2 * j], row, header[2 + 2 * j]),
              parse_number(f[3 + 2 * j], row, header[3 + 2 * j])};
    cells[{x, y}] = std::move(z);
    xs[x] = 0;
    ys[y] = 0;
  }
  std::vector<double> xv, yv;
  for (auto& [x, _] : xs) xv.push_back(x);
  for (auto& [y, _] : ys) yv.push_back(y);
  if (xv.size() < 2 || yv.size() < 2)
    throw Error(ErrorCode::InputError, "grid needs at least two distinct x and y values");
  std::vector<CVec> values(xv.size() * yv.size(), CVec(n));
  std::vector<bool> mask(values.size(), false);
  for (std::size_t iy = 0; iy < yv.size(); ++iy)
    for (std::size_t ix = 0; ix < xv.size(); ++ix) {
      auto it = cells.find({xv[ix], yv[iy]});
      if (it == cells.end()) continue;
      values[iy * xv.size() + ix] = it->second;
      mask[iy * xv.size() + ix] = true;
    }
  return SampledGrid2D(Grid(xv), Grid(yv), std::move(values), std::move(mask));
}

inline SampledGrid2D read_grid2d_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open '" + path + "'");
  return read_grid2d(in);
}

}  // namespace orbitlift::csv

#endif  // ORBITLIFT_CSV_HPP
