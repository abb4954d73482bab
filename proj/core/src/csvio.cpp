#include "jharm/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jharm/errors.hpp"

namespace jharm {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF everywhere
  if (!out) throw CsvError("csv: cannot open " + path + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw CsvError("csv: write failed for " + path);
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv_tv(const std::string& path,
                  const std::vector<std::pair<double, double>>& rows) {
  auto out = open_out(path);
  out << "t,value\n";
  for (const auto& [t, v] : rows)
    out << format_g17(t) << ',' << format_g17(v) << '\n';
  finish(out, path);
}

void write_csv_spectral(const std::string& path,
                        const std::vector<double>& lambda,
                        const std::vector<std::complex<double>>& values) {
  if (lambda.size() != values.size())
    throw CsvError("csv: lambda/value size mismatch");
  auto out = open_out(path);
  out << "lambda,re,im\n";
  for (std::size_t i = 0; i < lambda.size(); ++i)
    out << format_g17(lambda[i]) << ',' << format_g17(values[i].real()) << ','
        << format_g17(values[i].imag()) << '\n';
  finish(out, path);
}

void write_csv_phi_grid(const std::string& path,
                        const std::vector<double>& lambda,
                        const std::vector<double>& t,
                        const std::vector<std::vector<double>>& phi) {
  if (phi.size() != lambda.size())
    throw CsvError("csv: phi row count does not match lambda grid");
  for (const auto& row : phi)
    if (row.size() != t.size())
      throw CsvError("csv: phi row length does not match t grid");
  auto out = open_out(path);
  out << "lambda,t,phi\n";
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      out << format_g17(lambda[i]) << ',' << format_g17(t[j]) << ','
          << format_g17(phi[i][j]) << '\n';
  finish(out, path);
}

namespace {

// Splits one data line into exactly `n` numeric fields, consuming every
// character; CsvError mentions path:line otherwise.
std::vector<double> split_numeric(const std::string& line, std::size_t n,
                                  const std::string& path, std::size_t lineno) {
  std::vector<double> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t end = (k + 1 == n) ? line.size() : line.find(',', start);
    if (end == std::string::npos)
      throw CsvError("csv: expected " + std::to_string(n) + " fields at " +
                     path + ":" + std::to_string(lineno));
    const std::string field = line.substr(start, end - start);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &pos);
    } catch (const std::exception&) {
      throw CsvError("csv: bad number at " + path + ":" +
                     std::to_string(lineno));
    }
    if (pos != field.size())
      throw CsvError("csv: trailing junk at " + path + ":" +
                     std::to_string(lineno));
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

std::ifstream open_in(const std::string& path, const char* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw CsvError("csv: empty file " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header)
    throw CsvError("csv: expected header \"" + std::string(header) + "\" in " +
                   path);
  return in;
}

}  // namespace

std::vector<std::pair<double, double>> read_csv_tv(const std::string& path) {
  auto in = open_in(path, "t,value");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_numeric(line, 2, path, lineno);
    rows.emplace_back(f[0], f[1]);
  }
  return rows;
}

std::pair<std::vector<double>, std::vector<std::complex<double>>>
read_csv_spectral(const std::string& path) {
  auto in = open_in(path, "lambda,re,im");
  std::vector<double> lambda;
  std::vector<std::complex<double>> values;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_numeric(line, 3, path, lineno);
    lambda.push_back(f[0]);
    values.emplace_back(f[1], f[2]);
  }
  return {std::move(lambda), std::move(values)};
}

}  // namespace jharm
