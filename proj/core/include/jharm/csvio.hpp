#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace jharm {

// CSV writers behind the CLI outputs: fixed headers, LF line endings, 17
// significant digits (doubles round-trip). All throw CsvError on I/O failure.

std::string format_g17(double v);

// header "t,value"
void write_csv_tv(const std::string& path,
                  const std::vector<std::pair<double, double>>& rows);

// header "lambda,re,im"
void write_csv_spectral(const std::string& path,
                        const std::vector<double>& lambda,
                        const std::vector<std::complex<double>>& values);

// header "lambda,t,phi", lambda-major row order
void write_csv_phi_grid(const std::string& path,
                        const std::vector<double>& lambda,
                        const std::vector<double>& t,
                        const std::vector<std::vector<double>>& phi);

// Reads a "t,value" file written by write_csv_tv (or by hand). Validates the
// header and rectangularity; throws CsvError with a line number otherwise.
std::vector<std::pair<double, double>> read_csv_tv(const std::string& path);

// Reads a "lambda,re,im" file written by write_csv_spectral.
std::pair<std::vector<double>, std::vector<std::complex<double>>>
read_csv_spectral(const std::string& path);

}  // namespace jharm
