#include "flexshift/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace flexshift {

namespace {

struct MmHeader {
  bool coordinate = true;
  bool complex_field = false;
  bool pattern = false;
  enum class Symmetry { general, symmetric, hermitian, skew } symmetry =
      Symmetry::general;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

MmHeader parse_header(const std::string& line, const std::string& path) {
  std::istringstream ss(line);
  std::string banner, object, format, field, symmetry;
  ss >> banner >> object >> format >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix") {
    throw std::runtime_error(path + ": not a Matrix Market file");
  }
  MmHeader h;
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format == "coordinate") {
    h.coordinate = true;
  } else if (format == "array") {
    h.coordinate = false;
  } else {
    throw std::runtime_error(path + ": unsupported format '" + format + "'");
  }
  if (field == "complex") {
    h.complex_field = true;
  } else if (field == "real" || field == "integer") {
    h.complex_field = false;
  } else if (field == "pattern") {
    h.pattern = true;
  } else {
    throw std::runtime_error(path + ": unsupported field '" + field + "'");
  }
  if (symmetry == "general") {
    h.symmetry = MmHeader::Symmetry::general;
  } else if (symmetry == "symmetric") {
    h.symmetry = MmHeader::Symmetry::symmetric;
  } else if (symmetry == "hermitian") {
    h.symmetry = MmHeader::Symmetry::hermitian;
  } else if (symmetry == "skew-symmetric") {
    h.symmetry = MmHeader::Symmetry::skew;
  } else {
    throw std::runtime_error(path + ": unsupported symmetry '" + symmetry + "'");
  }
  return h;
}

std::string next_data_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '%') continue;
    return line;
  }
  return {};
}

}  // namespace

SparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header_line;
  std::getline(in, header_line);
  const MmHeader h = parse_header(header_line, path);
  if (!h.coordinate) {
    throw std::runtime_error(path + ": expected coordinate format for matrices");
  }

  std::istringstream sizes(next_data_line(in));
  Index nrows = 0, ncols = 0;
  long long nnz = 0;
  sizes >> nrows >> ncols >> nnz;
  if (!sizes) throw std::runtime_error(path + ": bad size line");

  std::vector<SparseMatrix::Triplet> t;
  t.reserve(static_cast<size_t>(nnz));
  for (long long e = 0; e < nnz; ++e) {
    std::istringstream ls(next_data_line(in));
    Index i = 0, j = 0;
    double re = 1.0, im = 0.0;
    ls >> i >> j;
    if (!h.pattern) {
      ls >> re;
      if (h.complex_field) ls >> im;
    }
    if (!ls) throw std::runtime_error(path + ": bad entry line");
    const Complex v(re, im);
    t.push_back({i - 1, j - 1, v});
    if (i != j) {
      switch (h.symmetry) {
        case MmHeader::Symmetry::symmetric:
          t.push_back({j - 1, i - 1, v});
          break;
        case MmHeader::Symmetry::hermitian:
          t.push_back({j - 1, i - 1, std::conj(v)});
          break;
        case MmHeader::Symmetry::skew:
          t.push_back({j - 1, i - 1, -v});
          break;
        case MmHeader::Symmetry::general:
          break;
      }
    }
  }
  return SparseMatrix::from_triplets(nrows, ncols, std::move(t));
}

void write_matrix_market(const SparseMatrix& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << A.rows() << " " << A.cols() << " " << A.nonzeros() << "\n";
  out.precision(17);
  for (Index i = 0; i < A.rows(); ++i) {
    auto cols = A.row_cols(i);
    auto vals = A.row_values(i);
    for (size_t p = 0; p < cols.size(); ++p) {
      out << (i + 1) << " " << (cols[p] + 1) << " " << vals[p].real() << " "
          << vals[p].imag() << "\n";
    }
  }
}

Vector read_vector_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header_line;
  std::getline(in, header_line);
  const MmHeader h = parse_header(header_line, path);
  if (h.coordinate) {
    throw std::runtime_error(path + ": expected array format for vectors");
  }

  std::istringstream sizes(next_data_line(in));
  Index nrows = 0, ncols = 0;
  sizes >> nrows >> ncols;
  if (!sizes || ncols != 1) {
    throw std::runtime_error(path + ": expected a single-column array");
  }
  Vector v(nrows);
  for (Index i = 0; i < nrows; ++i) {
    std::istringstream ls(next_data_line(in));
    double re = 0.0, im = 0.0;
    ls >> re;
    if (h.complex_field) ls >> im;
    if (!ls) throw std::runtime_error(path + ": bad array line");
    v[i] = Complex(re, im);
  }
  return v;
}

void write_vector_market(const Vector& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "%%MatrixMarket matrix array complex general\n";
  out << v.size() << " 1\n";
  out.precision(17);
  for (Index i = 0; i < v.size(); ++i) {
    out << v[i].real() << " " << v[i].imag() << "\n";
  }
}

}  // namespace flexshift
