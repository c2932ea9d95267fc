#include "randurv/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "randurv/error.hpp"

namespace randurv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Matrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("read_matrix: cannot open '" + path + "'");
    }
    long long rows = 0;
    long long cols = 0;
    if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
        throw IoError("read_matrix: malformed header in '" + path + "'");
    }
    Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    double* p = m.data();
    const std::size_t total = m.rows() * m.cols();
    for (std::size_t i = 0; i < total; ++i) {
        if (!(in >> p[i])) {
            std::ostringstream msg;
            msg << "read_matrix: expected " << total << " entries in '" << path
                << "', failed at entry " << i;
            throw IoError(msg.str());
        }
    }
    return m;
}

void write_matrix(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("write_matrix: cannot open '" + path + "' for writing");
    }
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(row[j]);
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write_matrix: write failed for '" + path + "'");
    }
}

}  // namespace randurv
