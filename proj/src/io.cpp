#include "covdepth/io.hpp"

#include <fstream>
#include <sstream>

#include "covdepth/errors.hpp"

namespace covdepth {
namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(long line_no, const std::string& what) {
    throw bad_input("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

GenMatrix parse_matrix(std::istream& in) {
    std::string line;
    long line_no = 0;
    long q = -1;
    long header_line = 0;
    std::vector<std::vector<long>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (q < 0) {
            if (s.rfind("q=", 0) != 0) fail(line_no, "expected the header q=<order>");
            try {
                size_t used = 0;
                q = std::stol(s.substr(2), &used);
                if (used != s.size() - 2) fail(line_no, "trailing text after the field order");
            } catch (const std::logic_error&) {
                fail(line_no, "unreadable field order");
            }
            header_line = line_no;
            continue;
        }
        std::istringstream row_in(s);
        std::vector<long> row;
        long v;
        while (row_in >> v) {
            if (v < 0 || v >= q) fail(line_no, "element code " + std::to_string(v) + " outside 0.." + std::to_string(q - 1));
            row.push_back(v);
        }
        if (!row_in.eof()) fail(line_no, "unreadable matrix entry");
        if (!rows.empty() && row.size() != rows.front().size())
            fail(line_no, "expected " + std::to_string(rows.front().size()) + " entries, found " +
                              std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (q < 0) fail(line_no + 1, "missing the header q=<order>");
    if (rows.empty()) fail(header_line + 1, "no matrix rows after the header");

    auto field = Field::get(q);  // throws NotPrimePower for a bad order
    int k = static_cast<int>(rows.size());
    int n = static_cast<int>(rows.front().size());
    std::vector<long> entries;
    entries.reserve(static_cast<size_t>(k) * n);
    for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
    return GenMatrix::relaxed(field, k, n, entries);
}

GenMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bad_input("cannot open matrix file " + path);
    return parse_matrix(in);
}

std::string format_matrix(const GenMatrix& g) {
    std::ostringstream out;
    out << "q=" << g.field()->order() << "\n";
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (c > 0) out << ' ';
            out << g.entry(r, c);
        }
        out << "\n";
    }
    return out.str();
}

RationalFields rational_fields(const Rat& v) {
    RationalFields f;
    f.num = v.get_num().get_str();
    f.den = v.get_den().get_str();
    f.decimal = decimal_string(v);
    return f;
}

}  // namespace covdepth
