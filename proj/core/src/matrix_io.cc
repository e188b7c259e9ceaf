// Copyright 2026 The mmcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmcodes/matrix_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mmcodes/errors.h"

namespace mmcodes {

namespace {

// Reads unsigned integers from text, tracking the byte offset of each.
class IntReader {
  public:
    explicit IntReader(std::string_view text) : text_(text) {}

    uint64_t next(const char *what) {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError(std::string("unexpected end of input while reading ") + what, pos_);
        }
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc()) {
            throw ParseError(std::string("expected an unsigned integer for ") + what, pos_);
        }
        pos_ = static_cast<size_t>(ptr - text_.data());
        if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError(std::string("unexpected character after ") + what, pos_);
        }
        return value;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    size_t pos() const { return pos_; }

  private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
};

// 1-indexed entries padded with zeros to `width` (at least one field per line).
std::string join_one_indexed(const std::vector<size_t> &items, size_t width) {
    std::string out;
    for (size_t i = 0; i < std::max<size_t>({width, items.size(), 1}); i++) {
        if (i) {
            out += ' ';
        }
        out += i < items.size() ? std::to_string(items[i] + 1) : "0";
    }
    return out;
}

}  // namespace

std::string to_alist(const BitMatrix &m) {
    auto cols = m.column_supports();
    std::vector<std::vector<size_t>> rows(m.rows());
    size_t max_col = 0;
    size_t max_row = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        rows[r] = m.row_support(r);
        max_row = std::max(max_row, rows[r].size());
    }
    for (const auto &c : cols) {
        max_col = std::max(max_col, c.size());
    }
    std::ostringstream out;
    out << m.cols() << ' ' << m.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (size_t c = 0; c < cols.size(); c++) {
        out << (c ? " " : "") << cols[c].size();
    }
    out << '\n';
    for (size_t r = 0; r < rows.size(); r++) {
        out << (r ? " " : "") << rows[r].size();
    }
    out << '\n';
    for (const auto &c : cols) {
        out << join_one_indexed(c, max_col) << '\n';
    }
    for (const auto &r : rows) {
        out << join_one_indexed(r, max_row) << '\n';
    }
    return out.str();
}

BitMatrix from_alist(std::string_view text) {
    // Every list sits on its own line; blank lines are ignored.
    struct Line {
        std::vector<uint64_t> values;
        size_t offset;
    };
    std::vector<Line> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = std::min(text.find('\n', start), text.size());
        std::string_view raw = text.substr(start, end - start);
        if (raw.find_first_not_of(" \t\r") != std::string_view::npos) {
            Line line{{}, start};
            IntReader in(raw);
            while (!in.at_end()) {
                try {
                    line.values.push_back(in.next("alist entry"));
                } catch (const ParseError &) {
                    throw ParseError("malformed alist entry", start + in.pos());
                }
            }
            lines.push_back(std::move(line));
        }
        start = end + 1;
    }
    size_t cursor = 0;
    auto take = [&](const char *what) -> const Line & {
        if (cursor == lines.size()) {
            throw ParseError(std::string("alist ends before the ") + what, text.size());
        }
        return lines[cursor++];
    };
    auto expect_size = [](const Line &line, size_t n, const char *what) {
        if (line.values.size() != n) {
            throw ParseError(std::string(what) + " line has " + std::to_string(line.values.size()) +
                                 " values, expected " + std::to_string(n),
                             line.offset);
        }
    };

    const Line &dims = take("dimensions");
    expect_size(dims, 2, "dimension");
    size_t n_cols = dims.values[0];
    size_t n_rows = dims.values[1];
    const Line &maxes = take("maximum weights");
    expect_size(maxes, 2, "maximum weight");
    const Line &col_counts = take("column weights");
    expect_size(col_counts, n_cols, "column weight");
    const Line &row_counts = take("row weights");
    expect_size(row_counts, n_rows, "row weight");

    // Zero entries are padding.
    auto indices = [&](const Line &line, uint64_t expected, size_t bound, const char *what) {
        std::vector<size_t> out;
        for (uint64_t v : line.values) {
            if (v == 0) {
                continue;
            }
            if (v > bound) {
                throw ParseError(std::string(what) + " index " + std::to_string(v) + " out of range", line.offset);
            }
            out.push_back(static_cast<size_t>(v - 1));
        }
        if (out.size() != expected) {
            throw ParseError(std::string(what) + " list has " + std::to_string(out.size()) + " entries, expected " +
                                 std::to_string(expected),
                             line.offset);
        }
        return out;
    };

    BitMatrix m(n_rows, n_cols);
    for (size_t c = 0; c < n_cols; c++) {
        if (col_counts.values[c] > maxes.values[0]) {
            throw ParseError("column weight exceeds the declared maximum", col_counts.offset);
        }
        for (size_t r : indices(take("column lists"), col_counts.values[c], n_rows, "row")) {
            m.set(r, c);
        }
    }
    for (size_t r = 0; r < n_rows; r++) {
        if (row_counts.values[r] > maxes.values[1]) {
            throw ParseError("row weight exceeds the declared maximum", row_counts.offset);
        }
        const Line &line = take("row lists");
        auto list = indices(line, row_counts.values[r], n_cols, "column");
        std::sort(list.begin(), list.end());
        if (list != m.row_support(r)) {
            throw ParseError("row " + std::to_string(r + 1) + " disagrees with the column lists", line.offset);
        }
    }
    if (cursor != lines.size()) {
        throw ParseError("trailing content after the row lists", lines[cursor].offset);
    }
    return m;
}

std::string to_mtx(const BitMatrix &m) {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << m.weight() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row_support(r)) {
            out << r + 1 << ' ' << c + 1 << '\n';
        }
    }
    return out.str();
}

BitMatrix from_mtx(std::string_view text) {
    size_t eol = text.find('\n');
    std::string_view banner = text.substr(0, eol);
    while (!banner.empty() && (banner.back() == '\r' || banner.back() == ' ')) {
        banner.remove_suffix(1);
    }
    std::istringstream words{std::string(banner)};
    std::string tag, object, format, field, symmetry;
    words >> tag >> object >> format >> field >> symmetry;
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    if (tag != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate") {
        throw ParseError("expected a '%%MatrixMarket matrix coordinate' banner", 0);
    }
    bool pattern = lower(field) == "pattern";
    if (!pattern && lower(field) != "integer") {
        throw ParseError("unsupported Matrix Market field '" + field + "'", 0);
    }
    if (lower(symmetry) != "general") {
        throw ParseError("unsupported Matrix Market symmetry '" + symmetry + "'", 0);
    }

    // Blank out comment lines so byte offsets stay meaningful.
    std::string body(text);
    size_t pos = eol == std::string_view::npos ? body.size() : eol + 1;
    std::fill(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(pos), ' ');
    while (pos < body.size()) {
        size_t end = body.find('\n', pos);
        if (end == std::string::npos) {
            end = body.size();
        }
        if (body[pos] == '%') {
            std::fill(body.begin() + static_cast<std::ptrdiff_t>(pos), body.begin() + static_cast<std::ptrdiff_t>(end),
                      ' ');
        }
        pos = end + 1;
    }
    IntReader in(body);
    size_t rows = in.next("row count");
    size_t cols = in.next("column count");
    size_t nnz = in.next("entry count");
    BitMatrix m(rows, cols);
    for (size_t i = 0; i < nnz; i++) {
        size_t r = in.next("row index");
        size_t c = in.next("column index");
        if (r == 0 || r > rows || c == 0 || c > cols) {
            throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range", in.pos());
        }
        bool value = true;
        if (!pattern) {
            value = in.next("entry value") % 2 == 1;
        }
        if (value) {
            m.set(r - 1, c - 1);
        }
    }
    if (!in.at_end()) {
        throw ParseError("more entries than declared", in.pos());
    }
    return m;
}

void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw Error("failed writing '" + path + "'");
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace mmcodes
