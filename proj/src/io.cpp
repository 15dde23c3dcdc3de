#include "nvq/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nvq {

namespace {

struct Token {
    std::string text;
    int col = 1;  // 1-based start column
};

// Line-oriented reader with token positions for error messages.
class Lines {
public:
    explicit Lines(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines_.push_back(line);
        }
    }

    bool eof() const { return pos_ >= lines_.size(); }
    int line_no() const { return static_cast<int>(pos_) + 1; }

    std::vector<Token> next(const std::string& expected) {
        while (!eof() && tokenize(lines_[pos_]).empty()) ++pos_;  // skip blanks
        if (eof()) throw ParseError(line_no(), 1, expected);
        return tokenize(lines_[pos_++]);
    }

    /// Advance over exactly one blank separator line (for multi blocks).
    void expect_blank() {
        if (eof() || !tokenize(lines_[pos_]).empty())
            throw ParseError(line_no(), 1, "blank separator line");
        ++pos_;
    }

    void skip_trailing_blanks() {
        while (!eof() && tokenize(lines_[pos_]).empty()) ++pos_;
    }

    static std::vector<Token> tokenize(const std::string& line) {
        std::vector<Token> out;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
        }
        return out;
    }

private:
    std::vector<std::string> lines_;
    size_t pos_ = 0;
};

long long parse_int(const Token& t, int line_no, const std::string& what) {
    size_t used = 0;
    try {
        long long v = std::stoll(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("trail");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, t.col, what);
    }
}

std::vector<Token> header(Lines& ls, const std::string& keyword, size_t argc) {
    std::vector<Token> toks = ls.next("'" + keyword + "' header");
    if (toks[0].text != keyword || toks.size() != 1 + argc)
        throw ParseError(ls.line_no() - 1, toks[0].col, "'" + keyword + "' header");
    return toks;
}

Table read_rows(Lines& ls, int size) {
    Table t;
    for (int i = 0; i < size; ++i) {
        std::vector<Token> toks = ls.next("table row");
        int row_line = ls.line_no() - 1;
        if (static_cast<int>(toks.size()) != size)
            throw ParseError(row_line, 1, std::to_string(size) + " entries in row");
        std::vector<int> row;
        for (const auto& tok : toks) {
            long long v = parse_int(tok, row_line, "0-based index");
            if (v < 0 || v >= size) throw ParseError(row_line, tok.col, "index in range");
            row.push_back(static_cast<int>(v));
        }
        t.push_back(std::move(row));
    }
    return t;
}

}  // namespace

Multiset parse_multiset(const std::string& text, int line_no, int col0) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError(line_no, col0, "bracketed multiset like [1,2]");
    std::vector<int> vals;
    std::string body = text.substr(1, text.size() - 2);
    if (!body.empty()) {
        size_t pos = 0;
        while (true) {
            size_t comma = body.find(',', pos);
            std::string item = body.substr(pos, comma - pos);
            try {
                size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size() || v < 0) throw std::invalid_argument("bad");
                vals.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(line_no, col0 + static_cast<int>(pos) + 1, "0-based index");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Multiset::from_list(vals);
}

FiniteGroup read_group(std::istream& in) {
    Lines ls(in);
    auto toks = header(ls, "group", 1);
    int size = static_cast<int>(parse_int(toks[1], ls.line_no() - 1, "group size"));
    if (size < 1) throw ParseError(ls.line_no() - 1, toks[1].col, "positive size");
    Table t = read_rows(ls, size);
    ls.skip_trailing_blanks();
    if (!ls.eof()) throw ParseError(ls.line_no(), 1, "end of file");
    return group_from_table(t);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
    out << "group " << g.size << "\n";
    for (const auto& row : g.table) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
}

Table read_magma(std::istream& in) {
    Lines ls(in);
    auto toks = header(ls, "magma", 1);
    int size = static_cast<int>(parse_int(toks[1], ls.line_no() - 1, "magma size"));
    if (size < 1) throw ParseError(ls.line_no() - 1, toks[1].col, "positive size");
    Table t = read_rows(ls, size);
    ls.skip_trailing_blanks();
    if (!ls.eof()) throw ParseError(ls.line_no(), 1, "end of file");
    return t;
}

void write_magma(std::ostream& out, const Table& t) {
    out << "magma " << t.size() << "\n";
    for (const auto& row : t) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
}

namespace {

NValuedTable read_nv_block(Lines& ls, int size, int n) {
    NValuedTable t;
    t.size = size;
    t.n = n;
    for (int i = 0; i < size; ++i) {
        std::vector<Token> toks = ls.next("n-valued table row");
        int row_line = ls.line_no() - 1;
        if (static_cast<int>(toks.size()) != size)
            throw ParseError(row_line, 1, std::to_string(size) + " cells in row");
        std::vector<Multiset> row;
        for (const auto& tok : toks) {
            Multiset m = parse_multiset(tok.text, row_line, tok.col);
            if (m.total() != n) throw ParseError(row_line, tok.col, "cell of cardinality n");
            for (const auto& [x, c] : m.counts()) {
                (void)c;
                if (x >= size) throw ParseError(row_line, tok.col, "index in range");
            }
            row.push_back(std::move(m));
        }
        t.cells.push_back(std::move(row));
    }
    t.validate();
    return t;
}

}  // namespace

ParsedNValued read_nvalued(std::istream& in) {
    Lines ls(in);
    auto toks = header(ls, "nvalued", 2);
    int hline = ls.line_no() - 1;
    int size = static_cast<int>(parse_int(toks[1], hline, "size"));
    int n = static_cast<int>(parse_int(toks[2], hline, "n"));
    if (size < 1 || n < 1) throw ParseError(hline, toks[1].col, "positive size and n");

    ParsedNValued out;
    out.product = read_nv_block(ls, size, n);
    ls.skip_trailing_blanks();
    if (!ls.eof()) {
        auto bar_toks = ls.next("'bar' line");
        if (bar_toks.size() != 1 || bar_toks[0].text != "bar")
            throw ParseError(ls.line_no() - 1, bar_toks[0].col, "'bar' line");
        out.bar = read_nv_block(ls, size, n);
        ls.skip_trailing_blanks();
        if (!ls.eof()) throw ParseError(ls.line_no(), 1, "end of file");
    }
    return out;
}

void write_nvalued(std::ostream& out, const NValuedTable& product, const NValuedTable* bar) {
    out << "nvalued " << product.size << " " << product.n << "\n";
    for (int i = 0; i < product.size; ++i) {
        for (int j = 0; j < product.size; ++j) out << (j ? " " : "") << product.at(i, j).str();
        out << "\n";
    }
    if (bar) {
        out << "bar\n";
        for (int i = 0; i < bar->size; ++i) {
            for (int j = 0; j < bar->size; ++j) out << (j ? " " : "") << bar->at(i, j).str();
            out << "\n";
        }
    }
}

MultiOpFamily read_multi(std::istream& in) {
    Lines ls(in);
    auto toks = header(ls, "multi", 3);
    int hline = ls.line_no() - 1;
    int size = static_cast<int>(parse_int(toks[1], hline, "size"));
    int n = static_cast<int>(parse_int(toks[2], hline, "operation count"));
    if (size < 1 || n < 1) throw ParseError(hline, toks[1].col, "positive size and count");

    MultiOpFamily fam;
    fam.size = size;
    if (toks[3].text == "group")
        fam.flavor = MultiOpFamily::Flavor::group;
    else if (toks[3].text == "rack")
        fam.flavor = MultiOpFamily::Flavor::rack;
    else if (toks[3].text == "quandle")
        fam.flavor = MultiOpFamily::Flavor::quandle;
    else
        throw ParseError(hline, toks[3].col, "flavor group|rack|quandle");

    for (int op = 0; op < n; ++op) {
        if (op > 0) ls.expect_blank();
        fam.ops.push_back(read_rows(ls, size));
    }
    ls.skip_trailing_blanks();
    if (!ls.eof()) throw ParseError(ls.line_no(), 1, "end of file");
    return fam;
}

void write_multi(std::ostream& out, const MultiOpFamily& fam) {
    const char* flavor = fam.flavor == MultiOpFamily::Flavor::group    ? "group"
                         : fam.flavor == MultiOpFamily::Flavor::rack  ? "rack"
                                                                      : "quandle";
    out << "multi " << fam.size << " " << fam.n() << " " << flavor << "\n";
    for (int op = 0; op < fam.n(); ++op) {
        if (op > 0) out << "\n";
        for (const auto& row : fam.ops[op]) {
            for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << "\n";
        }
    }
}

BraidMap read_braid(std::istream& in) {
    Lines ls(in);
    auto toks = header(ls, "braid", 1);
    int size = static_cast<int>(parse_int(toks[1], ls.line_no() - 1, "size"));
    if (size < 1) throw ParseError(ls.line_no() - 1, toks[1].col, "positive size");

    std::vector<std::pair<int, int>> table(static_cast<size_t>(size) * size, {-1, -1});
    for (int i = 0; i < size * size; ++i) {
        auto row = ls.next("braid rule line 'x y -> x' y''");
        int row_line = ls.line_no() - 1;
        if (row.size() != 5 || row[2].text != "->")
            throw ParseError(row_line, 1, "line of shape 'x y -> x' y''");
        int vals[4];
        int vi = 0;
        for (int ti : {0, 1, 3, 4}) {
            long long v = parse_int(row[ti], row_line, "0-based index");
            if (v < 0 || v >= size) throw ParseError(row_line, row[ti].col, "index in range");
            vals[vi++] = static_cast<int>(v);
        }
        size_t idx = static_cast<size_t>(vals[0]) * size + vals[1];
        if (table[idx].first >= 0) throw ParseError(row_line, row[0].col, "unseen pair (x,y)");
        table[idx] = {vals[2], vals[3]};
    }
    ls.skip_trailing_blanks();
    if (!ls.eof()) throw ParseError(ls.line_no(), 1, "end of file");
    return braid_from_table(size, std::move(table));
}

void write_braid(std::ostream& out, const BraidMap& r) {
    if (r.carrier != BraidMap::Carrier::finite)
        throw Error("KindMismatch", "only finite braid maps serialize");
    out << "braid " << r.size << "\n";
    for (int x = 0; x < r.size; ++x)
        for (int y = 0; y < r.size; ++y) {
            auto [a, b] = r.apply(x, y);
            out << x << " " << y << " -> " << a << " " << b << "\n";
        }
}

StructureConstantSpace read_space(std::istream& in) {
    Lines ls(in);
    auto toks = header(ls, "space", 1);
    int dim = static_cast<int>(parse_int(toks[1], ls.line_no() - 1, "dimension"));
    if (dim < 1) throw ParseError(ls.line_no() - 1, toks[1].col, "positive dimension");

    StructureConstantSpace s;
    s.dim = dim;
    s.mult = RationalTensor::zeros({dim, dim, dim});
    s.unit_vec.assign(dim, Rational(0));

    auto mult_toks = ls.next("'mult' block");
    if (mult_toks.size() != 1 || mult_toks[0].text != "mult")
        throw ParseError(ls.line_no() - 1, mult_toks[0].col, "'mult' line");

    auto parse_entry = [&](const std::vector<Token>& row, int row_line, RationalTensor& dest) {
        if (row.size() != 4) throw ParseError(row_line, 1, "line 'i j k num/den'");
        int idx[3];
        for (int i = 0; i < 3; ++i) {
            long long v = parse_int(row[i], row_line, "0-based index");
            if (v < 0 || v >= dim) throw ParseError(row_line, row[i].col, "index in range");
            idx[i] = static_cast<int>(v);
        }
        size_t slash = row[3].text.find('/');
        if (slash == std::string::npos) throw ParseError(row_line, row[3].col, "num/den");
        try {
            long long num = std::stoll(row[3].text.substr(0, slash));
            long long den = std::stoll(row[3].text.substr(slash + 1));
            dest.at3(idx[0], idx[1], idx[2]) = Rational(num, den);
        } catch (const Error&) {
            throw ParseError(row_line, row[3].col, "nonzero denominator");
        } catch (const std::exception&) {
            throw ParseError(row_line, row[3].col, "num/den");
        }
    };

    bool in_comult = false;
    RationalTensor comult = RationalTensor::zeros({dim, dim, dim});
    bool saw_comult = false;
    while (true) {
        ls.skip_trailing_blanks();
        if (ls.eof()) break;
        auto row = ls.next("entry line or 'comult'");
        int row_line = ls.line_no() - 1;
        if (row.size() == 1 && row[0].text == "comult") {
            if (saw_comult) throw ParseError(row_line, row[0].col, "single 'comult' block");
            in_comult = true;
            saw_comult = true;
            continue;
        }
        parse_entry(row, row_line, in_comult ? comult : s.mult);
    }
    if (saw_comult) s.comult = std::move(comult);
    return s;
}

void write_space(std::ostream& out, const StructureConstantSpace& s) {
    out << "space " << s.dim << "\n";
    out << "mult\n";
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            for (int k = 0; k < s.dim; ++k) {
                const Rational& c = s.mult.at3(i, j, k);
                if (!c.is_zero()) out << i << " " << j << " " << k << " " << c.str() << "\n";
            }
    if (s.comult) {
        out << "comult\n";
        for (int k = 0; k < s.dim; ++k)
            for (int i = 0; i < s.dim; ++i)
                for (int j = 0; j < s.dim; ++j) {
                    const Rational& c = s.comult->at3(k, i, j);
                    if (!c.is_zero()) out << k << " " << i << " " << j << " " << c.str() << "\n";
                }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileError", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace nvq
