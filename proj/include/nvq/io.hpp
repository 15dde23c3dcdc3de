#pragma once

#include "nvq/braid.hpp"
#include "nvq/group.hpp"
#include "nvq/nvalued.hpp"
#include "nvq/report.hpp"
#include "nvq/tensor.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace nvq {

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& expected)
        : Error("ParseError", "line " + std::to_string(line) + ", col " + std::to_string(col) +
                                  ": expected " + expected),
          line_(line),
          col_(col),
          expected_(expected) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int col_;
    std::string expected_;
};

struct ParsedNValued {
    NValuedTable product;
    std::optional<NValuedTable> bar;
};

/// "group <size>" header, then <size> rows of <size> 0-based indices.
FiniteGroup read_group(std::istream& in);
void write_group(std::ostream& out, const FiniteGroup& g);

/// "magma <size>" header, then the rows. No axiom is implied by the header.
Table read_magma(std::istream& in);
void write_magma(std::ostream& out, const Table& t);

/// "nvalued <size> <n>", rows of bracketed cells like [1,2]; an optional
/// "bar" line introduces a second block in the same shape.
ParsedNValued read_nvalued(std::istream& in);
void write_nvalued(std::ostream& out, const NValuedTable& product,
                   const NValuedTable* bar = nullptr);

/// "multi <size> <n> <flavor>", then n row-blocks separated by blank lines.
MultiOpFamily read_multi(std::istream& in);
void write_multi(std::ostream& out, const MultiOpFamily& fam);

/// "braid <size>", then size^2 lines "x y -> x' y'" in row-major (x,y) order.
BraidMap read_braid(std::istream& in);
void write_braid(std::ostream& out, const BraidMap& r);

/// "space <dim>"; "mult" block of "i j k num/den" lines; optional "comult"
/// block of "k i j num/den" lines. Omitted entries are zero.
StructureConstantSpace read_space(std::istream& in);
void write_space(std::ostream& out, const StructureConstantSpace& s);

Multiset parse_multiset(const std::string& text, int line_no = 1, int col0 = 1);

std::string read_file(const std::string& path);

}  // namespace nvq
