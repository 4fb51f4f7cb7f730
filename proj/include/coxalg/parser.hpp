#ifndef COXALG_PARSER_HPP
#define COXALG_PARSER_HPP

#include <map>

#include "coxalg/matrix.hpp"
#include "coxalg/poly.hpp"

namespace coxalg {

class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line), col(col) {}
    int line, col;
};

// expression grammar shared by all file formats: rational literals, `z` (the
// primitive N-th root), ring variables by name, + - * / ^ and parentheses
CycNum parse_cyc_expression(const std::string& text, const CyclotomicField& field, int line = 1);
Poly parse_poly_expression(const std::string& text, const RingPtr& ring, int line = 1);

struct GroupFile {
    int cyclotomic_order = 12;
    int dim = 0;
    std::vector<FieldMatrix> generators;
    std::map<std::string, std::string> overrides;  // unrecognized header lines
};

// line-oriented: `cyclotomic_order: N`, `dim: n`, then `generator` blocks of
// n comma-separated expression rows
GroupFile parse_group_file(const std::string& path);
GroupFile parse_group_text(const std::string& text);
std::string unparse_group_file(const GroupFile& gf);

struct PolyFile {
    int cyclotomic_order = 12;
    std::vector<std::string> vars;
    std::vector<Poly> polys;
    RingPtr ring;
};

// header `cyclotomic_order: N` (optional) and `vars: x1, x2, ...`, then one
// polynomial per line
PolyFile parse_poly_file(const std::string& path);
PolyFile parse_poly_text(const std::string& text);
std::string unparse_poly_file(const PolyFile& pf);

}  // namespace coxalg

#endif
