#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gex/element.hpp"
#include "gex/freepoly.hpp"
#include "gex/grading.hpp"

namespace gex {

// Polynomial expressions.  Grammar (whitespace insensitive between tokens):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (['*'] factor)*
//   factor   := primary ('^' nat)*
//   primary  := number | variable | macro | '(' expr ')' | '[' expr (',' expr)+ ']'
//   number   := nat ['/' nat]
//   variable := letter nat '@' ['-'] nat          e.g. x1@3, y2@0, z4@-1
// Brackets are left-normed commutators.  Macros (argument groups split by ';'):
//   s_n(n; d1..dn)      standard polynomial on x1@d1..xn@dn
//   t_2n(n; d1..d2n)    [z1,z2][z3,z4]...[z_{2n-1},z_{2n}]
//   g_m(m; d1..dm)      the g_m expansion, 2^{m-1} summands
//   C_D(k; l1..lk)      one ascending monomial with l_t variables of degree t
//   P_k(k; item; ...)   generator shapes of the k-zeros grading:
//                         (k; 1; d)        variable of negative degree d
//                         (k; 2; a,b,c)    triple commutator
//                         (k; 3; u..; d)   even chain, k+1 entries, closed by
//                                          a bracket into x@d (k even)
//                         (k; 4; u..)      even chain of k+1 entries (k odd)
//                         (k; 5; z..; u..) g_{k-l+2}(z..)[u1,u2]...   (l even)
//                         (k; 6; z..; u..) [g_{k-l+2}(z..),u1][u2,u3]... (l odd)
//                         (k; 7; z..; u..) g_{k-l+2}(z..)[z_extra,u1]... (l odd)
// A letter+index pair must keep a single degree throughout the expression
// ("conflicting degree for x1" otherwise).  parse_poly inverts FreePoly::str()
// on canonical forms.
FreePoly parse_poly(Field f, const std::string& text);

// Exterior algebra values: signed sums of [coeff *] e<i>e<j>... terms,
// e.g. "3/2*e1e2 - e3 + 1".  Inverts Element::str().
Element parse_element(Field f, std::uint32_t rank, const std::string& text);

// "(d,c);(d,c);..." with capacity c a positive integer or "inf".
GradingSpec parse_blocks(const std::string& text);

// Flat "key = value" lines; '#' starts a comment; blank lines skipped;
// repeated keys keep the last value.
std::map<std::string, std::string> parse_config(const std::string& text);

}  // namespace gex
