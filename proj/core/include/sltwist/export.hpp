#pragma once

#include <iosfwd>
#include <string>

#include "sltwist/periods.hpp"

namespace sltwist {

enum class ExportFormat { csv, json, obj };

ExportFormat parse_format(const std::string& s);  // throws ArgumentError

// Round-trip text for a double ("%.17g").
std::string fmt17(double v);

// Columns t, re_w1, im_w1, re_w2, im_w2 over samples points of [t0, t1].
void write_w_csv(std::ostream& os, const TwistedSolution& sol, double t0, double t1, int samples);
void write_w_json(std::ostream& os, const TwistedSolution& sol, double t0, double t1, int samples);

std::string period_data_json(const PeriodData& d);
PeriodData period_data_from_json(const std::string& s);

struct ObjStats {
    std::size_t vertices;
    std::size_t faces;
};

// (1,2) surface (w1(t), w2(t) cos phi, w2(t) sin phi) on an nt x nphi grid, projected to R^3 by
//   (x, y, z) = (Re z2 + Im z1 / 2, Re z3 + Im z1 / 2, Re z1 + (Im z2 + Im z3) / 2).
// Quad faces, 1-based, closing up in phi.
ObjStats write_obj(std::ostream& os, const TwistedSolution& sol, double t0, double t1, int nt, int nphi);

// Checks vertex/face counts and index ranges of an OBJ stream.
bool validate_obj(std::istream& is, ObjStats& stats);

}  // namespace sltwist
