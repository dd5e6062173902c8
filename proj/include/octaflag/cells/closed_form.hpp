#pragma once

#include "octaflag/cells/cell.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/rot/skew.hpp"

namespace octaflag {

enum class Axis { i, j, k };

char axis_name(Axis a);
/// Throws DomainError for anything but 'i', 'j', 'k'.
Axis parse_axis(char c);

/// Sheet of a flag 2-cell swept by exp(s X) T(R) with X the logarithm of
/// B(q w_u^-1), q = cos(t pi/4) - u sin(t pi/4). It is the cone over the
/// inverted arc from w_u to tau_v = w_u tau_u. Supported pairs are (i,j),
/// (j,k) and (k,i); the last two are the first conjugated by w_0.
///
/// Generator at s = 1 written directly in t (no quaternions):
/// for (i,j), with c = cos(t pi/4), d = sin(t pi/4), r = 1 - sin(t pi/2),
///   2 arccos((c+d)/2) / sqrt(3 - sin(t pi/2)) *
///   [[0, sqrt r, -c-d], [-sqrt r, 0, d-c], [c+d, c-d, 0]].
/// Throws DomainError for t outside (0, 1) or an unsupported pair.
SkewMatrix closed_form_generator(Axis u, Axis v, double t);

/// exp(s closed_form_generator(u, v, t)) T(R); s must lie in (0, 1).
FlagPoint param_cell_closed_form(Axis u, Axis v, double s, double t);

/// The same point through the geodesic images: gamma_{q w_u^-1}(s).
FlagPoint param_cell_gamma_form(Axis u, Axis v, double s, double t);

/// The 2-cell representative containing the sheet of (u, v).
CellId closed_form_cell(Axis u, Axis v);

}  // namespace octaflag
