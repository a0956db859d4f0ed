#ifndef FRACFLUX_CSV_H
#define FRACFLUX_CSV_H

#include <ostream>
#include <string>
#include <vector>

#include "fracflux/solver.h"

namespace fracflux {

/// 17 significant digits, '.' decimal, no grouping; independent of the
/// global locale.
std::string format_number(double v);

/// Long format, header `t,x,u`, rows ordered by time then node.
void write_snapshots_csv(std::ostream& os, const std::vector<Field>& snaps,
                         const Grid& grid);

/// Header `t,x,u_a,u_b,diff` with diff = u_a - u_b. Snapshot lists must
/// have matching times and lengths.
void write_compare_csv(std::ostream& os, const std::vector<Field>& a,
                       const std::vector<Field>& b, const Grid& grid);

}  // namespace fracflux

#endif  // FRACFLUX_CSV_H
