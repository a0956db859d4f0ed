#include "fracflux/csv.h"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace fracflux {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting");
  return std::string(buf, res.ptr);
}

void write_snapshots_csv(std::ostream& os, const std::vector<Field>& snaps,
                         const Grid& grid) {
  os << "t,x,u\n";
  for (const auto& f : snaps) {
    const std::string t = format_number(f.t);
    for (std::size_t i = 0; i < f.u.size(); ++i) {
      os << t << ',' << format_number(grid.x(i)) << ','
         << format_number(f.u[i]) << '\n';
    }
  }
}

void write_compare_csv(std::ostream& os, const std::vector<Field>& a,
                       const std::vector<Field>& b, const Grid& grid) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare: snapshot counts differ");
  }
  os << "t,x,u_a,u_b,diff\n";
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].step != b[s].step || a[s].u.size() != b[s].u.size()) {
      throw std::invalid_argument("compare: snapshot layouts differ");
    }
    const std::string t = format_number(a[s].t);
    for (std::size_t i = 0; i < a[s].u.size(); ++i) {
      os << t << ',' << format_number(grid.x(i)) << ','
         << format_number(a[s].u[i]) << ',' << format_number(b[s].u[i]) << ','
         << format_number(a[s].u[i] - b[s].u[i]) << '\n';
    }
  }
}

}  // namespace fracflux
