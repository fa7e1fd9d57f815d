#include "dmopt/trace.hpp"

#include <cstdio>
#include <ostream>

namespace dmopt {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const Trace& trace) {
  os << "k,alpha,disagreement,sum_sq_dist_to_opt,f_of_y,min_w_entry\n";
  for (const auto& rec : trace.records) {
    os << rec.k << ',' << format_g17(rec.alpha) << ','
       << format_g17(rec.disagreement) << ','
       << format_g17(rec.sum_sq_dist_to_opt) << ',' << format_g17(rec.f_of_y)
       << ',' << format_g17(rec.min_w_entry) << '\n';
  }
}

}  // namespace dmopt
