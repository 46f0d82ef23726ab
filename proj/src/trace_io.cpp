#include "gf2m/trace_io.hpp"

#include <sstream>

namespace gf2m {

std::string trace_to_text(std::span<const TraceRecord> trace) {
  std::ostringstream os;
  for (const TraceRecord& r : trace)
    os << r.cycle << ' ' << (r.b_bit ? 1 : 0) << ' ' << r.after_g.to_hex()
       << ' ' << r.after_h.to_hex() << '\n';
  return os.str();
}

std::string trace_to_csv(std::span<const TraceRecord> trace) {
  std::ostringstream os;
  os << "cycle,b_bit,after_G,after_H\n";
  for (const TraceRecord& r : trace)
    os << r.cycle << ',' << (r.b_bit ? 1 : 0) << ',' << r.after_g.to_hex()
       << ',' << r.after_h.to_hex() << '\n';
  return os.str();
}

nlohmann::ordered_json trace_to_json(std::span<const TraceRecord> trace) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TraceRecord& r : trace)
    arr.push_back(nlohmann::ordered_json{{"cycle", r.cycle},
                                         {"b_bit", r.b_bit ? 1 : 0},
                                         {"after_G", r.after_g.to_hex()},
                                         {"after_H", r.after_h.to_hex()}});
  return arr;
}

} // namespace gf2m
