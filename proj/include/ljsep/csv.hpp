#ifndef LJSEP_CSV_HPP
#define LJSEP_CSV_HPP

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ljsep {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Shortest decimal form that round-trips, so reruns are byte-identical.
std::string format_number(double v);

using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

/// "# ljsep <version> <kind> key=value ... columns=a,b,c"
std::string csv_header(std::string_view kind, const std::vector<std::string>& columns, const CsvMetadata& meta = {});

namespace detail {
inline void put_field(std::ostream& os, double v) { os << format_number(v); }
inline void put_field(std::ostream& os, std::string_view v) { os << v; }
inline void put_field(std::ostream& os, const char* v) { os << v; }
inline void put_field(std::ostream& os, const std::string& v) { os << v; }
template <std::integral T>
void put_field(std::ostream& os, T v) {
  os << +v;
}
}  // namespace detail

template <typename First, typename... Rest>
void write_row(std::ostream& os, const First& first, const Rest&... rest) {
  detail::put_field(os, first);
  ((os << ',', detail::put_field(os, rest)), ...);
  os << '\n';
}

}  // namespace ljsep

#endif  // LJSEP_CSV_HPP
