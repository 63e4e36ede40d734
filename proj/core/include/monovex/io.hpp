#pragma once

#include <string>
#include <string_view>

#include "monovex/geometry.hpp"
#include "monovex/monotone_path.hpp"

namespace monovex {

/// Canonical text of a complex: a JSON document
/// {"dim": n, "boxes": [[{"lo", "hi", "lo_closed", "hi_closed"}, ...], ...]}
/// with integer endpoints as JSON integers and the rest as "m/2^e" strings.
/// parse_complex(dump_complex(c)) == c for every complex.
std::string dump_complex(const SpanComplex& complex);
SpanComplex parse_complex(std::string_view text);

/// {"waypoints": [["m/2^e", ...], ...], "signs": [-1|0|1, ...]}.
std::string dump_path(const MonotonePath& path);
MonotonePath parse_path(std::string_view text);

/// Comma separated coordinates, e.g. "1/2,0,3" or "1/2^1,0,3".
Point parse_point(std::string_view text);

}  // namespace monovex
