#pragma once

#include <filesystem>
#include <iosfwd>

#include "qdom/winding/domain.hpp"

namespace qdom {

/// One polyline per geometric component of the trace (y axis pointing up),
/// viewBox = bounding box inflated by 10%, coordinates with 6 decimals.
/// With a mask, the winding-1 cells are drawn underneath as row runs.
/// Throws NoData for an empty trace.
void emit_svg(const CurveTrace& trace, const DomainReport* mask, std::ostream& os);
void emit_svg(const CurveTrace& trace, const DomainReport* mask, const std::filesystem::path& path);

}  // namespace qdom
