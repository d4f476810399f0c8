#ifndef DPS_REPORT_H
#define DPS_REPORT_H

#include <iosfwd>
#include <string>
#include <string_view>

#include "dps/engine.h"

namespace dps {

inline constexpr std::string_view kToolVersion = "dps 1.0.0";

// round,colony,dst,hop_length,status -- one row per dispatched ant;
// hop_length is blank unless the ant arrived.
void WriteConvergenceCsv(std::ostream& out, const Metrics& metrics);

// dst,min_hop_length,bfs_shortest,match -- min_hop_length is blank (and
// match false) for a destination no ant reached.
void WriteSummaryCsv(std::ostream& out, const Metrics& metrics,
                     const PhysicalNetwork& net, const SimConfig& config);

// Full per-ant record: round,colony,src,dst,status,hop_count,bad_trail,
// min_overlay_cost,candidate,established.
void WriteAntTraceCsv(std::ostream& out, const Metrics& metrics);

// Per-round counts and C(G) samples.
void WriteRoundsCsv(std::ostream& out, const Metrics& metrics);

// "# overlay round <r>", the link lines, then
// "# total_cost <C(G)> unreachable <pairs>".
void WriteOverlaySnapshot(std::ostream& out, const OverlayNetwork& overlay,
                          Round round, const CostValue& cost);

// JSON manifest: resolved config (graph embedded), fingerprint, version.
// ReadManifest accepts what WriteManifest produces and throws
// std::invalid_argument on anything it cannot use.
std::string ManifestJson(const SimConfig& resolved);
SimConfig ReadManifest(std::istream& in);

EtaDenominator ParseEtaDenominator(std::string_view text);
std::string_view EtaDenominatorName(EtaDenominator d);

}  // namespace dps

#endif  // DPS_REPORT_H
