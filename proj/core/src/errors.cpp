#include "gsp/errors.hpp"

namespace gsp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::self_loop: return "SelfLoop";
    case Errc::conflicting_duplicate_edge: return "ConflictingDuplicateEdge";
    case Errc::duplicate_station_id: return "DuplicateStationId";
    case Errc::invalid_coordinate: return "InvalidCoordinate";
    case Errc::isolated_vertex_in_normalized: return "IsolatedVertexInNormalized";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::size_out_of_range: return "SizeOutOfRange";
    case Errc::empty_complement: return "EmptyComplement";
    case Errc::set_mismatch: return "SetMismatch";
    case Errc::invalid_tolerance: return "InvalidTolerance";
    case Errc::parse_error: return "ParseError";
    case Errc::eigensolver_failure: return "EigensolverFailure";
    case Errc::rank_norm_disagreement: return "RankNormDisagreement";
    case Errc::condition_violated: return "ConditionViolated";
    case Errc::singular_system: return "SingularSystem";
    case Errc::no_valid_trials: return "NoValidTrials";
  }
  return "Unknown";
}

}  // namespace gsp
