#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Failure kinds surfaced by the library.  The CLI maps these to exit code 3;
// everything else (malformed flags, unparsable input) is a usage error.
enum class errc {
  not_finite_type,
  unknown_root,
  mixed_systems,
  not_comparable,
  not_reduced,
  not_minimal_rep,
  index_out_of_range,
  not_a_buckle,
  not_in_schubert,
  point_not_in_graph,
  unsupported_parabolic,
  unsupported_rank,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_finite_type: return "NotFiniteType";
    case errc::unknown_root: return "UnknownRoot";
    case errc::mixed_systems: return "MixedSystems";
    case errc::not_comparable: return "NotComparable";
    case errc::not_reduced: return "NotReduced";
    case errc::not_minimal_rep: return "NotMinimalRep";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_a_buckle: return "NotABuckle";
    case errc::not_in_schubert: return "NotInSchubert";
    case errc::point_not_in_graph: return "PointNotInGraph";
    case errc::unsupported_parabolic: return "UnsupportedParabolic";
    case errc::unsupported_rank: return "UnsupportedRank";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace schubert
