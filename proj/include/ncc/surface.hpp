// Surface signatures for compact connected nonorientable surfaces and the
// arithmetic that depends only on (genus, boundary): Euler characteristic,
// the dimension range of maximal curve systems, pants counts, and the
// case split of the rigidity statement.
//
// Convention used throughout this library: "genus" of a nonorientable
// surface counts crosscaps.  N_{g,n} is the connected sum of g projective
// planes with n open disks removed, so chi = 2 - g - n.  This differs from
// the orientable convention (where genus counts handles); every signature
// in this codebase is nonorientable, g >= 1.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace ncc {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation is asked to enumerate curves on a surface past
// the configured complexity cap.
class cap_exceeded : public error {
public:
  using error::error;
};

// Exhaustive enumeration is refused for g + n beyond this value; curve
// censuses grow too fast past it and nothing downstream needs them.
inline constexpr int kEnumerationCap = 8;

struct SurfaceSig {
  int genus = 1;     // number of crosscaps, >= 1
  int boundary = 0;  // number of boundary circles, >= 0

  SurfaceSig() = default;
  SurfaceSig(int g, int n) : genus(g), boundary(n) {
    if (g < 1 || n < 0)
      throw error("invalid surface signature (g=" + std::to_string(g) +
                  ", n=" + std::to_string(n) + "): need g >= 1, n >= 0");
  }

  int euler_characteristic() const { return 2 - genus - boundary; }
  int complexity() const { return genus + boundary; }
  bool closed() const { return boundary == 0; }

  bool within_cap(int cap = kEnumerationCap) const { return complexity() <= cap; }
  void require_within_cap(int cap = kEnumerationCap) const {
    if (!within_cap(cap))
      throw cap_exceeded("signature " + str() + " exceeds enumeration cap g+n <= " +
                         std::to_string(cap));
  }

  std::string str() const {
    return "(g=" + std::to_string(genus) + ", n=" + std::to_string(boundary) + ")";
  }

  auto operator<=>(const SurfaceSig&) const = default;
};

// Closed interval [min_dim, max_dim] of dimensions in which maximal curve
// systems (maximal simplices of the curve complex) occur.  The width of the
// interval equals the relevant genus parameter: max_dim - min_dim = g/2
// rounded down, with the even/odd genus offset folded into the endpoints.
struct SimplexDimensionRange {
  int min_dim = 0;
  int max_dim = 0;

  int width() const { return max_dim - min_dim; }
  bool contains(int dim) const { return min_dim <= dim && dim <= max_dim; }
};

// The known formula for the dimensions of maximal simplices requires
// g >= 2 and (g, n) != (2, 0); outside that the complex is degenerate or
// the formula simply is not available, and callers get an error instead of
// a sentinel.
inline SimplexDimensionRange dimension_range(const SurfaceSig& sig) {
  if (sig.genus < 2 || (sig.genus == 2 && sig.boundary == 0))
    throw error("lemma2 inapplicable for signature " + sig.str());
  const int n = sig.boundary;
  if (sig.genus % 2 == 1) {
    const int r = (sig.genus - 1) / 2;
    return {3 * r + n - 2, 4 * r + n - 2};
  }
  const int r = sig.genus / 2;
  return {3 * r + n - 4, 4 * r + n - 4};
}

// Which side of the rigidity statement a signature falls on.  Every
// signature lands in exactly one case.
enum class RigidityCase {
  Covered,    // the listed small signatures, or g + n >= 5
  OpenCase,   // g + n == 4: not settled either way
  Excluded,   // too small to carry the statement
};

inline RigidityCase rigidity_case(const SurfaceSig& sig) {
  const int g = sig.genus, n = sig.boundary;
  const bool listed = (g == 1 && n == 0) || (g == 1 && n == 1) || (g == 2 && n == 0) ||
                      (g == 2 && n == 1) || (g == 3 && n == 0);
  if (listed || g + n >= 5) return RigidityCase::Covered;
  if (g + n == 4) return RigidityCase::OpenCase;
  return RigidityCase::Excluded;
}

inline const char* to_string(RigidityCase c) {
  switch (c) {
    case RigidityCase::Covered: return "covered";
    case RigidityCase::OpenCase: return "open";
    case RigidityCase::Excluded: return "excluded";
  }
  return "?";
}

// Number of pairs of pants in any pants decomposition: each pants carries
// chi = -1, so the count is -chi = g + n - 2.  Surfaces with chi >= 0 have
// no pants decomposition at all.
inline int pants_count(const SurfaceSig& sig) {
  if (sig.euler_characteristic() >= 0)
    throw error("no pants decomposition exists for " + sig.str() +
                " (euler characteristic " + std::to_string(sig.euler_characteristic()) + ")");
  return sig.genus + sig.boundary - 2;
}

// Curve count identity for a pants decomposition with k2 two-sided and k1
// one-sided members: 2*k2 + k1 = 3g + 2n - 6.
inline int pants_side_budget(const SurfaceSig& sig) {
  return 3 * sig.genus + 2 * sig.boundary - 6;
}

}  // namespace ncc
